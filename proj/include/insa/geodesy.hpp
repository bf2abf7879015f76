#pragma once

namespace insa {

/// Geodetic coordinates. Longitude is wrapped into [0, 2pi) on construction;
/// latitude outside [-pi/2, pi/2] or h <= -RE is rejected.
class GeodeticPosition {
 public:
  GeodeticPosition(double lambda, double phi, double h);

  double lambda() const noexcept { return lambda_; }
  double phi() const noexcept { return phi_; }
  double h() const noexcept { return h_; }

 private:
  double lambda_;
  double phi_;
  double h_;
};

/// Wrap an angle into [0, 2pi).
double normalize_longitude(double lambda);

// Spherical-Earth conversions H = RE h / (RE + h) and its inverse.
double geodetic_to_geopotential(double h);
double geopotential_to_geodetic(double H);

/// dH/dh = RE^2 / (RE + h)^2.
double d_geopotential_d_geodetic(double h);

}  // namespace insa
