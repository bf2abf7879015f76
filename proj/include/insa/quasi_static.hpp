#pragma once

#include "insa/constants.hpp"
#include "insa/geodesy.hpp"
#include "insa/offset_field.hpp"
#include "insa/static_atmosphere.hpp"

namespace insa {

/// Time derivatives of the atmospheric properties seen along a trajectory,
/// keeping only the vertical term: d/dt ~ d/dH * dH/dt.
struct PropertyRates {
  double dp_dt;    // [Pa/s]
  double dT_dt;    // [K/s]
  double drho_dt;  // [kg/(m^3 s)]
};

/// Rate of change of the geodetic position along a trajectory.
struct PositionRates {
  double lambda_dot = 0.0;  // [rad/s]
  double phi_dot = 0.0;     // [rad/s]
  double h_dot = 0.0;       // [m/s]
};

/// Offset field composed with the static atmosphere: (t, lambda, phi, h) ->
/// (p, T, rho). Immutable; query and property_rates may be called
/// concurrently.
class QuasiStaticModel {
 public:
  explicit QuasiStaticModel(OffsetField field, const OffsetBounds& bounds = {});

  const OffsetField& field() const noexcept { return field_; }
  const OffsetBounds& bounds() const noexcept { return bounds_; }
  const IsaConstants& isa() const noexcept { return constants(); }

  /// Validated offsets of the field at (t, lambda, phi).
  Offsets offsets_at(double t, const GeodeticPosition& position) const;

  AtmosphericState query(double t, const GeodeticPosition& position) const;

  /// `h_dot` is the geodetic climb rate [m/s]; the offsets are frozen at
  /// (t, lambda, phi).
  PropertyRates property_rates(double t, const GeodeticPosition& position, double h_dot) const;

  /// Centered difference of query() over [t - dt/2, t + dt/2] along the
  /// straight path given by `rates`. It keeps the time and horizontal field
  /// variation that property_rates drops, so the two can be compared.
  PropertyRates finite_difference_rates(double t, const GeodeticPosition& position, const PositionRates& rates,
                                        double dt = 1.0) const;

 private:
  AtmosphereAnchors anchors_for(const Offsets& offsets) const;

  OffsetField field_;
  OffsetBounds bounds_;
};

}  // namespace insa
