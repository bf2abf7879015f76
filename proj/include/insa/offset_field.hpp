#pragma once

#include <cstddef>
#include <functional>
#include <variant>
#include <vector>

#include "insa/constants.hpp"

namespace insa {

/// Offsets known at one time and horizontal position.
struct OffsetWaypoint {
  double t;       // [s]
  double lambda;  // [rad]
  double phi;     // [rad]
  Offsets offsets;
};

struct ConstantField {
  Offsets offsets;
};

/// Offsets vary linearly in time from departure to arrival, clamped outside.
class RouteLinear {
 public:
  RouteLinear(const OffsetWaypoint& departure, const OffsetWaypoint& arrival, const OffsetBounds& bounds = {});

  const OffsetWaypoint& departure() const noexcept { return departure_; }
  const OffsetWaypoint& arrival() const noexcept { return arrival_; }
  Offsets evaluate(double t) const;

 private:
  OffsetWaypoint departure_;
  OffsetWaypoint arrival_;
};

/// Piecewise-linear in time between the two bracketing waypoints, clamped at
/// both ends.
class WaypointPiecewise {
 public:
  explicit WaypointPiecewise(std::vector<OffsetWaypoint> waypoints, const OffsetBounds& bounds = {});

  const std::vector<OffsetWaypoint>& waypoints() const noexcept { return waypoints_; }
  Offsets evaluate(double t) const;

 private:
  std::vector<OffsetWaypoint> waypoints_;
};

/// Rectilinear (t, lambda, phi) grid of offsets with trilinear interpolation.
/// Longitude is periodic: queries between the last longitude node and the
/// first one + 2pi interpolate across the seam.
class OffsetGrid3D {
 public:
  /// `values` is indexed [(it * n_lambda + il) * n_phi + ip].
  OffsetGrid3D(std::vector<double> t, std::vector<double> lambda, std::vector<double> phi,
               std::vector<Offsets> values, const OffsetBounds& bounds = {});

  const std::vector<double>& t_axis() const noexcept { return t_; }
  const std::vector<double>& lambda_axis() const noexcept { return lambda_; }
  const std::vector<double>& phi_axis() const noexcept { return phi_; }
  const std::vector<Offsets>& values() const noexcept { return values_; }

  std::size_t index(std::size_t it, std::size_t il, std::size_t ip) const noexcept {
    return (it * lambda_.size() + il) * phi_.size() + ip;
  }
  const Offsets& node(std::size_t it, std::size_t il, std::size_t ip) const { return values_.at(index(it, il, ip)); }

  /// Throws OutOfDomain when t or phi lies outside its axis.
  Offsets evaluate(double t, double lambda, double phi) const;

 private:
  std::vector<double> t_;
  std::vector<double> lambda_;
  std::vector<double> phi_;
  std::vector<Offsets> values_;
};

/// User-supplied f(t, lambda, phi) -> offsets.
using CustomField = std::function<Offsets(double t, double lambda, double phi)>;

/// The weather part of the model: (t, lambda, phi) -> (delta_T, delta_p).
class OffsetField {
 public:
  using Variant = std::variant<ConstantField, RouteLinear, WaypointPiecewise, OffsetGrid3D, CustomField>;

  OffsetField(ConstantField f) : field_(f) {}
  OffsetField(RouteLinear f) : field_(std::move(f)) {}
  OffsetField(WaypointPiecewise f) : field_(std::move(f)) {}
  OffsetField(OffsetGrid3D f) : field_(std::move(f)) {}
  OffsetField(CustomField f) : field_(std::move(f)) {}

  static OffsetField constant(const Offsets& offsets) { return ConstantField{offsets}; }

  Offsets evaluate(double t, double lambda, double phi) const;

  const Variant& variant() const noexcept { return field_; }
  bool is_constant() const noexcept { return std::holds_alternative<ConstantField>(field_); }

 private:
  Variant field_;
};

}  // namespace insa
