#include "insa/offset_field.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "insa/error.hpp"
#include "insa/geodesy.hpp"

namespace insa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Offsets lerp(const Offsets& a, const Offsets& b, double w) {
  return {a.delta_T * (1.0 - w) + b.delta_T * w, a.delta_p * (1.0 - w) + b.delta_p * w};
}

void require_increasing(const std::vector<double>& axis, const char* name) {
  if (axis.size() < 2) {
    throw Error(ErrorKind::InvalidArgument, std::string(name) + " axis needs at least two nodes");
  }
  for (std::size_t i = 0; i < axis.size(); ++i) {
    if (!std::isfinite(axis[i])) throw Error(ErrorKind::InvalidArgument, std::string(name) + " axis value not finite");
    if (i > 0 && !(axis[i] > axis[i - 1])) {
      throw Error(ErrorKind::NonMonotonicAxis, std::string(name) + " axis is not strictly increasing");
    }
  }
}

// Cell [i, i + 1] containing x and the weight of node i + 1, or throws.
std::pair<std::size_t, double> bracket(const std::vector<double>& axis, double x, const char* name) {
  if (!(x >= axis.front() && x <= axis.back())) {
    std::ostringstream msg;
    msg << name << " = " << x << " outside grid axis [" << axis.front() << ", " << axis.back() << "]";
    throw Error(ErrorKind::OutOfDomain, msg.str());
  }
  auto it = std::upper_bound(axis.begin(), axis.end(), x);
  std::size_t i = it == axis.begin() ? 0 : static_cast<std::size_t>(it - axis.begin()) - 1;
  i = std::min(i, axis.size() - 2);
  return {i, (x - axis[i]) / (axis[i + 1] - axis[i])};
}

}  // namespace

RouteLinear::RouteLinear(const OffsetWaypoint& departure, const OffsetWaypoint& arrival, const OffsetBounds& bounds)
    : departure_(departure), arrival_(arrival) {
  if (!(arrival.t > departure.t)) throw Error(ErrorKind::InvalidArgument, "route arrival time must follow departure");
  validate_offsets(departure.offsets, bounds);
  validate_offsets(arrival.offsets, bounds);
}

Offsets RouteLinear::evaluate(double t) const {
  const double s = std::clamp((t - departure_.t) / (arrival_.t - departure_.t), 0.0, 1.0);
  return lerp(departure_.offsets, arrival_.offsets, s);
}

WaypointPiecewise::WaypointPiecewise(std::vector<OffsetWaypoint> waypoints, const OffsetBounds& bounds)
    : waypoints_(std::move(waypoints)) {
  if (waypoints_.size() < 2) throw Error(ErrorKind::InvalidArgument, "waypoint field needs at least two waypoints");
  for (std::size_t i = 0; i < waypoints_.size(); ++i) {
    validate_offsets(waypoints_[i].offsets, bounds);
    if (i > 0 && !(waypoints_[i].t > waypoints_[i - 1].t)) {
      throw Error(ErrorKind::NonMonotonicAxis, "waypoint times must be strictly increasing");
    }
  }
}

Offsets WaypointPiecewise::evaluate(double t) const {
  if (t <= waypoints_.front().t) return waypoints_.front().offsets;
  if (t >= waypoints_.back().t) return waypoints_.back().offsets;
  auto it = std::upper_bound(waypoints_.begin(), waypoints_.end(), t,
                             [](double value, const OffsetWaypoint& w) { return value < w.t; });
  const OffsetWaypoint& hi = *it;
  const OffsetWaypoint& lo = *(it - 1);
  return lerp(lo.offsets, hi.offsets, (t - lo.t) / (hi.t - lo.t));
}

OffsetGrid3D::OffsetGrid3D(std::vector<double> t, std::vector<double> lambda, std::vector<double> phi,
                           std::vector<Offsets> values, const OffsetBounds& bounds)
    : t_(std::move(t)), lambda_(std::move(lambda)), phi_(std::move(phi)), values_(std::move(values)) {
  require_increasing(t_, "time");
  require_increasing(lambda_, "longitude");
  require_increasing(phi_, "latitude");
  if (lambda_.front() < 0.0 || lambda_.back() >= kTwoPi) {
    throw Error(ErrorKind::InvalidArgument, "longitude axis must lie in [0, 2pi)");
  }
  if (phi_.front() < -std::numbers::pi / 2.0 || phi_.back() > std::numbers::pi / 2.0) {
    throw Error(ErrorKind::InvalidArgument, "latitude axis must lie in [-pi/2, pi/2]");
  }
  if (values_.size() != t_.size() * lambda_.size() * phi_.size()) {
    throw Error(ErrorKind::IncompleteGrid, "grid value count does not match axis lengths");
  }
  for (const Offsets& v : values_) validate_offsets(v, bounds);
}

Offsets OffsetGrid3D::evaluate(double t, double lambda, double phi) const {
  const auto [it, wt] = bracket(t_, t, "time");
  const auto [ip, wp] = bracket(phi_, phi, "latitude");

  const double lam = normalize_longitude(lambda);
  std::size_t il0 = 0;
  std::size_t il1 = 0;
  double wl = 0.0;
  if (lam >= lambda_.front() && lam < lambda_.back()) {
    auto pos = std::upper_bound(lambda_.begin(), lambda_.end(), lam);
    il0 = static_cast<std::size_t>(pos - lambda_.begin()) - 1;
    il1 = il0 + 1;
    wl = (lam - lambda_[il0]) / (lambda_[il1] - lambda_[il0]);
  } else {
    // cell spanning the seam, from the last node to the first one + 2pi
    il0 = lambda_.size() - 1;
    il1 = 0;
    const double span = lambda_.front() + kTwoPi - lambda_.back();
    const double dist = lam >= lambda_.back() ? lam - lambda_.back() : lam + kTwoPi - lambda_.back();
    wl = dist / span;
  }

  auto at = [&](std::size_t a, std::size_t b, std::size_t c) -> const Offsets& { return values_[index(a, b, c)]; };
  const Offsets c00 = lerp(at(it, il0, ip), at(it + 1, il0, ip), wt);
  const Offsets c01 = lerp(at(it, il0, ip + 1), at(it + 1, il0, ip + 1), wt);
  const Offsets c10 = lerp(at(it, il1, ip), at(it + 1, il1, ip), wt);
  const Offsets c11 = lerp(at(it, il1, ip + 1), at(it + 1, il1, ip + 1), wt);
  const Offsets c0 = lerp(c00, c10, wl);
  const Offsets c1 = lerp(c01, c11, wl);
  return lerp(c0, c1, wp);
}

Offsets OffsetField::evaluate(double t, double lambda, double phi) const {
  return std::visit(
      [&](const auto& f) -> Offsets {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, ConstantField>) {
          return f.offsets;
        } else if constexpr (std::is_same_v<F, RouteLinear> || std::is_same_v<F, WaypointPiecewise>) {
          return f.evaluate(t);
        } else if constexpr (std::is_same_v<F, OffsetGrid3D>) {
          return f.evaluate(t, lambda, phi);
        } else {
          if (!f) throw Error(ErrorKind::InvalidArgument, "custom offset field is empty");
          return f(t, lambda, phi);
        }
      },
      field_);
}

}  // namespace insa
