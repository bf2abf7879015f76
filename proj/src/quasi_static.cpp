#include "insa/quasi_static.hpp"

#include <cmath>

#include "insa/error.hpp"

namespace insa {

QuasiStaticModel::QuasiStaticModel(OffsetField field, const OffsetBounds& bounds)
    : field_(std::move(field)), bounds_(bounds) {
  validate_offsets({}, bounds_);
}

Offsets QuasiStaticModel::offsets_at(double t, const GeodeticPosition& position) const {
  return validate_offsets(field_.evaluate(t, position.lambda(), position.phi()), bounds_);
}

AtmosphereAnchors QuasiStaticModel::anchors_for(const Offsets& offsets) const {
  // One entry per thread: consecutive trajectory points usually share the
  // offset pair, and anchors are pure in it.
  thread_local struct {
    bool valid = false;
    Offsets key;
    AtmosphereAnchors value;
  } cache;
  if (!cache.valid || !(cache.key == offsets)) {
    cache.value = anchors(offsets, bounds_);
    cache.key = offsets;
    cache.valid = true;
  }
  return cache.value;
}

AtmosphericState QuasiStaticModel::query(double t, const GeodeticPosition& position) const {
  const Offsets offsets = offsets_at(t, position);
  const double H = geodetic_to_geopotential(position.h());
  return state_at_geopotential(H, anchors_for(offsets));
}

PropertyRates QuasiStaticModel::property_rates(double t, const GeodeticPosition& position, double h_dot) const {
  const Offsets offsets = offsets_at(t, position);
  const double H = geodetic_to_geopotential(position.h());
  const VerticalGradients g = vertical_gradients(H, anchors_for(offsets));
  const double H_dot = d_geopotential_d_geodetic(position.h()) * h_dot;
  return {g.dp_dH * H_dot, g.dT_dH * H_dot, g.drho_dH * H_dot};
}

PropertyRates QuasiStaticModel::finite_difference_rates(double t, const GeodeticPosition& position,
                                                        const PositionRates& rates, double dt) const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw Error(ErrorKind::InvalidArgument, "time step must be positive");
  auto at = [&](double s) {
    return query(t + s, GeodeticPosition(position.lambda() + rates.lambda_dot * s, position.phi() + rates.phi_dot * s,
                                         position.h() + rates.h_dot * s));
  };
  const AtmosphericState lo = at(-0.5 * dt);
  const AtmosphericState hi = at(0.5 * dt);
  return {(hi.p - lo.p) / dt, (hi.T - lo.T) / dt, (hi.rho - lo.rho) / dt};
}

}  // namespace insa
