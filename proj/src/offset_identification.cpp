#include "insa/offset_identification.hpp"

#include <cmath>
#include <sstream>

#include "insa/geodesy.hpp"
#include "insa/static_atmosphere.hpp"

namespace insa {

namespace {

constexpr double kTropopauseBand = 1.0;  // [m]

}  // namespace

Offsets identify_offsets(const Observation& obs, const OffsetBounds& bounds) {
  const IsaConstants& c = constants();
  if (!(std::isfinite(obs.p) && obs.p > 0.0) || !(std::isfinite(obs.T) && obs.T > 0.0)) {
    throw Error(ErrorKind::OutOfValidityRange, "observation needs finite p > 0 and T > 0");
  }

  // 1. geodetic to geopotential altitude
  const double H = geodetic_to_geopotential(obs.h);

  // 2. pressure altitude and standard temperature, troposphere expressions
  const double Hp = c.T0 / c.betaT_below * (std::pow(obs.p / c.p0, 1.0 / c.gbr) - 1.0);
  if (Hp >= c.Hp_trop - kTropopauseBand) {
    std::ostringstream msg;
    msg << "observed pressure " << obs.p << " Pa gives pressure altitude " << Hp
        << " m, not below the tropopause (" << c.Hp_trop << " m) by at least " << kTropopauseBand << " m";
    throw Error(ErrorKind::NotInTroposphere, msg.str());
  }
  if (Hp < kHpMin) {
    std::ostringstream msg;
    msg << "observed pressure " << obs.p << " Pa gives pressure altitude " << Hp << " m below " << kHpMin << " m";
    throw Error(ErrorKind::OutOfValidityRange, msg.str());
  }
  const double T_isa = c.T0 + c.betaT_below * Hp;

  // 3. temperature offset
  const double delta_T = obs.T - T_isa;

  // 4. standard temperature at mean sea level
  const double T_isa_msl = solve_tisa_msl(T_isa, H, delta_T).T_isa_msl;

  // 5.-7. mean sea level pressure altitude, pressure and pressure offset
  const double Hp_msl = (T_isa_msl - c.T0) / c.betaT_below;
  const double p_msl = c.p0 * std::pow(1.0 + c.betaT_below / c.T0 * Hp_msl, c.gbr);
  return validate_offsets({delta_T, p_msl - c.p0}, bounds);
}

std::vector<IdentifiedOffsets> identify_offsets_batch(std::span<const Observation> observations,
                                                      const OffsetBounds& bounds) {
  std::vector<IdentifiedOffsets> out;
  out.reserve(observations.size());
  for (const Observation& obs : observations) {
    IdentifiedOffsets entry{obs.t, obs.lambda, obs.phi, std::nullopt, std::nullopt, {}};
    try {
      entry.offsets = identify_offsets(obs, bounds);
    } catch (const Error& e) {
      entry.error = e.kind();
      entry.message = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace insa
