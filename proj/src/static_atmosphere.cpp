#include "insa/static_atmosphere.hpp"

#include <cmath>
#include <sstream>

#include "insa/error.hpp"

namespace insa {

namespace {

constexpr const IsaConstants& c = kIsa;

// Values a hair outside the range come back from the inversions through
// rounding; accept them rather than reject an endpoint round trip.
constexpr double kHpSlack = 1e-6;

constexpr double kNewtonStepTol = 1e-9;
constexpr int kNewtonMaxIter = 50;

void require_hp(double Hp) {
  if (!(Hp >= kHpMin - kHpSlack && Hp <= kHpMax + kHpSlack)) {
    std::ostringstream msg;
    msg << "pressure altitude " << Hp << " m outside [" << kHpMin << ", " << kHpMax << "] m";
    throw Error(ErrorKind::OutOfValidityRange, msg.str());
  }
}

bool below_tropopause(double Hp) { return Hp <= c.Hp_trop; }

constexpr double T_isa_trop() { return c.T0 + c.betaT_below * c.Hp_trop; }

double p_trop() {
  static const double value = c.p0 * std::pow(1.0 + c.betaT_below / c.T0 * c.Hp_trop, c.gbr);
  return value;
}

// Troposphere formulas, also used by the Newton iteration outside the
// validity check.
double hp_from_pressure_below(double p) {
  return c.T0 / c.betaT_below * (std::pow(p / c.p0, 1.0 / c.gbr) - 1.0);
}

double geopotential_below(double Hp, const AtmosphereAnchors& a) {
  const double& dT = a.offsets.delta_T;
  return Hp - a.Hp_msl + dT / c.betaT_below * std::log((c.T0 + c.betaT_below * Hp) / a.T_isa_msl);
}

double dH_dHp_below(double Hp, const AtmosphereAnchors& a) {
  return 1.0 + a.offsets.delta_T / (c.T0 + c.betaT_below * Hp);
}

}  // namespace

AtmosphereAnchors anchors(const Offsets& offsets, const OffsetBounds& bounds) {
  AtmosphereAnchors a{};
  a.offsets = validate_offsets(offsets, bounds);
  const double dT = offsets.delta_T;

  a.p_msl = c.p0 + offsets.delta_p;
  a.Hp_msl = hp_from_pressure_below(a.p_msl);
  a.T_isa_msl = c.T0 + c.betaT_below * a.Hp_msl;
  a.T_msl = a.T_isa_msl + dT;
  a.T_hp0 = c.T0 + dT;
  a.H_hp0 = -a.Hp_msl + dT / c.betaT_below * std::log(c.T0 / a.T_isa_msl);

  a.Hp_trop = c.Hp_trop;
  a.T_isa_trop = T_isa_trop();
  a.T_trop = a.T_isa_trop + dT;
  a.p_trop = p_trop();
  a.H_trop = c.Hp_trop - a.Hp_msl + dT / c.betaT_below * std::log(a.T_isa_trop / a.T_isa_msl);
  return a;
}

double standard_temperature_from_hp(double Hp) {
  require_hp(Hp);
  if (below_tropopause(Hp)) return c.T0 + c.betaT_below * Hp;
  return T_isa_trop() + c.betaT_above * (Hp - c.Hp_trop);
}

double temperature_gradient_hp(double Hp) {
  require_hp(Hp);
  return below_tropopause(Hp) ? c.betaT_below : c.betaT_above;
}

double pressure_from_hp(double Hp) {
  require_hp(Hp);
  if (below_tropopause(Hp)) return c.p0 * std::pow(1.0 + c.betaT_below / c.T0 * Hp, c.gbr);
  return p_trop() * std::exp(-c.g0 / (c.R * T_isa_trop()) * (Hp - c.Hp_trop));
}

double pressure_gradient_hp(double Hp) {
  return -c.g0 * pressure_from_hp(Hp) / (c.R * standard_temperature_from_hp(Hp));
}

double hp_from_pressure(double p) {
  static const double p_min = pressure_from_hp(kHpMax);
  static const double p_max = pressure_from_hp(kHpMin);
  if (!(p > p_min * (1.0 - 1e-12) && p <= p_max * (1.0 + 1e-12))) {
    std::ostringstream msg;
    msg << "pressure " << p << " Pa outside (" << p_min << ", " << p_max << "] Pa";
    throw Error(ErrorKind::OutOfValidityRange, msg.str());
  }
  if (p >= p_trop()) return hp_from_pressure_below(p);
  return c.Hp_trop - c.R * T_isa_trop() / c.g0 * std::log(p / p_trop());
}

double temperature_from_hp(double Hp, const AtmosphereAnchors& a) {
  return standard_temperature_from_hp(Hp) + a.offsets.delta_T;
}

double temperature_from_hp(double Hp, const Offsets& offsets) {
  return temperature_from_hp(Hp, anchors(offsets));
}

double geopotential_from_hp(double Hp, const AtmosphereAnchors& a) {
  require_hp(Hp);
  if (below_tropopause(Hp)) return geopotential_below(Hp, a);
  return a.H_trop + a.T_trop / a.T_isa_trop * (Hp - c.Hp_trop);
}

double geopotential_from_hp(double Hp, const Offsets& offsets) {
  return geopotential_from_hp(Hp, anchors(offsets));
}

HpInversion invert_geopotential(double H, const AtmosphereAnchors& a) {
  if (!std::isfinite(H)) throw Error(ErrorKind::OutOfValidityRange, "geopotential altitude must be finite");

  HpInversion result{0.0, 0};
  if (H > a.H_trop) {
    result.Hp = c.Hp_trop + a.T_isa_trop / a.T_trop * (H - a.H_trop);
  } else {
    // Newton on H_below(Hp) - H; exact first guess when delta_T = 0.
    double Hp = H + a.Hp_msl;
    bool converged = false;
    while (result.iterations < kNewtonMaxIter) {
      const double step = (geopotential_below(Hp, a) - H) / dH_dHp_below(Hp, a);
      Hp -= step;
      ++result.iterations;
      if (!std::isfinite(Hp)) break;
      if (std::abs(step) < kNewtonStepTol) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      std::ostringstream msg;
      msg << "pressure altitude iteration did not converge for H = " << H << " m";
      throw Error(ErrorKind::NoConvergence, msg.str());
    }
    result.Hp = Hp;
  }
  if (!(result.Hp >= kHpMin - kHpSlack && result.Hp <= kHpMax + kHpSlack)) {
    std::ostringstream msg;
    msg << "geopotential altitude " << H << " m maps to pressure altitude " << result.Hp
        << " m outside [" << kHpMin << ", " << kHpMax << "] m";
    throw Error(ErrorKind::OutOfValidityRange, msg.str());
  }
  return result;
}

double hp_from_geopotential(double H, const AtmosphereAnchors& a) { return invert_geopotential(H, a).Hp; }

double hp_from_geopotential(double H, const Offsets& offsets) {
  return hp_from_geopotential(H, anchors(offsets));
}

namespace {

AtmosphericState state_from(double Hp, double H, const AtmosphereAnchors& a) {
  AtmosphericState s{};
  s.Hp = Hp;
  s.H = H;
  s.T_isa = standard_temperature_from_hp(Hp);
  s.T = s.T_isa + a.offsets.delta_T;
  s.p = pressure_from_hp(Hp);
  s.rho = s.p / (c.R * s.T);
  return s;
}

}  // namespace

AtmosphericState state_at_hp(double Hp, const AtmosphereAnchors& a) {
  return state_from(Hp, geopotential_from_hp(Hp, a), a);
}

AtmosphericState state_at_geopotential(double H, const AtmosphereAnchors& a) {
  return state_from(hp_from_geopotential(H, a), H, a);
}

AtmosphericState state_at_geopotential(double H, const Offsets& offsets) {
  return state_at_geopotential(H, anchors(offsets));
}

double d_geopotential_d_hp(double Hp, const AtmosphereAnchors& a) {
  return temperature_from_hp(Hp, a) / standard_temperature_from_hp(Hp);
}

double d_geopotential_d_hp(double Hp, const Offsets& offsets) {
  return d_geopotential_d_hp(Hp, anchors(offsets));
}

VerticalGradients vertical_gradients(double H, const AtmosphereAnchors& a) {
  const AtmosphericState s = state_at_geopotential(H, a);
  const double beta = H <= a.H_trop ? c.betaT_below : c.betaT_above;
  VerticalGradients g{};
  g.dp_dH = -s.rho * c.g0;
  g.dT_dH = beta * s.T_isa / s.T;
  g.drho_dH = g.dp_dH / (c.R * s.T) - s.p / (c.R * s.T * s.T) * g.dT_dH;
  return g;
}

VerticalGradients vertical_gradients(double H, const Offsets& offsets) {
  return vertical_gradients(H, anchors(offsets));
}

TisaMslSolution solve_tisa_msl(double T_isa, double H, double delta_T) {
  if (!(T_isa > 0.0) || !std::isfinite(H) || !std::isfinite(delta_T)) {
    throw Error(ErrorKind::InvalidArgument, "solve_tisa_msl needs T_isa > 0 and finite H, delta_T");
  }
  const double closed_form = T_isa - c.betaT_below * H;
  if (delta_T == 0.0) return {closed_form, 0};

  // G(x) = (T_isa - x + dT ln(T_isa / x)) / betaT - H, G'(x) = -(1 + dT / x) / betaT
  TisaMslSolution sol{closed_form, 0};
  while (sol.iterations < kNewtonMaxIter) {
    const double x = sol.T_isa_msl;
    const double G = (T_isa - x + delta_T * std::log(T_isa / x)) / c.betaT_below - H;
    const double dG = -(1.0 + delta_T / x) / c.betaT_below;
    const double step = G / dG;
    sol.T_isa_msl = x - step;
    ++sol.iterations;
    if (!(sol.T_isa_msl > 0.0)) break;
    if (std::abs(step) < kNewtonStepTol) return sol;
  }
  std::ostringstream msg;
  msg << "mean sea level standard temperature iteration did not converge (T_isa = " << T_isa
      << " K, H = " << H << " m, delta_T = " << delta_T << " K)";
  throw Error(ErrorKind::NoConvergence, msg.str());
}

}  // namespace insa
