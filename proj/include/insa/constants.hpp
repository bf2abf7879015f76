#pragma once

namespace insa {

/// Physical constants of the ICAO standard atmosphere, SI units throughout.
struct IsaConstants {
  double g0;           // standard free-fall acceleration [m/s^2]
  double RE;           // Earth nominal radius [m]
  double p0;           // standard MSL pressure [Pa]
  double T0;           // standard MSL temperature [K]
  double rho0;         // standard MSL density [kg/m^3]
  double R;            // specific air constant [m^2/(K s^2)]
  double Hp_trop;      // tropopause pressure altitude [m]
  double betaT_below;  // troposphere temperature gradient [K/m]
  double betaT_above;  // stratosphere temperature gradient [K/m]
  double gbr;          // g0 / (-betaT_below * R) [-]
};

inline constexpr IsaConstants make_constants() {
  IsaConstants c{};
  c.g0 = 9.80665;
  c.RE = 6356766.0;
  c.p0 = 101325.0;
  c.T0 = 288.15;
  c.rho0 = 1.225;
  c.R = 287.05287;
  c.Hp_trop = 11000.0;
  c.betaT_below = -6.5e-3;
  c.betaT_above = 0.0;
  c.gbr = c.g0 / (-c.betaT_below * c.R);
  return c;
}

inline constexpr IsaConstants kIsa = make_constants();

inline constexpr const IsaConstants& constants() noexcept { return kIsa; }

/// Pressure-altitude validity range of the two-layer model [m].
inline constexpr double kHpMin = -2000.0;
inline constexpr double kHpMax = 20000.0;

/// Temperature and pressure offsets identifying one static non-standard
/// atmosphere. T = T_isa + delta_T everywhere, p_msl = p0 + delta_p.
struct Offsets {
  double delta_T = 0.0;  // [K]
  double delta_p = 0.0;  // [Pa]

  friend constexpr bool operator==(const Offsets&, const Offsets&) = default;
};

struct OffsetBounds {
  double delta_T_min = -50.0;
  double delta_T_max = 50.0;
  double delta_p_min = -15000.0;
  double delta_p_max = 15000.0;
};

/// Returns the offsets unchanged or throws OutOfValidityRange / NonPhysical.
Offsets validate_offsets(const Offsets& offsets, const OffsetBounds& bounds = {});

/// Bundled properties at one point. Built only through the static atmosphere
/// operations, which keep p = rho R T and T = T_isa + delta_T.
struct AtmosphericState {
  double Hp;     // pressure altitude [m]
  double H;      // geopotential altitude [m]
  double p;      // [Pa]
  double T;      // [K]
  double T_isa;  // [K]
  double rho;    // [kg/m^3]
};

}  // namespace insa
