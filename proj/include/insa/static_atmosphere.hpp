#pragma once

#include "insa/constants.hpp"

namespace insa {

/// Mean-sea-level, standard-mean-sea-level and tropopause values of one
/// non-standard atmosphere. Computed once per offset pair; every point
/// operation below accepts either the anchors or the raw offsets.
struct AtmosphereAnchors {
  Offsets offsets;
  double Hp_msl;      // pressure altitude at H = 0 [m]
  double T_isa_msl;   // [K]
  double T_msl;       // [K]
  double p_msl;       // p0 + delta_p [Pa]
  double H_hp0;       // geopotential altitude at Hp = 0 [m]
  double T_hp0;       // T0 + delta_T [K]
  double Hp_trop;     // [m]
  double H_trop;      // [m]
  double p_trop;      // [Pa]
  double T_isa_trop;  // [K]
  double T_trop;      // [K]
};

/// Validates the offsets against `bounds` and evaluates all anchors.
AtmosphereAnchors anchors(const Offsets& offsets, const OffsetBounds& bounds = {});

// Offset-independent relationships in pressure altitude.
double standard_temperature_from_hp(double Hp);
double pressure_from_hp(double Hp);
double hp_from_pressure(double p);
/// dT/dHp: betaT_below for Hp <= Hp_trop, betaT_above otherwise.
double temperature_gradient_hp(double Hp);
/// dp/dHp = -g0 p / (R T_isa).
double pressure_gradient_hp(double Hp);

double temperature_from_hp(double Hp, const AtmosphereAnchors& a);
double temperature_from_hp(double Hp, const Offsets& offsets);

double geopotential_from_hp(double Hp, const AtmosphereAnchors& a);
double geopotential_from_hp(double Hp, const Offsets& offsets);

/// Result of inverting H(Hp). `iterations` is zero for the closed-form
/// stratosphere branch and counts Newton updates in the troposphere.
struct HpInversion {
  double Hp;
  int iterations;
};

HpInversion invert_geopotential(double H, const AtmosphereAnchors& a);
double hp_from_geopotential(double H, const AtmosphereAnchors& a);
double hp_from_geopotential(double H, const Offsets& offsets);

AtmosphericState state_at_hp(double Hp, const AtmosphereAnchors& a);
AtmosphericState state_at_geopotential(double H, const AtmosphereAnchors& a);
AtmosphericState state_at_geopotential(double H, const Offsets& offsets);

/// dH/dHp = T / T_isa.
double d_geopotential_d_hp(double Hp, const AtmosphereAnchors& a);
double d_geopotential_d_hp(double Hp, const Offsets& offsets);

struct VerticalGradients {
  double dp_dH;    // [Pa/m]
  double dT_dH;    // [K/m]
  double drho_dH;  // [kg/m^4]
};

/// Derivatives with respect to geopotential altitude. Exactly at the
/// tropopause the troposphere branch is returned.
VerticalGradients vertical_gradients(double H, const AtmosphereAnchors& a);
VerticalGradients vertical_gradients(double H, const Offsets& offsets);

struct TisaMslSolution {
  double T_isa_msl;
  int iterations;
};

/// Solves H = (1/betaT) [T_isa - T_isa_msl + delta_T ln(T_isa / T_isa_msl)]
/// for T_isa_msl, given a tropospheric standard temperature, its geopotential
/// altitude and the temperature offset.
TisaMslSolution solve_tisa_msl(double T_isa, double H, double delta_T);

}  // namespace insa
