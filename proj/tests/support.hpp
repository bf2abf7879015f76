#pragma once

// Test-only helpers: seeded generators and oracles that do not go through
// the code paths they check.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>

#include "insa/constants.hpp"
#include "insa/geodesy.hpp"
#include "insa/offset_identification.hpp"
#include "insa/static_atmosphere.hpp"

namespace insa::test {

class Rng {
 public:
  explicit Rng(std::uint64_t seed = 20210114) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }

  Offsets offsets(double dT = 20.0, double dp = 5000.0) { return {uniform(-dT, dT), uniform(-dp, dp)}; }

 private:
  std::mt19937_64 engine_;
};

inline double central_difference(const std::function<double(double)>& f, double x, double eps) {
  return (f(x + eps) - f(x - eps)) / (2.0 * eps);
}

inline double relative_error(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

/// Observation a perfect station at geodetic altitude h would report under
/// the given offsets, produced by the forward model.
inline Observation observe(const Offsets& offsets, double h, double t = 0.0, double lambda = 0.0, double phi = 0.0) {
  const AtmosphericState s = state_at_geopotential(geodetic_to_geopotential(h), offsets);
  return {t, lambda, phi, h, s.p, s.T};
}

}  // namespace insa::test
