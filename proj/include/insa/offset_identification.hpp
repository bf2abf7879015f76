#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "insa/constants.hpp"
#include "insa/error.hpp"

namespace insa {

/// Ground measurement of pressure and temperature at a known place and time.
struct Observation {
  double t;       // [s]
  double lambda;  // longitude [rad]
  double phi;     // latitude [rad]
  double h;       // geodetic altitude [m]
  double p;       // [Pa]
  double T;       // [K]
};

/// Recovers (delta_T, delta_p) from one tropospheric observation.
/// Throws NotInTroposphere when the observed pressure altitude is within 1 m
/// of the tropopause or above it.
Offsets identify_offsets(const Observation& obs, const OffsetBounds& bounds = {});

struct IdentifiedOffsets {
  double t;
  double lambda;
  double phi;
  std::optional<Offsets> offsets;  // empty when identification failed
  std::optional<ErrorKind> error;
  std::string message;

  bool ok() const noexcept { return offsets.has_value(); }
};

/// Element-wise identify_offsets; a failing record yields an error entry and
/// does not abort the batch. Output order matches input order.
std::vector<IdentifiedOffsets> identify_offsets_batch(std::span<const Observation> observations,
                                                      const OffsetBounds& bounds = {});

}  // namespace insa
