#include "insa/constants.hpp"

#include <cmath>
#include <sstream>

#include "insa/error.hpp"

namespace insa {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfValidityRange: return "OutOfValidityRange";
    case ErrorKind::NonPhysical: return "NonPhysical";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotInTroposphere: return "NotInTroposphere";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IncompleteGrid: return "IncompleteGrid";
    case ErrorKind::NonMonotonicAxis: return "NonMonotonicAxis";
    case ErrorKind::EmptyNode: return "EmptyNode";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

Offsets validate_offsets(const Offsets& offsets, const OffsetBounds& bounds) {
  if (!(bounds.delta_T_min <= bounds.delta_T_max) || !(bounds.delta_p_min <= bounds.delta_p_max)) {
    throw Error(ErrorKind::InvalidArgument, "offset bounds must satisfy min <= max");
  }
  if (!std::isfinite(offsets.delta_T) || !std::isfinite(offsets.delta_p)) {
    throw Error(ErrorKind::OutOfValidityRange, "offsets must be finite");
  }
  // Checked before the configurable bounds: no bound may make p_msl <= 0 legal.
  if (offsets.delta_p <= -constants().p0) {
    std::ostringstream msg;
    msg << "delta_p = " << offsets.delta_p << " Pa gives non-positive mean sea level pressure";
    throw Error(ErrorKind::NonPhysical, msg.str());
  }
  auto check = [](double value, double lo, double hi, const char* name, const char* unit) {
    if (value < lo || value > hi) {
      std::ostringstream msg;
      msg << name << " = " << value << ' ' << unit << " outside [" << lo << ", " << hi << "] " << unit;
      throw Error(ErrorKind::OutOfValidityRange, msg.str());
    }
  };
  check(offsets.delta_T, bounds.delta_T_min, bounds.delta_T_max, "delta_T", "K");
  check(offsets.delta_p, bounds.delta_p_min, bounds.delta_p_max, "delta_p", "Pa");
  return offsets;
}

}  // namespace insa
