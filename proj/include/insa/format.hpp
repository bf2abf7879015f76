#pragma once

#include <string>

namespace insa {

// Locale-independent number formatting.

/// Shortest representation that round-trips to the same double.
std::string format_shortest(double value);
/// Fixed notation with `decimals` digits after the point.
std::string format_fixed(double value, int decimals);
/// General notation with `digits` significant figures.
std::string format_significant(double value, int digits);

}  // namespace insa
