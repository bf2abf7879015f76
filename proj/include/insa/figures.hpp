#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "insa/constants.hpp"

namespace insa {

struct FigureSeries {
  std::string name;
  std::optional<Offsets> offsets;  // empty for offset-independent curves
  std::vector<double> values;
};

/// Plot data over pressure altitude: Hp in km in the first column, one
/// ordinate column per series.
struct FigureTable {
  std::string id;
  std::string title;
  std::string unit;  // ordinate unit
  std::vector<double> hp_km;
  std::vector<FigureSeries> series;
};

std::span<const std::string_view> figure_ids();

/// Samples Hp in [0, 15] km every 0.1 km. Throws InvalidArgument for an
/// unknown id.
FigureTable make_figure(std::string_view id);

/// Tab-separated, '#'-prefixed metadata lines followed by data rows.
/// Output is locale-independent and deterministic.
void write_figure(std::ostream& out, const FigureTable& table);

}  // namespace insa
