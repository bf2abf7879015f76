#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "insa/offset_field.hpp"
#include "insa/offset_identification.hpp"

namespace insa {

inline constexpr std::string_view kGridHeader = "t_s,lon_deg,lat_deg,delta_t_k,delta_p_pa";
inline constexpr std::string_view kObservationHeader = "t_s,lon_deg,lat_deg,h_m,p_pa,t_k";

/// Parses a grid file. Rows may come in any order, but the values of each
/// axis, taken in order of first appearance, must be strictly increasing.
/// Throws ParseError, IncompleteGrid or NonMonotonicAxis.
OffsetGrid3D load_grid(std::istream& in, const OffsetBounds& bounds = {});
OffsetGrid3D load_grid_file(const std::filesystem::path& path, const OffsetBounds& bounds = {});

/// Writes the grid in file order t, lon, lat (lat fastest).
void write_grid(std::ostream& out, const OffsetGrid3D& grid);

std::vector<Observation> load_observations(std::istream& in);
std::vector<Observation> load_observations_file(const std::filesystem::path& path);

struct GridAxes {
  std::vector<double> t;       // [s]
  std::vector<double> lambda;  // [rad]
  std::vector<double> phi;     // [rad]
};

/// Identifies offsets per observation, assigns each to its nearest node
/// (per axis, longitude periodic) and averages per node. Throws EmptyNode
/// when a node receives nothing; identification errors propagate.
OffsetGrid3D grid_from_observations(std::span<const Observation> observations, const GridAxes& axes,
                                    const OffsetBounds& bounds = {});

}  // namespace insa
