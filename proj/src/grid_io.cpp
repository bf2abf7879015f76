#include "insa/grid_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>

#include "insa/error.hpp"
#include "insa/format.hpp"
#include "insa/geodesy.hpp"

namespace insa {

namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  std::ostringstream msg;
  msg << "line " << line << ": " << what;
  throw Error(ErrorKind::ParseError, msg.str());
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view field, std::size_t line) {
  field = trim(field);
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || end != field.data() + field.size() || !std::isfinite(value)) {
    parse_error(line, "malformed number '" + std::string(field) + "'");
  }
  return value;
}

// Reads header and rows of a fixed-width CSV; callback receives the parsed
// numeric fields of each non-empty row.
template <std::size_t N, typename Row>
void read_csv(std::istream& in, std::string_view header, Row&& row) {
  std::string line;
  std::size_t number = 0;
  if (!std::getline(in, line)) parse_error(1, "missing header");
  ++number;
  std::string_view head = trim(line);
  if (head.starts_with("\xEF\xBB\xBF")) head.remove_prefix(3);
  if (head != header) parse_error(number, "header must be '" + std::string(header) + "'");

  while (std::getline(in, line)) {
    ++number;
    std::string_view rest = trim(line);
    if (rest.empty()) continue;
    std::array<double, N> fields{};
    std::size_t count = 0;
    while (true) {
      const auto comma = rest.find(',');
      if (count == N) parse_error(number, "too many fields");
      fields[count++] = parse_number(rest.substr(0, comma), number);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (count != N) parse_error(number, "expected " + std::to_string(N) + " fields");
    row(fields, number);
  }
}

// Distinct values of one axis, sorted; rows may arrive in any order.
struct AxisBuilder {
  std::map<double, std::size_t> index;

  void add(double v) { index.emplace(v, 0); }

  std::vector<double> finish(const char* name) {
    if (index.size() < 2) {
      throw Error(ErrorKind::IncompleteGrid, std::string(name) + " axis needs at least two distinct values");
    }
    std::vector<double> values;
    for (auto& [v, i] : index) {
      i = values.size();
      values.push_back(v);
    }
    return values;
  }

  std::size_t at(double v) const { return index.at(v); }
};

std::size_t nearest(const std::vector<double>& axis, double x) {
  auto it = std::lower_bound(axis.begin(), axis.end(), x);
  if (it == axis.begin()) return 0;
  if (it == axis.end()) return axis.size() - 1;
  const std::size_t hi = static_cast<std::size_t>(it - axis.begin());
  return (x - axis[hi - 1] <= axis[hi] - x) ? hi - 1 : hi;
}

std::size_t nearest_periodic(const std::vector<double>& axis, double lambda) {
  const double lam = normalize_longitude(lambda);
  std::size_t best = 0;
  double best_dist = INFINITY;
  for (std::size_t i = 0; i < axis.size(); ++i) {
    double d = std::abs(lam - axis[i]);
    d = std::min(d, 2.0 * std::numbers::pi - d);
    if (d < best_dist) {
      best_dist = d;
      best = i;
    }
  }
  return best;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  return in;
}

}  // namespace

OffsetGrid3D load_grid(std::istream& in, const OffsetBounds& bounds) {
  struct Row {
    std::array<double, 5> f;
    std::size_t line;
  };
  std::vector<Row> rows;
  AxisBuilder t_axis;
  AxisBuilder lon_axis;
  AxisBuilder lat_axis;

  read_csv<5>(in, kGridHeader, [&](const std::array<double, 5>& f, std::size_t line) {
    if (!(f[1] >= 0.0 && f[1] < 360.0)) parse_error(line, "longitude must lie in [0, 360) degrees");
    if (!(f[2] >= -90.0 && f[2] <= 90.0)) parse_error(line, "latitude must lie in [-90, 90] degrees");
    t_axis.add(f[0]);
    lon_axis.add(f[1]);
    lat_axis.add(f[2]);
    rows.push_back({f, line});
  });

  const std::vector<double> t = t_axis.finish("time");
  const std::vector<double> lon = lon_axis.finish("longitude");
  const std::vector<double> lat = lat_axis.finish("latitude");
  const std::size_t nt = t.size();
  const std::size_t nl = lon.size();
  const std::size_t np = lat.size();

  std::vector<Offsets> values(nt * nl * np);
  std::vector<bool> seen(values.size(), false);
  for (const Row& r : rows) {
    const std::size_t k = (t_axis.at(r.f[0]) * nl + lon_axis.at(r.f[1])) * np + lat_axis.at(r.f[2]);
    if (seen[k]) parse_error(r.line, "duplicate grid node");
    seen[k] = true;
    values[k] = {r.f[3], r.f[4]};
  }
  if (rows.size() != values.size()) {
    std::ostringstream msg;
    msg << "grid has " << rows.size() << " nodes, a complete " << nt << "x" << nl << "x" << np << " grid needs "
        << values.size();
    throw Error(ErrorKind::IncompleteGrid, msg.str());
  }

  std::vector<double> lambda(nl);
  std::vector<double> phi(np);
  std::transform(lon.begin(), lon.end(), lambda.begin(), [](double d) { return d * kDegToRad; });
  std::transform(lat.begin(), lat.end(), phi.begin(), [](double d) { return d * kDegToRad; });
  return OffsetGrid3D(t, std::move(lambda), std::move(phi), std::move(values), bounds);
}

OffsetGrid3D load_grid_file(const std::filesystem::path& path, const OffsetBounds& bounds) {
  auto in = open(path);
  return load_grid(in, bounds);
}

void write_grid(std::ostream& out, const OffsetGrid3D& grid) {
  out << kGridHeader << '\n';
  for (std::size_t it = 0; it < grid.t_axis().size(); ++it) {
    for (std::size_t il = 0; il < grid.lambda_axis().size(); ++il) {
      for (std::size_t ip = 0; ip < grid.phi_axis().size(); ++ip) {
        const Offsets& v = grid.node(it, il, ip);
        out << format_shortest(grid.t_axis()[it]) << ',' << format_shortest(grid.lambda_axis()[il] * kRadToDeg) << ','
            << format_shortest(grid.phi_axis()[ip] * kRadToDeg) << ',' << format_shortest(v.delta_T) << ','
            << format_shortest(v.delta_p) << '\n';
      }
    }
  }
}

std::vector<Observation> load_observations(std::istream& in) {
  std::vector<Observation> out;
  read_csv<6>(in, kObservationHeader, [&](const std::array<double, 6>& f, std::size_t line) {
    if (!(f[2] >= -90.0 && f[2] <= 90.0)) parse_error(line, "latitude must lie in [-90, 90] degrees");
    out.push_back({f[0], normalize_longitude(f[1] * kDegToRad), f[2] * kDegToRad, f[3], f[4], f[5]});
  });
  return out;
}

std::vector<Observation> load_observations_file(const std::filesystem::path& path) {
  auto in = open(path);
  return load_observations(in);
}

OffsetGrid3D grid_from_observations(std::span<const Observation> observations, const GridAxes& axes,
                                    const OffsetBounds& bounds) {
  const std::size_t nt = axes.t.size();
  const std::size_t nl = axes.lambda.size();
  const std::size_t np = axes.phi.size();
  // Axis checks happen in the OffsetGrid3D constructor; nearest() needs them sorted first.
  for (const auto* axis : {&axes.t, &axes.lambda, &axes.phi}) {
    if (axis->size() < 2 || !std::is_sorted(axis->begin(), axis->end())) {
      throw Error(ErrorKind::NonMonotonicAxis, "grid axes need at least two increasing values");
    }
  }

  std::vector<Offsets> sums(nt * nl * np);
  std::vector<std::size_t> counts(sums.size(), 0);
  for (const Observation& obs : observations) {
    const Offsets o = identify_offsets(obs, bounds);
    const std::size_t k = (nearest(axes.t, obs.t) * nl + nearest_periodic(axes.lambda, obs.lambda)) * np +
                          nearest(axes.phi, obs.phi);
    sums[k].delta_T += o.delta_T;
    sums[k].delta_p += o.delta_p;
    ++counts[k];
  }
  for (std::size_t k = 0; k < sums.size(); ++k) {
    if (counts[k] == 0) {
      std::ostringstream msg;
      msg << "grid node (t=" << axes.t[k / (nl * np)] << " s, lon=" << axes.lambda[(k / np) % nl] * kRadToDeg
          << " deg, lat=" << axes.phi[k % np] * kRadToDeg << " deg) received no observation";
      throw Error(ErrorKind::EmptyNode, msg.str());
    }
    const double n = static_cast<double>(counts[k]);
    sums[k] = {sums[k].delta_T / n, sums[k].delta_p / n};
  }
  return OffsetGrid3D(axes.t, axes.lambda, axes.phi, std::move(sums), bounds);
}

}  // namespace insa
