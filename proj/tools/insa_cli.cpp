// Command-line front-end of the INSA atmosphere library.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "insa/constants.hpp"
#include "insa/error.hpp"
#include "insa/figures.hpp"
#include "insa/format.hpp"
#include "insa/geodesy.hpp"
#include "insa/grid_io.hpp"
#include "insa/offset_field.hpp"
#include "insa/offset_identification.hpp"
#include "insa/quasi_static.hpp"
#include "insa/static_atmosphere.hpp"

namespace {

using namespace insa;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitValidity = 3;
constexpr int kExitTroposphere = 4;
constexpr int kExitFile = 5;

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfValidityRange:
    case ErrorKind::NonPhysical:
    case ErrorKind::OutOfDomain: return kExitValidity;
    case ErrorKind::NotInTroposphere: return kExitTroposphere;
    case ErrorKind::ParseError:
    case ErrorKind::IncompleteGrid:
    case ErrorKind::NonMonotonicAxis:
    case ErrorKind::EmptyNode:
    case ErrorKind::Io: return kExitFile;
    case ErrorKind::InvalidArgument: return kExitUsage;
    case ErrorKind::NoConvergence: return kExitInternal;
  }
  return kExitInternal;
}

enum class Format { Human, Csv };

std::string num(double v, Format f) { return f == Format::Csv ? format_shortest(v) : format_significant(v, 6); }

// Offsets either given directly or taken from a grid at (time, lon, lat).
struct OffsetSource {
  double dt = 0.0;
  double dp = 0.0;
  std::string grid;
  double time = 0.0;
  double lon_deg = 0.0;
  double lat_deg = 0.0;

  void add_options(CLI::App* cmd) {
    auto* dt_opt = cmd->add_option("--dt", dt, "temperature offset [K]");
    auto* dp_opt = cmd->add_option("--dp", dp, "pressure offset [Pa]");
    auto* grid_opt = cmd->add_option("--grid", grid, "offset grid file (csv)");
    grid_opt->excludes(dt_opt)->excludes(dp_opt);
    cmd->add_option("--time", time, "time [s] for grid lookups");
    cmd->add_option("--lon", lon_deg, "longitude [deg]");
    cmd->add_option("--lat", lat_deg, "latitude [deg]");
  }

  QuasiStaticModel model() const {
    if (grid.empty()) return QuasiStaticModel(OffsetField::constant({dt, dp}));
    return QuasiStaticModel(OffsetField(load_grid_file(grid)));
  }
};

struct PropsArgs {
  std::optional<double> hp;
  std::optional<double> h_gp;
  std::optional<double> h_geo;
  bool km = false;
  Format format = Format::Human;
  OffsetSource source;
};

int run_props(const PropsArgs& args) {
  const double scale = args.km ? 1000.0 : 1.0;
  const QuasiStaticModel model = args.source.model();
  // Longitude and latitude only matter for grid lookups; altitude is applied below.
  const GeodeticPosition where(args.source.lon_deg * kDegToRad, args.source.lat_deg * kDegToRad, 0.0);
  const AtmosphereAnchors a = anchors(model.offsets_at(args.source.time, where), model.bounds());

  AtmosphericState s{};
  if (args.hp) {
    s = state_at_hp(*args.hp * scale, a);
  } else if (args.h_gp) {
    s = state_at_geopotential(*args.h_gp * scale, a);
  } else {
    s = state_at_geopotential(geodetic_to_geopotential(*args.h_geo * scale), a);
  }
  const double h = geopotential_to_geodetic(s.H);

  if (args.format == Format::Csv) {
    std::cout << "hp_m,h_gp_m,h_geo_m,p_pa,t_k,tisa_k,rho_kgm3,delta_t_k,delta_p_pa\n";
    std::cout << num(s.Hp, Format::Csv) << ',' << num(s.H, Format::Csv) << ',' << num(h, Format::Csv) << ','
              << num(s.p, Format::Csv) << ',' << num(s.T, Format::Csv) << ',' << num(s.T_isa, Format::Csv) << ','
              << num(s.rho, Format::Csv) << ',' << num(a.offsets.delta_T, Format::Csv) << ','
              << num(a.offsets.delta_p, Format::Csv) << '\n';
    return kExitOk;
  }
  const Format f = Format::Human;
  std::cout << "delta_T = " << num(a.offsets.delta_T, f) << " K\n"
            << "delta_p = " << num(a.offsets.delta_p, f) << " Pa\n"
            << "Hp      = " << num(s.Hp, f) << " m\n"
            << "H       = " << num(s.H, f) << " m\n"
            << "h       = " << num(h, f) << " m\n"
            << "p       = " << num(s.p, f) << " Pa\n"
            << "T       = " << num(s.T, f) << " K\n"
            << "T_isa   = " << num(s.T_isa, f) << " K\n"
            << "rho     = " << num(s.rho, f) << " kg/m^3\n";
  return kExitOk;
}

struct IdentifyArgs {
  std::optional<double> h;
  std::optional<double> p;
  std::optional<double> T;
  double time = 0.0;
  double lon_deg = 0.0;
  double lat_deg = 0.0;
  std::string file;
  std::vector<double> grid_t;
  std::vector<double> grid_lon;
  std::vector<double> grid_lat;
  Format format = Format::Human;
};

std::vector<double> to_radians(const std::vector<double>& deg) {
  std::vector<double> out(deg.size());
  for (std::size_t i = 0; i < deg.size(); ++i) out[i] = deg[i] * kDegToRad;
  return out;
}

int run_identify(const IdentifyArgs& args) {
  if (args.file.empty()) {
    if (!args.h || !args.p || !args.T) throw Error(ErrorKind::InvalidArgument, "identify needs --h, --p and --t, or --file");
    const Observation obs{args.time, normalize_longitude(args.lon_deg * kDegToRad), args.lat_deg * kDegToRad, *args.h,
                          *args.p, *args.T};
    const Offsets o = identify_offsets(obs);
    if (args.format == Format::Csv) {
      std::cout << kGridHeader << '\n'
                << num(args.time, Format::Csv) << ',' << num(args.lon_deg, Format::Csv) << ','
                << num(args.lat_deg, Format::Csv) << ',' << num(o.delta_T, Format::Csv) << ','
                << num(o.delta_p, Format::Csv) << '\n';
    } else {
      std::cout << "delta_T = " << num(o.delta_T, Format::Human) << " K\n"
                << "delta_p = " << num(o.delta_p, Format::Human) << " Pa\n";
    }
    return kExitOk;
  }

  const std::vector<Observation> observations = load_observations_file(args.file);
  const bool build_grid = !args.grid_t.empty() || !args.grid_lon.empty() || !args.grid_lat.empty();
  if (build_grid) {
    const GridAxes axes{args.grid_t, to_radians(args.grid_lon), to_radians(args.grid_lat)};
    write_grid(std::cout, grid_from_observations(observations, axes));
    return kExitOk;
  }

  // Successful records go to stdout in grid-file layout; failures to stderr.
  int status = kExitOk;
  std::cout << kGridHeader << '\n';
  const auto results = identify_offsets_batch(observations);
  for (std::size_t i = 0; i < results.size(); ++i) {
    const IdentifiedOffsets& r = results[i];
    if (r.ok()) {
      std::cout << format_shortest(r.t) << ',' << format_shortest(r.lambda * kRadToDeg) << ','
                << format_shortest(r.phi * kRadToDeg) << ',' << format_shortest(r.offsets->delta_T) << ','
                << format_shortest(r.offsets->delta_p) << '\n';
    } else {
      std::cerr << "record " << i + 1 << ": " << to_string(*r.error) << ": " << r.message << '\n';
      if (status == kExitOk) status = exit_code(*r.error);
    }
  }
  return status;
}

struct ConvertArgs {
  double value = 0.0;
  std::string from;
  std::string to;
  double dt = 0.0;
  double dp = 0.0;
  bool km = false;
  Format format = Format::Human;
};

int run_convert(const ConvertArgs& args) {
  const double scale = args.km ? 1000.0 : 1.0;
  const AtmosphereAnchors a = anchors({args.dt, args.dp});

  // everything goes through geopotential altitude
  const double in = args.value * scale;
  double H = 0.0;
  if (args.from == "h") H = geodetic_to_geopotential(in);
  else if (args.from == "H") H = in;
  else H = geopotential_from_hp(in, a);

  double out = 0.0;
  if (args.to == "h") out = args.from == "h" ? in : geopotential_to_geodetic(H);
  else if (args.to == "H") out = H;
  else out = args.from == "Hp" ? in : hp_from_geopotential(H, a);

  if (args.format == Format::Csv) {
    std::cout << args.to << "_m\n" << format_shortest(out) << '\n';
  } else {
    std::cout << args.to << " = " << format_fixed(out, 6) << " m\n";
  }
  return kExitOk;
}

struct FigureArgs {
  std::string id;
  std::string output;
  std::string dir;
  bool all = false;
};

void emit_figure(std::string_view id, const std::filesystem::path& path) {
  const FigureTable table = make_figure(id);
  if (path.empty()) {
    write_figure(std::cout, table);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path.string());
  write_figure(out, table);
  if (!out) throw Error(ErrorKind::Io, "failed writing " + path.string());
}

int run_figure(const FigureArgs& args) {
  if (args.all) {
    const auto start = std::chrono::steady_clock::now();
    const std::filesystem::path dir = args.dir.empty() ? "." : args.dir;
    std::filesystem::create_directories(dir);
    for (std::string_view id : figure_ids()) emit_figure(id, dir / (std::string(id) + ".txt"));
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cerr << figure_ids().size() << " figure tables written to " << dir.string() << " in "
              << format_significant(elapsed.count(), 3) << " s\n";
    return kExitOk;
  }
  if (args.id.empty()) throw Error(ErrorKind::InvalidArgument, "figure needs an id or --all");
  emit_figure(args.id, args.output);
  return kExitOk;
}

int run_grid_validate(const std::string& file) {
  const OffsetGrid3D grid = load_grid_file(file);
  double dT_min = INFINITY, dT_max = -INFINITY, dp_min = INFINITY, dp_max = -INFINITY;
  for (const Offsets& o : grid.values()) {
    dT_min = std::min(dT_min, o.delta_T);
    dT_max = std::max(dT_max, o.delta_T);
    dp_min = std::min(dp_min, o.delta_p);
    dp_max = std::max(dp_max, o.delta_p);
  }
  const auto& t = grid.t_axis();
  const auto& lon = grid.lambda_axis();
  const auto& lat = grid.phi_axis();
  std::cout << "grid ok: " << t.size() << " x " << lon.size() << " x " << lat.size() << " = " << grid.values().size()
            << " nodes\n"
            << "t       [" << format_shortest(t.front()) << ", " << format_shortest(t.back()) << "] s\n"
            << "lon     [" << format_shortest(lon.front() * kRadToDeg) << ", "
            << format_shortest(lon.back() * kRadToDeg) << "] deg\n"
            << "lat     [" << format_shortest(lat.front() * kRadToDeg) << ", "
            << format_shortest(lat.back() * kRadToDeg) << "] deg\n"
            << "delta_T [" << format_shortest(dT_min) << ", " << format_shortest(dT_max) << "] K\n"
            << "delta_p [" << format_shortest(dp_min) << ", " << format_shortest(dp_max) << "] Pa\n";
  return kExitOk;
}

const std::map<std::string, Format> kFormats{{"human", Format::Human}, {"csv", Format::Csv}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"INSA quasi-static non-standard atmosphere"};
  app.require_subcommand(1);

  PropsArgs props;
  auto* props_cmd = app.add_subcommand("props", "atmospheric properties at one altitude");
  {
    auto* hp = props_cmd->add_option("--hp", props.hp, "pressure altitude [m]");
    auto* hgp = props_cmd->add_option("--h-gp", props.h_gp, "geopotential altitude [m]");
    auto* hgeo = props_cmd->add_option("--h-geo", props.h_geo, "geodetic altitude [m]");
    hp->excludes(hgp)->excludes(hgeo);
    hgp->excludes(hgeo);
    props_cmd->add_flag("--km", props.km, "altitudes in km");
    props_cmd->add_option("--format", props.format, "human or csv")->transform(CLI::CheckedTransformer(kFormats))->option_text("human|csv");
    props.source.add_options(props_cmd);
  }

  IdentifyArgs ident;
  auto* ident_cmd = app.add_subcommand("identify", "temperature and pressure offsets from ground observations");
  {
    auto* file = ident_cmd->add_option("--file", ident.file, "observation file (csv)");
    file->excludes(ident_cmd->add_option("--h-geo", ident.h, "geodetic altitude [m]"));
    file->excludes(ident_cmd->add_option("--p", ident.p, "pressure [Pa]"));
    file->excludes(ident_cmd->add_option("--t", ident.T, "temperature [K]"));
    ident_cmd->add_option("--time", ident.time, "observation time [s]");
    ident_cmd->add_option("--lon", ident.lon_deg, "longitude [deg]");
    ident_cmd->add_option("--lat", ident.lat_deg, "latitude [deg]");
    ident_cmd->add_option("--grid-t", ident.grid_t, "build a grid: time axis [s]")->delimiter(',')->needs(file);
    ident_cmd->add_option("--grid-lon", ident.grid_lon, "build a grid: longitude axis [deg]")->delimiter(',')->needs(file);
    ident_cmd->add_option("--grid-lat", ident.grid_lat, "build a grid: latitude axis [deg]")->delimiter(',')->needs(file);
    ident_cmd->add_option("--format", ident.format, "human or csv")->transform(CLI::CheckedTransformer(kFormats))->option_text("human|csv");
  }

  ConvertArgs conv;
  auto* conv_cmd = app.add_subcommand("convert", "convert between geodetic, geopotential and pressure altitude");
  {
    conv_cmd->add_option("--value", conv.value, "altitude [m]")->required();
    conv_cmd->add_option("--from", conv.from, "h, H or Hp")->required()->check(CLI::IsMember({"h", "H", "Hp"}));
    conv_cmd->add_option("--to", conv.to, "h, H or Hp")->required()->check(CLI::IsMember({"h", "H", "Hp"}));
    conv_cmd->add_option("--dt", conv.dt, "temperature offset [K]");
    conv_cmd->add_option("--dp", conv.dp, "pressure offset [Pa]");
    conv_cmd->add_flag("--km", conv.km, "value in km (output stays in m)");
    conv_cmd->add_option("--format", conv.format, "human or csv")->transform(CLI::CheckedTransformer(kFormats))->option_text("human|csv");
  }

  FigureArgs fig;
  auto* fig_cmd = app.add_subcommand("figure", "emit plot data tables");
  {
    auto* id = fig_cmd->add_option("id", fig.id, "figure id");
    auto* all = fig_cmd->add_flag("--all", fig.all, "write every figure table to --dir");
    id->excludes(all);
    fig_cmd->add_option("-o,--output", fig.output, "output file (default stdout)")->excludes(all);
    fig_cmd->add_option("--dir", fig.dir, "output directory for --all")->needs(all);
  }

  std::string grid_file;
  auto* grid_cmd = app.add_subcommand("grid-validate", "check an offset grid file");
  grid_cmd->add_option("file", grid_file, "grid file (csv)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (props_cmd->parsed()) {
      if (!props.hp && !props.h_gp && !props.h_geo) {
        throw Error(ErrorKind::InvalidArgument, "props needs one of --hp, --h-gp, --h-geo");
      }
      return run_props(props);
    }
    if (ident_cmd->parsed()) return run_identify(ident);
    if (conv_cmd->parsed()) return run_convert(conv);
    if (fig_cmd->parsed()) return run_figure(fig);
    if (grid_cmd->parsed()) return run_grid_validate(grid_file);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
