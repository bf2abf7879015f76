// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Usage: insa_acceptance [path-to-insa-cli]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "insa/constants.hpp"
#include "insa/figures.hpp"
#include "insa/format.hpp"
#include "insa/geodesy.hpp"
#include "insa/offset_field.hpp"
#include "insa/offset_identification.hpp"
#include "insa/quasi_static.hpp"
#include "insa/static_atmosphere.hpp"
#include "support.hpp"

using namespace insa;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

template <typename Fn>
void criterion(int number, const char* name, Fn&& fn) {
  Outcome out;
  try {
    out = fn();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  if (!out.pass) ++failures;
  std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << "AC" << number << ' ' << name;
  if (!out.detail.empty()) std::cout << " -- " << out.detail;
  std::cout << std::endl;
}

std::string sci(double v) { return format_significant(v, 3); }

// 40-digit evaluation of p0 (1 + betaT Hp_trop / T0)^gbr
constexpr double kPtropReference = 22632.040095007799;

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
  const IsaConstants& c = constants();

  criterion(1, "standard MSL reproduction", [&] {
    const AtmosphericState s = state_at_geopotential(0.0, Offsets{});
    const bool ok = s.p == 101325.0 && s.T == 288.15 && std::abs(s.rho - 1.225) < 1e-4;
    return Outcome{ok, "p=" + format_shortest(s.p) + " T=" + format_shortest(s.T) + " rho=" + format_shortest(s.rho)};
  });

  criterion(2, "tropopause values", [&] {
    const double T = standard_temperature_from_hp(11000.0);
    const double p = pressure_from_hp(11000.0);
    const bool ok = std::abs(T - 216.65) < 1e-9 && std::abs(p - kPtropReference) < 0.5;
    return Outcome{ok, "T_isa=" + format_shortest(T) + " p=" + format_shortest(p)};
  });

  criterion(3, "ISA convergence H = Hp", [&] {
    test::Rng rng(101);
    const AtmosphereAnchors a = anchors({});
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
      const double Hp = rng.uniform(kHpMin, kHpMax);
      worst = std::max(worst, std::abs(geopotential_from_hp(Hp, a) - Hp));
    }
    return Outcome{worst < 1e-9, "max |H-Hp|=" + sci(worst) + " m"};
  });

  criterion(4, "round-trip inversions Hp<->p, Hp<->H", [&] {
    test::Rng rng(102);
    double worst_p = 0.0;
    double worst_H = 0.0;
    int worst_iter = 0;
    for (int i = 0; i < 10000; ++i) {
      const double Hp = rng.uniform(kHpMin, kHpMax);
      const AtmosphereAnchors a = anchors(rng.offsets(20.0, 5000.0));
      worst_p = std::max(worst_p, std::abs(hp_from_pressure(pressure_from_hp(Hp)) - Hp));
      const HpInversion inv = invert_geopotential(geopotential_from_hp(Hp, a), a);
      worst_H = std::max(worst_H, std::abs(inv.Hp - Hp));
      worst_iter = std::max(worst_iter, inv.iterations);
    }
    const bool ok = worst_p < 1e-6 && worst_H < 1e-6 && worst_iter <= 10;
    return Outcome{ok, "max err p=" + sci(worst_p) + " m, H=" + sci(worst_H) +
                           " m, max Newton iterations=" + std::to_string(worst_iter)};
  });

  criterion(5, "offset identification round trip", [&] {
    test::Rng rng(103);
    double worst_T = 0.0;
    double worst_p = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const Offsets truth = rng.offsets(20.0, 5000.0);
      const Offsets got = identify_offsets(test::observe(truth, rng.uniform(0.0, 4000.0)));
      worst_T = std::max(worst_T, std::abs(got.delta_T - truth.delta_T));
      worst_p = std::max(worst_p, std::abs(got.delta_p - truth.delta_p));
    }
    return Outcome{worst_T < 1e-7 && worst_p < 1e-6, "max err dT=" + sci(worst_T) + " K, dp=" + sci(worst_p) + " Pa"};
  });

  criterion(6, "figure properties (parallel lines, common intercept, gradient step)", [&] {
    std::vector<double> hp;
    for (int i = 0; i <= 220; ++i) hp.push_back(-2000.0 + 100.0 * i);

    double spread = 0.0;
    const std::vector<double> dps{-5000.0, -2500.0, 0.0, 2500.0, 5000.0};
    for (double dp1 : dps) {
      for (double dp2 : dps) {
        const AtmosphereAnchors a1 = anchors({0.0, dp1});
        const AtmosphereAnchors a2 = anchors({0.0, dp2});
        double lo = INFINITY;
        double hi = -INFINITY;
        for (double x : hp) {
          const double d = geopotential_from_hp(x, a1) - geopotential_from_hp(x, a2);
          lo = std::min(lo, d);
          hi = std::max(hi, d);
        }
        spread = std::max(spread, hi - lo);
      }
    }

    double intercept = 0.0;
    for (double dp : dps) {
      const double Hp_msl = anchors({0.0, dp}).Hp_msl;
      for (double dT : {-20.0, -10.0, 0.0, 10.0, 20.0}) {
        intercept = std::max(intercept, std::abs(geopotential_from_hp(Hp_msl, Offsets{dT, dp})));
      }
    }

    bool step = true;
    for (double x : hp) step = step && temperature_gradient_hp(x) == (x <= c.Hp_trop ? -6.5e-3 : 0.0);
    step = step && temperature_gradient_hp(std::nextafter(c.Hp_trop, 2e4)) == 0.0;

    const bool ok = spread < 1e-9 && intercept < 1e-6 && step;
    return Outcome{ok, "spread=" + sci(spread) + " m, |H(Hp_msl)|=" + sci(intercept) +
                           " m, step=" + (step ? "ok" : "broken")};
  });

  criterion(7, "derivatives vs central differences", [&] {
    test::Rng rng(104);
    constexpr double eps = 0.01;
    double worst = 0.0;
    int points = 0;
    while (points < 1000) {
      const AtmosphereAnchors a = anchors(rng.offsets(20.0, 5000.0));
      const double Hp = rng.uniform(kHpMin + 1.0, kHpMax - 1.0);
      if (std::abs(Hp - c.Hp_trop) < 1.0) continue;
      ++points;
      const double H = geopotential_from_hp(Hp, a);

      const double dH = test::central_difference([&](double x) { return geopotential_from_hp(x, a); }, Hp, eps);
      worst = std::max(worst, test::relative_error(d_geopotential_d_hp(Hp, a), dH));

      const VerticalGradients g = vertical_gradients(H, a);
      auto fd = [&](double AtmosphericState::*m) {
        return test::central_difference([&](double x) { return state_at_geopotential(x, a).*m; }, H, eps);
      };
      worst = std::max(worst, test::relative_error(g.dp_dH, fd(&AtmosphericState::p)));
      worst = std::max(worst, test::relative_error(g.drho_dH, fd(&AtmosphericState::rho)));
      const double fdT = fd(&AtmosphericState::T);
      // the isothermal layer has an exactly zero gradient; compare absolutely there
      worst = std::max(worst, g.dT_dH == 0.0 ? std::abs(fdT) : test::relative_error(g.dT_dH, fdT));
    }
    return Outcome{worst < 1e-6, "max rel err=" + sci(worst) + " over " + std::to_string(points) + " points"};
  });

  criterion(8, "continuity at the tropopause", [&] {
    const double below = std::nextafter(c.Hp_trop, 0.0);
    const double above = std::nextafter(c.Hp_trop, 2e4);
    double worst = 0.0;
    for (double dT : {-20.0, 0.0, 20.0}) {
      for (double dp : {-5000.0, 0.0, 5000.0}) {
        const AtmosphereAnchors a = anchors({dT, dp});
        const AtmosphericState lo = state_at_hp(below, a);
        const AtmosphericState hi = state_at_hp(above, a);
        for (auto m : {&AtmosphericState::p, &AtmosphericState::T, &AtmosphericState::H, &AtmosphericState::rho}) {
          worst = std::max(worst, test::relative_error(hi.*m, lo.*m));
        }
      }
    }
    return Outcome{worst < 1e-9, "max rel jump=" + sci(worst)};
  });

  criterion(9, "quasi-static rates at standard MSL", [&] {
    const QuasiStaticModel model(OffsetField::constant({}));
    const double h_dot = 1.0;
    const PropertyRates r = model.property_rates(0.0, GeodeticPosition(0.0, 0.0, 0.0), h_dot);
    const double expected = -c.rho0 * c.g0;
    // simulated climb through h = 0 sampled every second
    const double before = model.query(-1.0, GeodeticPosition(0.0, 0.0, -h_dot)).p;
    const double after = model.query(1.0, GeodeticPosition(0.0, 0.0, h_dot)).p;
    const double fd = (after - before) / 2.0;
    const bool ok = std::abs(r.dp_dt - expected) < 1e-3 && test::relative_error(r.dp_dt, fd) < 1e-5;
    return Outcome{ok, "dp/dt=" + format_shortest(r.dp_dt) + " Pa/s, -rho0 g0=" + format_shortest(expected) +
                           ", centered diff=" + format_shortest(fd)};
  });

  criterion(10, "grid interpolation on a 3x4x3 grid", [&] {
    constexpr double pi = std::numbers::pi;
    const std::vector<double> t{0.0, 1800.0, 3600.0};
    const std::vector<double> lam{0.25, 1.5, 3.0, 5.0};
    const std::vector<double> phi{-0.6, 0.1, 0.9};
    std::vector<Offsets> values;
    for (int i = 0; i < 36; ++i) values.push_back({-18.0 + i, -4500.0 + 250.0 * ((i * 7) % 36)});
    const OffsetGrid3D grid(t, lam, phi, values);

    bool nodes = true;
    for (std::size_t it = 0; it < 3; ++it)
      for (std::size_t il = 0; il < 4; ++il)
        for (std::size_t ip = 0; ip < 3; ++ip)
          nodes = nodes && grid.evaluate(t[it], lam[il], phi[ip]) == values[(it * 4 + il) * 3 + ip];

    const OffsetGrid3D flat(t, lam, phi, std::vector<Offsets>(36, Offsets{10.0, 2500.0}));
    test::Rng rng(105);
    double flat_err = 0.0;
    double wrap_err = 0.0;
    for (int i = 0; i < 2000; ++i) {
      const double tq = rng.uniform(0.0, 3600.0);
      const double lq = rng.uniform(0.0, 2.0 * pi);
      const double pq = rng.uniform(-0.6, 0.9);
      const Offsets f = flat.evaluate(tq, lq, pq);
      flat_err = std::max({flat_err, std::abs(f.delta_T - 10.0), std::abs(f.delta_p - 2500.0) / 2500.0});
      const Offsets a = grid.evaluate(tq, lq, pq);
      const Offsets b = grid.evaluate(tq, lq + 2.0 * pi, pq);
      wrap_err = std::max({wrap_err, std::abs(a.delta_T - b.delta_T), std::abs(a.delta_p - b.delta_p) / 4500.0});
    }
    const bool ok = nodes && flat_err < 1e-12 && wrap_err < 1e-12;
    return Outcome{ok, std::string("nodes ") + (nodes ? "exact" : "mismatch") + ", constant-field err=" + sci(flat_err) +
                           ", wrap err=" + sci(wrap_err)};
  });

  criterion(11, "figure command determinism and speed", [&] {
    if (argc < 2) return Outcome{false, "path to the insa CLI not given"};
    const std::filesystem::path cli = argv[1];
    const std::filesystem::path root = std::filesystem::temp_directory_path() / "insa_acceptance_figures";
    std::filesystem::remove_all(root);
    double slowest = 0.0;
    for (const char* run : {"a", "b"}) {
      const std::string cmd = "\"" + cli.string() + "\" figure --all --dir \"" + (root / run).string() + "\" 2>/dev/null";
      const auto start = std::chrono::steady_clock::now();
      if (std::system(cmd.c_str()) != 0) return Outcome{false, "command failed: " + cmd};
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
      slowest = std::max(slowest, elapsed.count());
    }
    bool identical = true;
    std::string first_diff;
    for (std::string_view id : figure_ids()) {
      const std::string name = std::string(id) + ".txt";
      const std::string a = read_file(root / "a" / name);
      if (a.empty() || a != read_file(root / "b" / name)) {
        identical = false;
        if (first_diff.empty()) first_diff = name;
      }
    }
    std::filesystem::remove_all(root);
    const bool ok = identical && slowest < 5.0;
    return Outcome{ok, std::to_string(figure_ids().size()) + " tables " +
                           (identical ? "byte-identical" : "differ at " + first_diff) +
                           ", slowest suite run=" + sci(slowest) + " s"};
  });

  std::cout << (failures == 0 ? "all acceptance criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
