#include "insa/figures.hpp"

#include <array>
#include <functional>
#include <ostream>

#include "insa/error.hpp"
#include "insa/format.hpp"
#include "insa/static_atmosphere.hpp"

namespace insa {

namespace {

constexpr std::array<std::string_view, 9> kIds = {"dTdHp", "dpdHp", "Tisa", "T_dT", "dHdHp_dT",
                                                  "p", "H_dT", "H_dp", "H_dTdp"};

constexpr int kSamples = 151;  // 0 to 15 km by 0.1 km

constexpr std::array<double, 5> kDeltaT = {-20.0, -10.0, 0.0, 10.0, 20.0};
constexpr std::array<double, 5> kDeltaP = {-5000.0, -2500.0, 0.0, 2500.0, 5000.0};
constexpr std::array<Offsets, 5> kPairs = {
    Offsets{-20.0, -5000.0}, Offsets{-20.0, 5000.0}, Offsets{0.0, 0.0}, Offsets{20.0, -5000.0}, Offsets{20.0, 5000.0}};

std::string offsets_name(const Offsets& o, bool with_T, bool with_p) {
  std::string name;
  if (with_T) name += "dT=" + format_shortest(o.delta_T) + "K";
  if (with_T && with_p) name += ",";
  if (with_p) name += "dp=" + format_shortest(o.delta_p) + "Pa";
  return name;
}

using Curve = std::function<double(double Hp, const AtmosphereAnchors&)>;

FigureSeries sample(std::string name, std::optional<Offsets> offsets, const std::vector<double>& hp_m,
                    const Curve& curve) {
  const AtmosphereAnchors a = anchors(offsets.value_or(Offsets{}));
  FigureSeries s{std::move(name), offsets, {}};
  s.values.reserve(hp_m.size());
  for (double Hp : hp_m) s.values.push_back(curve(Hp, a));
  return s;
}

}  // namespace

std::span<const std::string_view> figure_ids() { return kIds; }

FigureTable make_figure(std::string_view id) {
  FigureTable t;
  t.id = std::string(id);
  std::vector<double> hp_m(kSamples);
  t.hp_km.resize(kSamples);
  for (int i = 0; i < kSamples; ++i) {
    hp_m[i] = 100.0 * i;
    t.hp_km[i] = i / 10.0;
  }

  auto per_delta_T = [&](const Curve& curve) {
    for (double dT : kDeltaT) {
      const Offsets o{dT, 0.0};
      t.series.push_back(sample(offsets_name(o, true, false), o, hp_m, curve));
    }
  };
  const Curve H_km = [](double Hp, const AtmosphereAnchors& a) { return geopotential_from_hp(Hp, a) / 1000.0; };

  if (id == "dTdHp") {
    t.title = "temperature gradient versus pressure altitude";
    t.unit = "K/km";
    t.series.push_back(sample("dT/dHp", std::nullopt, hp_m,
                              [](double Hp, const AtmosphereAnchors&) { return temperature_gradient_hp(Hp) * 1000.0; }));
  } else if (id == "dpdHp") {
    t.title = "standard pressure gradient versus pressure altitude";
    t.unit = "Pa/m";
    t.series.push_back(sample("dp/dHp", std::nullopt, hp_m,
                              [](double Hp, const AtmosphereAnchors&) { return pressure_gradient_hp(Hp); }));
  } else if (id == "Tisa") {
    t.title = "standard temperature versus pressure altitude";
    t.unit = "K";
    t.series.push_back(sample("T_isa", std::nullopt, hp_m,
                              [](double Hp, const AtmosphereAnchors&) { return standard_temperature_from_hp(Hp); }));
  } else if (id == "T_dT") {
    t.title = "temperature versus pressure altitude for several temperature offsets";
    t.unit = "K";
    per_delta_T([](double Hp, const AtmosphereAnchors& a) { return temperature_from_hp(Hp, a); });
  } else if (id == "dHdHp_dT") {
    t.title = "dH/dHp versus pressure altitude for several temperature offsets";
    t.unit = "-";
    per_delta_T([](double Hp, const AtmosphereAnchors& a) { return d_geopotential_d_hp(Hp, a); });
  } else if (id == "p") {
    t.title = "pressure versus pressure altitude";
    t.unit = "kPa";
    t.series.push_back(
        sample("p", std::nullopt, hp_m, [](double Hp, const AtmosphereAnchors&) { return pressure_from_hp(Hp) / 1000.0; }));
  } else if (id == "H_dT") {
    t.title = "geopotential versus pressure altitude, delta_p = 0, several temperature offsets";
    t.unit = "km";
    per_delta_T(H_km);
  } else if (id == "H_dp") {
    t.title = "geopotential versus pressure altitude, delta_T = 0, several pressure offsets";
    t.unit = "km";
    for (double dp : kDeltaP) {
      const Offsets o{0.0, dp};
      t.series.push_back(sample(offsets_name(o, false, true), o, hp_m, H_km));
    }
  } else if (id == "H_dTdp") {
    t.title = "geopotential versus pressure altitude for several offset pairs";
    t.unit = "km";
    for (const Offsets& o : kPairs) t.series.push_back(sample(offsets_name(o, true, true), o, hp_m, H_km));
  } else {
    std::string known;
    for (auto k : kIds) known += (known.empty() ? "" : ", ") + std::string(k);
    throw Error(ErrorKind::InvalidArgument, "unknown figure id '" + std::string(id) + "' (known: " + known + ")");
  }
  return t;
}

void write_figure(std::ostream& out, const FigureTable& table) {
  out << "# figure\t" << table.id << '\n';
  out << "# title\t" << table.title << '\n';
  out << "# unit\t" << table.unit << '\n';
  out << "# Hp_km";
  for (const FigureSeries& s : table.series) out << '\t' << s.name;
  out << '\n';
  for (std::size_t i = 0; i < table.hp_km.size(); ++i) {
    out << format_shortest(table.hp_km[i]);
    for (const FigureSeries& s : table.series) out << '\t' << format_shortest(s.values[i]);
    out << '\n';
  }
}

}  // namespace insa
