#include "insa/geodesy.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "insa/constants.hpp"
#include "insa/error.hpp"

namespace insa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

[[noreturn]] void out_of_range(const char* what, double value) {
  std::ostringstream msg;
  msg << what << " (" << value << ")";
  throw Error(ErrorKind::OutOfValidityRange, msg.str());
}

}  // namespace

double normalize_longitude(double lambda) {
  if (!std::isfinite(lambda)) out_of_range("longitude must be finite", lambda);
  double wrapped = std::fmod(lambda, kTwoPi);
  if (wrapped < 0.0) wrapped += kTwoPi;
  // fmod of a tiny negative value can round back up to exactly 2pi
  if (wrapped >= kTwoPi) wrapped = 0.0;
  return wrapped;
}

GeodeticPosition::GeodeticPosition(double lambda, double phi, double h)
    : lambda_(normalize_longitude(lambda)), phi_(phi), h_(h) {
  if (!(std::abs(phi) <= std::numbers::pi / 2.0)) out_of_range("latitude outside [-pi/2, pi/2]", phi);
  if (!std::isfinite(h) || h <= -constants().RE) out_of_range("geodetic altitude must be finite and above -RE", h);
}

double geodetic_to_geopotential(double h) {
  const double RE = constants().RE;
  if (!std::isfinite(h) || h <= -RE / 2.0) out_of_range("geodetic altitude below -RE/2", h);
  return RE * h / (RE + h);
}

double geopotential_to_geodetic(double H) {
  const double RE = constants().RE;
  if (!std::isfinite(H) || H >= RE / 2.0) out_of_range("geopotential altitude above RE/2", H);
  return RE * H / (RE - H);
}

double d_geopotential_d_geodetic(double h) {
  const double RE = constants().RE;
  if (!std::isfinite(h) || h <= -RE / 2.0) out_of_range("geodetic altitude below -RE/2", h);
  const double ratio = RE / (RE + h);
  return ratio * ratio;
}

}  // namespace insa
