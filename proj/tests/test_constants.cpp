#include <doctest.h>

#include <cmath>
#include <cstring>

#include "insa/constants.hpp"
#include "insa/error.hpp"

using namespace insa;

TEST_CASE("constants match the ISA table") {
  const IsaConstants& c = constants();
  CHECK(c.g0 == 9.80665);
  CHECK(c.RE == 6356766.0);
  CHECK(c.p0 == 101325.0);
  CHECK(c.T0 == 288.15);
  CHECK(c.rho0 == 1.225);
  CHECK(c.R == 287.05287);
  CHECK(c.Hp_trop == 11000.0);
  CHECK(c.betaT_below == -6.5e-3);
  CHECK(c.betaT_above == 0.0);
}

TEST_CASE("derived exponent") {
  const IsaConstants& c = constants();
  // 40-digit evaluation of 9.80665 / (6.5e-3 * 287.05287)
  CHECK(c.gbr == doctest::Approx(5.255879812716676950).epsilon(1e-15));
  CHECK(c.gbr == 9.80665 / (6.5e-3 * 287.05287));
}

TEST_CASE("ideal gas closure at standard mean sea level") {
  const IsaConstants& c = constants();
  CHECK(std::abs(c.p0 / (c.R * c.T0) - c.rho0) < 1e-4);
}

TEST_CASE("constants are bit-identical across calls") {
  const IsaConstants a = constants();
  const IsaConstants b = constants();
  CHECK(std::memcmp(&a, &b, sizeof a) == 0);
}

TEST_CASE("validate_offsets") {
  SUBCASE("standard atmosphere") {
    const Offsets o = validate_offsets({0.0, 0.0});
    CHECK(o.delta_T == 0.0);
    CHECK(o.delta_p == 0.0);
  }
  SUBCASE("figure extremes are accepted") {
    CHECK(validate_offsets({20.0, 5000.0}) == Offsets{20.0, 5000.0});
    CHECK(validate_offsets({-20.0, -5000.0}) == Offsets{-20.0, -5000.0});
  }
  SUBCASE("zero mean sea level pressure is non-physical") {
    try {
      validate_offsets({0.0, -101325.0});
      FAIL("expected NonPhysical");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonPhysical);
    }
    OffsetBounds wide{-50, 50, -1e6, 1e6};
    try {
      validate_offsets({0.0, -2e5}, wide);
      FAIL("expected NonPhysical");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NonPhysical);
    }
  }
  SUBCASE("bounds violations name the component") {
    try {
      validate_offsets({60.0, 0.0});
      FAIL("expected OutOfValidityRange");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::OutOfValidityRange);
      CHECK(std::string(e.what()).find("delta_T") != std::string::npos);
    }
    try {
      validate_offsets({0.0, 20000.0});
      FAIL("expected OutOfValidityRange");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::OutOfValidityRange);
      CHECK(std::string(e.what()).find("delta_p") != std::string::npos);
    }
  }
  SUBCASE("non-finite offsets") {
    CHECK_THROWS_AS(validate_offsets({NAN, 0.0}), Error);
    CHECK_THROWS_AS(validate_offsets({0.0, INFINITY}), Error);
  }
  SUBCASE("malformed bounds") {
    CHECK_THROWS_AS(validate_offsets({}, OffsetBounds{1, -1, 0, 0}), Error);
  }
}
