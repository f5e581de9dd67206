#include <doctest.h>

#include "milnor/circles.hpp"
#include "milnor/error.hpp"
#include "milnor/parser.hpp"
#include "milnor/singular.hpp"
#include "oracles.hpp"

using namespace milnor;

namespace {

CircleFamily circles(const char* f, const char* g, double eps = 1.0) {
  const auto polys = parse_polynomials({f, g}, 2);
  return homogeneous_2var_circles(polys[0], polys[1], eps);
}

bool has_direction(const CircleFamily& family, const ComplexVector& d) {
  const ComplexVector unit = scaled(d, 1.0 / norm(d));
  for (const auto& dir : family.directions)
    if (chordal_distance(dir, unit) < 1e-9) return true;
  return false;
}

}  // namespace

TEST_CASE("z1^2 + z2^2 with z1 z2: two circles") {
  const CircleFamily family = circles("z1^2 + z2^2", "z1*z2", 0.5);
  CHECK(family.minor == parse_polynomial("2*z1^2 - 2*z2^2"));
  CHECK(family.count == 2);
  CHECK(family.bound == 2);
  CHECK(family.radius == 0.5);
  CHECK_FALSE(family.degenerate_all_singular);
  CHECK(has_direction(family, {1.0, 1.0}));
  CHECK(has_direction(family, {1.0, -1.0}));
}

TEST_CASE("z1^m + z2^m with z1 z2: m circles through (1, w)") {
  for (unsigned m = 2; m <= 8; ++m) {
    const std::string f = "z1^" + std::to_string(m) + " + z2^" + std::to_string(m);
    const CircleFamily family = circles(f.c_str(), "z1*z2");
    CAPTURE(m);
    CHECK(family.count == m);
    CHECK(family.bound == m);
    for (unsigned k = 0; k < m; ++k) CHECK(has_direction(family, {1.0, oracle::expi(2.0 * oracle::kPi * k / m)}));
  }
}

TEST_CASE("identical pairs are singular everywhere") {
  const CircleFamily family = circles("z1*z2", "z1*z2");
  CHECK(family.degenerate_all_singular);
  CHECK(family.minor.is_zero());
}

TEST_CASE("directions on the link are discarded") {
  // R = 2 z1 z2 (z2 - ... ); the axes lie on K_g for g = z1 z2.
  const CircleFamily family = circles("z1^2 + z2^2", "z1*z2*(z1 - 2*z2)");
  for (const auto& d : family.directions) {
    CHECK(std::abs(d[0]) > 1e-6);
    CHECK(std::abs(d[1]) > 1e-6);
  }
  CHECK(family.count <= family.bound);
}

TEST_CASE("degree drop adds the direction (0, 1)") {
  // f = z1^2 + z2^2, g = z1^2 + 2 z2^2: R = 4 z1 z2, R(1, t) = 4t has degree 1 < 2.
  const CircleFamily family = circles("z1^2 + z2^2", "z1^2 + 2*z2^2");
  CHECK(family.count == 2);
  CHECK(has_direction(family, {1.0, 0.0}));
  CHECK(has_direction(family, {0.0, 1.0}));
}

TEST_CASE("repeated factors count once") {
  // f = z1^3, g = (z1 + z2)^3 - z1^3 ... R has a repeated factor
  const CircleFamily family = circles("(z1 + z2)^3", "z1^3 + z2^3");
  CHECK(family.count <= family.bound);
  for (std::size_t a = 0; a < family.directions.size(); ++a)
    for (std::size_t b = a + 1; b < family.directions.size(); ++b)
      CHECK(chordal_distance(family.directions[a], family.directions[b]) > 1e-7);
}

TEST_CASE("every circle is singular and the count never exceeds the bound") {
  const char* pairs[][2] = {{"z1^3 + z2^3", "z1*z2"},
                            {"z1^2 + 3*z2^2", "(1+i)*z1^2 - z2^2"},
                            {"z1^4 + z1*z2^3", "z1^2*z2 + z2^3"},
                            {"z1^5 - 2*z2^5 + z1^2*z2^3", "z1^3 + (2-i)*z2^3"},
                            {"z1*z2^2 + z2^3", "z1^2 + z2^2"}};
  for (const auto& pair : pairs) {
    const double eps = 0.3;
    const auto polys = parse_polynomials({pair[0], pair[1]}, 2);
    const CircleFamily family = homogeneous_2var_circles(polys[0], polys[1], eps);
    CAPTURE(pair[0]);
    CAPTURE(pair[1]);
    CHECK(family.count == family.directions.size());
    CHECK(family.count <= family.bound);
    CHECK(family.bound == polys[0].degree() + polys[1].degree() - 2);
    const MapSpec spec(polys, eps);
    for (const auto& d : family.directions)
      for (double theta : {0.0, 2.0}) {
        const SpherePoint p(scaled(d, eps * oracle::expi(theta)), eps);
        CHECK(is_singular_numeric(spec, p).numeric_margin <= 1e-8);
      }
  }
}

TEST_CASE("input validation") {
  const auto code_of = [](const char* f, const char* g) {
    try {
      (void)circles(f, g);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of("z1^2 + z2", "z1*z2") == ErrorCode::NotHomogeneous);
  const auto three = parse_polynomials({"z1*z3", "z2^2"});
  try {
    (void)homogeneous_2var_circles(three[0], three[1], 1.0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
}

TEST_CASE("chordal distance") {
  CHECK(chordal_distance({1.0, 0.0}, {oracle::expi(1.0), 0.0}) < 1e-15);
  CHECK(chordal_distance({1.0, 0.0}, {0.0, 1.0}) == doctest::Approx(1.0));
}
