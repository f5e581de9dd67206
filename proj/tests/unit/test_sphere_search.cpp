#include <doctest.h>

#include <random>

#include "milnor/parser.hpp"
#include "milnor/sphere_search.hpp"
#include "milnor/weights.hpp"
#include "oracles.hpp"

using namespace milnor;

TEST_CASE("random sphere points") {
  std::mt19937_64 a(1);
  std::mt19937_64 b(1);
  const ComplexVector p = random_sphere_point(3, 0.25, a);
  CHECK(norm(p) == doctest::Approx(0.25));
  CHECK(p == random_sphere_point(3, 0.25, b));
}

TEST_CASE("Fermat pair: both circles are found") {
  const auto polys = parse_polynomials({"z1^2 + 2*z2^2", "3*z1^2 - z2^2"});
  const auto cert = common_weights(polys[0], polys[1]);
  const MapSpec spec(polys, 0.5);
  SearchSettings settings;
  const SearchResult result = sphere_search(spec, settings, cert);
  CHECK(result.hits.size() == 2);
  CHECK(result.restart_margins.size() == 64);
  bool axis1 = false;
  bool axis2 = false;
  for (const auto& hit : result.hits) {
    CHECK(hit.numeric_margin <= 1e-7);
    CHECK(norm(hit.point) == doctest::Approx(0.5));
    axis1 = axis1 || std::abs(hit.point[1]) < 1e-6;
    axis2 = axis2 || std::abs(hit.point[0]) < 1e-6;
  }
  CHECK(axis1);
  CHECK(axis2);
}

TEST_CASE("z1^3 + z2^3 with z1 z2: three classes") {
  const auto polys = parse_polynomials({"z1^3 + z2^3", "z1*z2"});
  const auto cert = common_weights(polys[0], polys[1]);
  const SearchResult result = sphere_search(MapSpec(polys, 1.0), {}, cert);
  CHECK(result.hits.size() == 3);
  for (const auto& hit : result.hits) {
    // on the circle through (1, w) with w^3 = 1
    const cplx ratio = hit.point[1] / hit.point[0];
    CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-5);
    CHECK(std::abs(std::pow(ratio, 3) - 1.0) < 1e-5);
  }
}

TEST_CASE("disjoint maps have no hits") {
  SearchSettings settings;
  const SearchResult pair = sphere_search(MapSpec(parse_polynomials({"z1^2", "z2^2"}), 0.1), settings);
  CHECK(pair.hits.empty());
  CHECK(pair.min_margin > 0.01);
  const SearchResult triple = sphere_search(MapSpec(parse_polynomials({"z1", "z2", "z3"}), 0.1), settings);
  CHECK(triple.hits.empty());
  CHECK(triple.min_margin > 0.01);
}

TEST_CASE("results are deterministic and depend on the seed only") {
  const auto polys = parse_polynomials({"z1^2 + z2^2 + z3^2", "z1^2 + 2*z2^2 + 3*z3^2"});
  const auto cert = common_weights(polys[0], polys[1]);
  SearchSettings settings;
  settings.restarts = 8;
  settings.iterations = 100;
  settings.seed = 42;
  const MapSpec spec(polys, 1.0);
  const SearchResult a = sphere_search(spec, settings, cert);
  const SearchResult b = sphere_search(spec, settings, cert);
  CHECK(a.restart_margins == b.restart_margins);
  REQUIRE(a.hits.size() == b.hits.size());
  for (std::size_t k = 0; k < a.hits.size(); ++k) CHECK(a.hits[k].point == b.hits[k].point);
  settings.seed = 43;
  CHECK(sphere_search(spec, settings, cert).restart_margins != a.restart_margins);
}

TEST_CASE("phase normalization picks one orbit representative") {
  const ComplexVector p{cplx(0.6, 0.0), cplx(0.0, 0.8)};
  const RationalVector w{2, 3};
  const ComplexVector a = phase_normalized(p, w);
  CHECK(std::abs(a[0].imag()) < 1e-15);
  CHECK(a[0].real() > 0.0);
  CHECK(std::abs(a[1]) == doctest::Approx(0.8));
  for (double t : {0.1, 0.37, 0.9, 1.4, 5.5}) {
    const ComplexVector b = phase_normalized(circle_action(p, w, t), w);
    CHECK(std::abs(b[0] - a[0]) < 1e-12);
    CHECK(same_orbit(p, circle_action(p, w, t), w, 1e-9));
  }
  // a point off the orbit with the same moduli
  CHECK_FALSE(same_orbit(p, {cplx(0.6, 0.0), cplx(0.8, 0.0)}, w, 1e-6));
}

TEST_CASE("equal weights: normalization alone identifies orbits") {
  const ComplexVector p{cplx(0.6, 0.3), cplx(-0.2, 0.7)};
  const RationalVector w{3, 3};
  for (double t : {0.2, 1.1, 2.9}) {
    const ComplexVector a = phase_normalized(p, w);
    const ComplexVector b = phase_normalized(circle_action(p, w, t), w);
    for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs(a[j] - b[j]) < 1e-12);
  }
}
