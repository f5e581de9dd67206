#include <doctest.h>

#include <algorithm>
#include <random>

#include "milnor/error.hpp"
#include "milnor/linalg.hpp"
#include "oracles.hpp"

using namespace milnor;

TEST_CASE("hermitian inner product") {
  const cplx i{0.0, 1.0};
  CHECK(hermitian({1.0, i}, {1.0, i}) == cplx(2.0));
  CHECK(hermitian({1.0, 0.0}, {0.0, 1.0}) == cplx(0.0));
  // (1+i)(-i) + 2(1+i)
  CHECK(hermitian({cplx(1, 1), 2.0}, {i, cplx(1, -1)}) == cplx(3.0, 1.0));
  CHECK_THROWS_AS(hermitian({1.0}, {1.0, 2.0}), Error);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexVector u = oracle::random_vector(3, rng);
    const ComplexVector v = oracle::random_vector(3, rng);
    const RealVector ur = to_real(u);
    const RealVector vr = to_real(v);
    double dot = 0.0;
    for (std::size_t k = 0; k < ur.size(); ++k) dot += ur[k] * vr[k];
    CHECK(hermitian(u, v).real() == doctest::Approx(dot).epsilon(1e-14));
  }
}

TEST_CASE("real view round-trips") {
  const ComplexVector v{cplx(1, 2), cplx(-3, 4)};
  CHECK(to_real(v) == RealVector{1, 2, -3, 4});
  CHECK(from_real(to_real(v)) == v);
}

TEST_CASE("determinants agree with cofactor expansion") {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss;
  for (std::size_t n = 1; n <= 5; ++n) {
    RealMatrix a(n, n);
    ComplexMatrix b(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) = gauss(rng);
        b(r, c) = {gauss(rng), gauss(rng)};
      }
    CHECK(determinant(a) == doctest::Approx(oracle::cofactor_determinant(a)).epsilon(1e-12));
    CHECK(oracle::relative_error(determinant(b), oracle::cofactor_determinant(b)) < 1e-12);
  }
  CHECK(determinant(RealMatrix{{1, 2}, {2, 4}}) == 0.0);
}

TEST_CASE("singular values") {
  SUBCASE("diagonal") {
    const RealVector sv = singular_values(RealMatrix{{3, 0}, {0, -4}, {0, 0}});
    REQUIRE(sv.size() == 2);
    CHECK(sv[0] == doctest::Approx(4));
    CHECK(sv[1] == doctest::Approx(3));
  }
  SUBCASE("rank one") {
    const RealVector sv = singular_values(RealMatrix{{1, 2}, {2, 4}, {3, 6}});
    CHECK(sv[0] == doctest::Approx(std::sqrt(70.0)));
    CHECK(sv[1] < 1e-14);
  }
  SUBCASE("wide matrices report trailing zeros") {
    const RealVector sv = singular_values(RealMatrix{{1, 0, 0}, {0, 2, 0}});
    REQUIRE(sv.size() == 3);
    CHECK(sv[0] == doctest::Approx(2));
    CHECK(sv[1] == doctest::Approx(1));
    CHECK(sv[2] == 0.0);
  }
  SUBCASE("sum of squares equals the Frobenius norm") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> gauss;
    RealMatrix a(6, 4);
    for (std::size_t r = 0; r < 6; ++r)
      for (std::size_t c = 0; c < 4; ++c) a(r, c) = gauss(rng);
    double sum = 0.0;
    for (double s : singular_values(a)) sum += s * s;
    CHECK(std::sqrt(sum) == doctest::Approx(frobenius_norm(a)).epsilon(1e-13));
  }
  SUBCASE("complex matrix: (1, i) and (i, -1) are C-dependent") {
    const cplx i{0, 1};
    const ComplexMatrix m = ComplexMatrix::from_columns({{1.0, i}, {i, -1.0}});
    const RealVector sv = singular_values(m);
    CHECK(sv.back() < 1e-15);
  }
}

TEST_CASE("symmetric eigenvalues") {
  const RealVector ev = symmetric_eigenvalues(RealMatrix{{2, 1}, {1, 2}});
  CHECK(ev[0] == doctest::Approx(1));
  CHECK(ev[1] == doctest::Approx(3));

  std::mt19937_64 rng(9);
  std::normal_distribution<double> gauss;
  RealMatrix a(5, 5);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = r; c < 5; ++c) a(r, c) = a(c, r) = gauss(rng);
  const RealVector e = symmetric_eigenvalues(a);
  CHECK(std::is_sorted(e.begin(), e.end()));
  double trace = 0.0;
  double sum = 0.0;
  double product = 1.0;
  for (std::size_t k = 0; k < 5; ++k) trace += a(k, k);
  for (double x : e) {
    sum += x;
    product *= x;
  }
  CHECK(sum == doctest::Approx(trace).epsilon(1e-12));
  CHECK(product == doctest::Approx(determinant(a)).epsilon(1e-10));
}

TEST_CASE("orthonormal complements") {
  SUBCASE("real") {
    const RealVector e{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0};
    const auto rest = orthonormal_complement({e}, 3);
    REQUIRE(rest.size() == 2);
    for (const auto& v : rest) {
      CHECK(norm(v) == doctest::Approx(1));
      CHECK(std::abs(v[0] * e[0] + v[1] * e[1]) < 1e-15);
    }
    CHECK(std::abs(rest[0][0] * rest[1][0] + rest[0][1] * rest[1][1] + rest[0][2] * rest[1][2]) < 1e-15);
  }
  SUBCASE("complex") {
    std::mt19937_64 rng(2);
    const ComplexVector p = oracle::on_sphere(oracle::random_vector(4, rng), 1.0);
    const auto rest = orthonormal_complement(std::vector<ComplexVector>{p}, 4);
    REQUIRE(rest.size() == 3);
    for (const auto& v : rest) {
      CHECK(norm(v) == doctest::Approx(1));
      CHECK(std::abs(hermitian(v, p)) < 1e-14);
    }
  }
}
