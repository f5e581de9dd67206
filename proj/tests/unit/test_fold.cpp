#include <doctest.h>

#include <random>

#include "milnor/circles.hpp"
#include "milnor/error.hpp"
#include "milnor/fold.hpp"
#include "milnor/parser.hpp"
#include "milnor/weights.hpp"
#include "oracles.hpp"

using namespace milnor;
using oracle::expi;

namespace {

const cplx I{0.0, 1.0};

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

struct Pair {
  Polynomial f;
  Polynomial g;
  CommonWeightCertificate cert;
};

Pair pair(const std::string& f, const std::string& g) {
  const auto polys = parse_polynomials({f, g});
  const auto cert = common_weights(polys[0], polys[1]);
  REQUIRE(cert);
  return {polys[0], polys[1], *cert};
}

std::string power_sum(unsigned m) { return "z1^" + std::to_string(m) + " + z2^" + std::to_string(m); }

double re_inner(const ComplexVector& a, const ComplexVector& b) { return hermitian(a, b).real(); }

// det(t I - M) against det(t^2 I - conj(A) A), relative to prod (t + |lambda|).
double charpoly_error(const RealMatrix& m, const ComplexMatrix& a, double t) {
  RealMatrix left(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) left(r, c) = (r == c ? t : 0.0) - m(r, c);
  const ComplexMatrix aa = conj(a) * a;
  ComplexMatrix right(aa.rows(), aa.cols());
  for (std::size_t r = 0; r < aa.rows(); ++r)
    for (std::size_t c = 0; c < aa.cols(); ++c) right(r, c) = (r == c ? t * t : 0.0) - aa(r, c);
  double scale = 1.0;
  for (double lambda : symmetric_eigenvalues(m)) scale *= t + std::abs(lambda);
  return std::abs(oracle::cofactor_determinant(left) - oracle::cofactor_determinant(right)) / scale;
}

}  // namespace

TEST_CASE("real tangent basis") {
  SUBCASE("p = (1, 0), q = (i, 0): span of (0, 1), (0, i)") {
    const ComplexMatrix v = real_tangent_basis({1.0, 0.0}, {I, 0.0});
    REQUIRE(v.cols() == 2);
    for (std::size_t c = 0; c < 2; ++c) CHECK(v(0, c) == cplx(0.0));
    CHECK(std::abs(re_inner(v.column(0), v.column(1))) < 1e-15);
  }
  SUBCASE("p = (1, 0), q = (0, 1): span of (i, 0), (0, i)") {
    const ComplexMatrix v = real_tangent_basis({1.0, 0.0}, {0.0, 1.0});
    for (std::size_t c = 0; c < 2; ++c) {
      CHECK(v(0, c).real() == 0.0);
      CHECK(v(1, c).real() == 0.0);
    }
  }
  SUBCASE("random: orthogonality conditions and orthogonality of the columns") {
    std::mt19937_64 rng(8);
    for (std::size_t n = 2; n <= 4; ++n) {
      const ComplexVector p = oracle::random_vector(n, rng);
      const ComplexVector q = oracle::random_vector(n, rng);
      const ComplexMatrix v = real_tangent_basis(p, q);
      REQUIRE(v.cols() == 2 * n - 2);
      for (std::size_t a = 0; a < v.cols(); ++a) {
        CHECK(std::abs(re_inner(v.column(a), p)) < 1e-10);
        CHECK(std::abs(re_inner(v.column(a), q)) < 1e-10);
        CHECK(norm(v.column(a)) == doctest::Approx(1.0));
        for (std::size_t b = a + 1; b < v.cols(); ++b) CHECK(std::abs(re_inner(v.column(a), v.column(b))) < 1e-12);
      }
    }
  }
  SUBCASE("real-dependent p, q") {
    CHECK(code_of([] { real_tangent_basis({1.0, I}, {-2.0, -2.0 * I}); }) == ErrorCode::DegenerateSpan);
  }
}

TEST_CASE("complex tangent basis") {
  SUBCASE("p = (eps, 0): column (0, 1) up to phase") {
    const ComplexMatrix w = complex_tangent_basis({0.4, 0.0});
    REQUIRE(w.cols() == 1);
    CHECK(std::abs(w(0, 0)) < 1e-15);
    CHECK(std::abs(w(1, 0)) == doctest::Approx(0.4));
  }
  SUBCASE("p = (eps e^{i theta} / sqrt2)(1, w): column (eps e^{i theta} / sqrt2)(1, -w)") {
    const double eps = 0.7;
    for (unsigned m : {2u, 3u, 5u})
      for (double theta : {0.0, 1.0, 4.0}) {
        const cplx w = expi(2.0 * oracle::kPi / m);
        const cplx c = eps * expi(theta) / std::sqrt(2.0);
        const ComplexMatrix basis = complex_tangent_basis({c, c * w});
        CHECK(std::abs(basis(0, 0) - c) < 1e-14);
        CHECK(std::abs(basis(1, 0) + c * w) < 1e-14);
      }
  }
  SUBCASE("random: <W_col, p> = 0") {
    std::mt19937_64 rng(10);
    const ComplexVector p = oracle::random_vector(4, rng);
    const ComplexMatrix w = complex_tangent_basis(p);
    REQUIRE(w.cols() == 3);
    for (std::size_t c = 0; c < 3; ++c) CHECK(std::abs(hermitian(w.column(c), p)) < 1e-10);
  }
  SUBCASE("zero vector") { CHECK(code_of([] { complex_tangent_basis({0.0, 0.0}); }) == ErrorCode::ZeroVector); }
}

TEST_CASE("z1^m + z2^m with z1 z2: fold with det W^T H W = 2 m i and index 1") {
  for (unsigned m : {2u, 3u, 5u}) {
    const Pair pr = pair(power_sum(m), "z1*z2");
    for (double eps : {1.0, 0.3})
      for (unsigned k = 0; k < m; ++k) {
        const cplx w = expi(2.0 * oracle::kPi * k / m);
        const cplx c = eps * expi(0.8) / std::sqrt(2.0);
        const FoldReport r = fold_test(pr.f, pr.g, pr.cert, SpherePoint({c, c * w}, eps));
        CHECK(r.s == Rational(2, m));
        CHECK(r.c_dependent);
        CHECK(r.is_fold);
        REQUIRE(r.det_complex);
        CHECK(oracle::relative_error(*r.det_complex, 2.0 * m * I) < 1e-8);
        CHECK(index_of(r) == 1);
        CHECK(r.absolute_index == 1);
      }
  }
}

TEST_CASE("Fermat pairs") {
  SUBCASE("m = 2, n = 3, c = (1, 1, 1), d = (1, 2, 3) at e_1: fold of index 2") {
    const Pair pr = pair("z1^2 + z2^2 + z3^2", "z1^2 + 2*z2^2 + 3*z3^2");
    const FoldReport r = fold_test(pr.f, pr.g, pr.cert, SpherePoint({1.0, 0.0, 0.0}, 1.0));
    CHECK(r.is_fold);
    // W^T H W = (2i / (c_1 d_1)) diag(A_21, A_31) with A_j1 = c_j d_1 - c_1 d_j = (-1, -2)
    REQUIRE(r.complex_basis);
    const ComplexMatrix a = oracle::congruence(*r.complex_basis, r.hessian);
    const ComplexMatrix want{{-2.0 * I, 0.0}, {0.0, -4.0 * I}};
    CHECK(oracle::max_abs_diff(a, want) < 1e-12);
    CHECK(oracle::relative_error(*r.det_complex, cplx(-8.0)) < 1e-12);
    CHECK(r.det_real == doctest::Approx(64.0));
    CHECK(index_of(r) == 2);
  }
  SUBCASE("m = 3 at e_1: H = 0, not a fold") {
    const Pair pr = pair("z1^3 + 2*z2^3", "z1^3 + 5*z2^3");
    const FoldReport r = fold_test(pr.f, pr.g, pr.cert, SpherePoint({1.0, 0.0}, 1.0));
    CHECK(oracle::max_abs(r.hessian) < 1e-10);
    CHECK_FALSE(r.is_fold);
    CHECK(r.form.numerically_zero);
    CHECK_FALSE(r.index);
    CHECK(code_of([&] { index_of(r); }) == ErrorCode::NotAFold);
  }
}

TEST_CASE("regular points are refused") {
  const Pair pr = pair(power_sum(3), "z1*z2");
  const double c = 1.0 / std::sqrt(2.0);
  CHECK(code_of([&] { fold_test(pr.f, pr.g, pr.cert, SpherePoint({c, c * expi(0.3)}, 1.0)); }) ==
        ErrorCode::NotSingular);
  const CommonWeightCertificate wrong{{2, 2}, {1, 1}};
  CHECK(code_of([&] { fold_test(pr.f, pr.g, wrong, SpherePoint({c, c}, 1.0)); }) == ErrorCode::CertificateRequired);
}

TEST_CASE("identities at C-dependent fold points") {
  std::mt19937_64 rng(19);
  std::normal_distribution<double> gauss;
  std::vector<std::pair<Pair, SpherePoint>> points;
  for (unsigned m : {2u, 3u, 5u}) {
    const Pair pr = pair(power_sum(m), "z1*z2");
    const double c = 1.0 / std::sqrt(2.0);
    points.emplace_back(pr, SpherePoint({c * expi(1.1), c * expi(1.1 + 2.0 * oracle::kPi / m)}, 1.0));
  }
  {
    const Pair pr = pair("z1^2 + (2+i)*z2^2 - 3*z3^2", "(1-i)*z1^2 + z2^2 + 2*z3^2");
    for (std::size_t u = 0; u < 3; ++u) {
      ComplexVector p(3, 0.0);
      p[u] = 0.5 * expi(2.0);
      points.emplace_back(pr, SpherePoint(p, 0.5));
    }
  }
  for (const auto& [pr, p] : points) {
    const FoldReport r = fold_test(pr.f, pr.g, pr.cert, p);
    REQUIRE(r.c_dependent);
    REQUIRE(r.is_fold);
    const std::size_t n = p.size();
    const RealMatrix& m = r.form.matrix;

    // det Re(V^T H V) = (-1)^{n-1} |det W^T H W|^2
    const double sign = (n - 1) % 2 == 0 ? 1.0 : -1.0;
    CHECK(std::abs(r.det_real - sign * std::norm(*r.det_complex)) <= 1e-8 * std::abs(r.det_real));
    CHECK(*r.identity_residual < 1e-8);

    // characteristic polynomial
    const ComplexMatrix a = oracle::congruence(*r.complex_basis, r.hessian);
    for (double t : {0.0, 0.5, 1.0, 2.0}) CHECK(charpoly_error(m, a, t) < 1e-8);

    // +- pairing
    const RealVector ev = r.eigenvalues;
    const double scale = std::max(std::abs(ev.front()), std::abs(ev.back()));
    for (std::size_t k = 0; k < ev.size(); ++k) CHECK(std::abs(ev[k] + ev[ev.size() - 1 - k]) <= 1e-8 * scale);

    // symmetry and eigenvalue cross-check
    CHECK(asymmetry(m) < 1e-12);
    double trace = 0.0;
    double sum = 0.0;
    double product = 1.0;
    for (std::size_t k = 0; k < m.rows(); ++k) trace += m(k, k);
    for (double x : ev) {
      sum += x;
      product *= x;
    }
    CHECK(std::abs(sum - trace) <= 1e-9 * scale * ev.size());
    CHECK(std::abs(product - r.det_real) <= 1e-9 * std::abs(r.det_real));

    // basis independence under V -> V G
    const int index = index_of(r);
    CHECK(index == int(n) - 1);
    const double ref = oracle::max_abs(r.hessian);
    for (int trial = 0; trial < 10; ++trial) {
      RealMatrix g(2 * n - 2, 2 * n - 2);
      do {
        for (std::size_t i = 0; i < g.rows(); ++i)
          for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) = gauss(rng);
      } while (std::abs(determinant(g)) < 0.1);
      const ReducedForm other = reduce_form(r.hessian, r.real_basis * to_complex(g), ref);
      CHECK(other.is_fold == r.is_fold);
      CHECK(other.negative_count == index);
    }
  }
}

TEST_CASE("fold points where p and i grad log f are not C-dependent") {
  // Circles of f = z1^2 + z1 z2 + 3 z2^2, g = z1^2 - z2^2 + z1 z2 / 2 pass
  // through points where the log-gradient is not a multiple of p.
  const Pair pr = pair("z1^2 + z1*z2 + 3*z2^2", "z1^2 - z2^2 + (1/2)*z1*z2");
  const CircleFamily family = homogeneous_2var_circles(pr.f, pr.g, 1.0);
  REQUIRE(family.count > 0);
  int independent = 0;
  for (const auto& d : family.directions) {
    const FoldReport r = fold_test(pr.f, pr.g, pr.cert, SpherePoint(d, 1.0));
    if (r.c_dependent) continue;
    ++independent;
    CHECK_FALSE(r.complex_basis);
    CHECK_FALSE(r.det_complex);
    if (r.is_fold) {
      const int index = index_of(r);
      CHECK(index >= 0);
      CHECK(index <= 2);
      CHECK(*r.absolute_index == std::min(index, 2 - index));
    }
  }
  CHECK(independent > 0);
}
