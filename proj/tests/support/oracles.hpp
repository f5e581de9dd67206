#pragma once

// Independent reference computations used by the tests. Nothing here calls
// into the code under test except for Polynomial::evaluate, which the
// finite-difference oracles treat as a black box.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "milnor/linalg.hpp"
#include "milnor/polynomial.hpp"

namespace oracle {

using milnor::ComplexMatrix;
using milnor::ComplexVector;
using milnor::cplx;

inline constexpr double kPi = std::numbers::pi;

inline cplx expi(double theta) { return std::polar(1.0, theta); }

inline double relative_error(cplx got, cplx want) {
  const double scale = std::abs(want);
  return scale == 0.0 ? std::abs(got) : std::abs(got - want) / scale;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

inline double max_abs(const ComplexMatrix& a) {
  double worst = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) worst = std::max(worst, std::abs(a(r, c)));
  return worst;
}

/// Holomorphic function of n complex variables.
using Holomorphic = std::function<cplx(const ComplexVector&)>;

inline Holomorphic log_of(const milnor::Polynomial& f) {
  return [f](const ComplexVector& z) { return std::log(f.evaluate(z)); };
}

/// Central difference of a holomorphic h along the real direction of z_j.
inline cplx fd_partial(const Holomorphic& h, ComplexVector z, std::size_t j, double step) {
  const cplx base = z[j];
  z[j] = base + step;
  const cplx plus = h(z);
  z[j] = base - step;
  const cplx minus = h(z);
  return (plus - minus) / (2.0 * step);
}

/// d^2 h / dz_j dz_k by nested central differences. Branch cuts of log
/// cancel in the differences as long as the stencil stays away from them,
/// which holds for the small steps used here away from the zero set.
inline ComplexMatrix fd_hessian(const Holomorphic& h, const ComplexVector& z, double step) {
  const std::size_t n = z.size();
  ComplexMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      const Holomorphic dk = [&, k](const ComplexVector& w) { return fd_partial(h, w, k, step); };
      out(j, k) = fd_partial(dk, z, j, step);
    }
  return out;
}

/// conj(d log f / dz_j) by finite differences.
inline ComplexVector fd_log_gradient(const milnor::Polynomial& f, const ComplexVector& z, double step) {
  const Holomorphic h = log_of(f);
  ComplexVector out(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) out[j] = std::conj(fd_partial(h, z, j, step));
  return out;
}

using LongComplex = std::complex<long double>;
using LongVector = std::vector<LongComplex>;

/// f(z) summed term by term in extended precision, independently of
/// Polynomial::evaluate.
inline LongComplex evaluate_extended(const milnor::Polynomial& f, const LongVector& z) {
  LongComplex acc = 0.0L;
  for (const auto& [exponent, coefficient] : f.terms()) {
    LongComplex term(static_cast<long double>(coefficient.re), static_cast<long double>(coefficient.im));
    for (std::size_t j = 0; j < exponent.size(); ++j)
      for (unsigned e = 0; e < exponent[j]; ++e) term *= z[j];
    acc += term;
  }
  return acc;
}

/// d^2 log f / dz_j dz_k by nested central differences of step h along the
/// real axes, carried out in extended precision so the result is limited by
/// the O(h^2) truncation error rather than by cancellation. log is taken of
/// f(z + d) / f(z), which stays near 1 and away from the branch cut.
inline ComplexMatrix fd_log_hessian(const milnor::Polynomial& f, const ComplexVector& z, double step) {
  const std::size_t n = z.size();
  LongVector base(n);
  for (std::size_t j = 0; j < n; ++j) base[j] = LongComplex(z[j].real(), z[j].imag());
  const LongComplex f0 = evaluate_extended(f, base);
  const long double h = step;
  ComplexMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      LongComplex acc = 0.0L;
      for (int sj : {1, -1})
        for (int sk : {1, -1}) {
          LongVector w = base;
          w[j] += static_cast<long double>(sj) * h;
          w[k] += static_cast<long double>(sk) * h;
          acc += static_cast<long double>(sj * sk) * std::log(evaluate_extended(f, w) / f0);
        }
      const LongComplex value = acc / (4.0L * h * h);
      out(j, k) = cplx(static_cast<double>(value.real()), static_cast<double>(value.imag()));
    }
  return out;
}

inline ComplexVector random_vector(std::size_t n, std::mt19937_64& rng, double scale = 1.0);
inline ComplexVector on_sphere(ComplexVector v, double radius);

/// Random unit-sphere point at which log f is unit scale: every entry of its
/// Hessian (by a coarse difference quotient) is at most 10 in modulus. Near
/// the zero set of f the fourth derivatives of log f grow without bound and
/// the O(h^2) term of any fixed-step difference with it.
inline ComplexVector unit_scale_point(const milnor::Polynomial& f, std::mt19937_64& rng) {
  for (;;) {
    const ComplexVector z = on_sphere(random_vector(f.n_vars(), rng), 1.0);
    const ComplexMatrix h = fd_log_hessian(f, z, 1e-4);
    bool ok = true;
    for (std::size_t r = 0; r < h.rows(); ++r)
      for (std::size_t c = 0; c < h.cols(); ++c) ok = ok && std::abs(h(r, c)) <= 10.0;
    if (ok) return z;
  }
}

inline ComplexVector random_vector(std::size_t n, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexVector v(n);
  for (auto& z : v) z = scale * cplx(gauss(rng), gauss(rng));
  return v;
}

inline ComplexVector on_sphere(ComplexVector v, double radius) {
  double len = 0.0;
  for (cplx z : v) len += std::norm(z);
  len = std::sqrt(len);
  for (cplx& z : v) z *= radius / len;
  return v;
}

/// Determinant by cofactor expansion; only for the tiny sizes in tests.
template <typename T>
T cofactor_determinant(const milnor::Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return T{1};
  if (n == 1) return m(0, 0);
  T acc{};
  for (std::size_t c = 0; c < n; ++c) {
    milnor::Matrix<T> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t cc = 0, k = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, k++) = m(r, cc);
    const T term = m(0, c) * cofactor_determinant(minor);
    acc += (c % 2 == 0) ? term : -term;
  }
  return acc;
}

/// A^T H A computed entry by entry.
inline ComplexMatrix congruence(const ComplexMatrix& a, const ComplexMatrix& h) {
  ComplexMatrix out(a.cols(), a.cols());
  for (std::size_t r = 0; r < a.cols(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      cplx acc = 0.0;
      for (std::size_t j = 0; j < h.rows(); ++j)
        for (std::size_t k = 0; k < h.cols(); ++k) acc += a(j, r) * h(j, k) * a(k, c);
      out(r, c) = acc;
    }
  return out;
}

}  // namespace oracle
