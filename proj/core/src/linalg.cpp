#include "milnor/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "milnor/error.hpp"

namespace milnor {

namespace {

double abs2(double x) { return x * x; }
double abs2(cplx z) { return std::norm(z); }
double conj_of(double x) { return x; }
cplx conj_of(cplx z) { return std::conj(z); }

template <typename T>
Matrix<T> adjoint(const Matrix<T>& m) {
  Matrix<T> t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = conj_of(m(r, c));
  return t;
}

template <typename T>
T lu_determinant(Matrix<T> a) {
  if (!a.is_square()) throw Error(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = a.rows();
  T det{1};
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(a(k, k));
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(a(r, k)) > best) {
        best = std::abs(a(r, k));
        pivot = r;
      }
    }
    if (best == 0.0) return T{0};
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(pivot, c));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const T factor = a(r, k) / a(k, k);
      for (std::size_t c = k; c < n; ++c) a(r, c) -= factor * a(k, c);
    }
  }
  return det;
}

// One-sided Jacobi: rotate column pairs until all are mutually orthogonal;
// the column norms are then the singular values. Requires rows >= cols.
template <typename T>
RealVector hestenes(Matrix<T> a, const JacobiSettings& settings) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  for (int sweep = 0; sweep < settings.max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        double alpha = 0.0;
        double beta = 0.0;
        T gamma{0};
        for (std::size_t r = 0; r < rows; ++r) {
          alpha += abs2(a(r, p));
          beta += abs2(a(r, q));
          gamma += conj_of(a(r, p)) * a(r, q);
        }
        const double g = std::abs(gamma);
        if (g == 0.0 || alpha == 0.0 || beta == 0.0) continue;
        off = std::max(off, g / std::sqrt(alpha * beta));
        if (g <= settings.tolerance * std::sqrt(alpha * beta)) continue;
        // Remove the phase of gamma so the 2x2 problem is real symmetric.
        const T phase = gamma / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t r = 0; r < rows; ++r) {
          const T ap = a(r, p);
          const T bq = a(r, q) * conj_of(phase);
          a(r, p) = c * ap - s * bq;
          a(r, q) = s * ap + c * bq;
        }
      }
    }
    if (off <= settings.tolerance) break;
  }
  RealVector sv(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    double acc = 0.0;
    for (std::size_t r = 0; r < rows; ++r) acc += abs2(a(r, c));
    sv[c] = std::sqrt(acc);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

template <typename T>
RealVector singular_values_impl(const Matrix<T>& m, const JacobiSettings& settings) {
  if (m.cols() <= m.rows()) return hestenes(m, settings);
  RealVector sv = hestenes(adjoint(m), settings);
  sv.resize(m.cols(), 0.0);
  return sv;
}

template <typename T>
double frobenius_impl(const Matrix<T>& m) {
  double acc = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) acc += abs2(m(r, c));
  return std::sqrt(acc);
}

template <typename T>
double asymmetry_impl(const Matrix<T>& m) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "asymmetry of non-square matrix");
  double worst = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r + 1; c < m.cols(); ++c) worst = std::max(worst, std::abs(m(r, c) - m(c, r)));
  return worst;
}

}  // namespace

cplx hermitian(const ComplexVector& u, const ComplexVector& v) {
  if (u.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "hermitian: vector lengths differ");
  cplx acc{0.0, 0.0};
  for (std::size_t j = 0; j < u.size(); ++j) acc += u[j] * std::conj(v[j]);
  return acc;
}

double norm(const ComplexVector& v) {
  double acc = 0.0;
  for (const cplx& z : v) acc += std::norm(z);
  return std::sqrt(acc);
}

double norm(const RealVector& v) {
  double acc = 0.0;
  for (double x : v) acc += x * x;
  return std::sqrt(acc);
}

ComplexVector scaled(const ComplexVector& v, cplx factor) {
  ComplexVector out(v);
  for (cplx& z : out) z *= factor;
  return out;
}

ComplexVector conj(const ComplexVector& v) {
  ComplexVector out(v);
  for (cplx& z : out) z = std::conj(z);
  return out;
}

RealVector to_real(const ComplexVector& v) {
  RealVector x(2 * v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    x[2 * j] = v[j].real();
    x[2 * j + 1] = v[j].imag();
  }
  return x;
}

ComplexVector from_real(const RealVector& x) {
  if (x.size() % 2 != 0) throw Error(ErrorCode::DimensionMismatch, "from_real: odd length");
  ComplexVector v(x.size() / 2);
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = {x[2 * j], x[2 * j + 1]};
  return v;
}

RealMatrix real_part(const ComplexMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).real();
  return out;
}

RealMatrix imag_part(const ComplexMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).imag();
  return out;
}

ComplexMatrix to_complex(const RealMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  return out;
}

ComplexMatrix conj(const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = std::conj(m(r, c));
  return out;
}

double frobenius_norm(const RealMatrix& m) { return frobenius_impl(m); }
double frobenius_norm(const ComplexMatrix& m) { return frobenius_impl(m); }
double asymmetry(const RealMatrix& m) { return asymmetry_impl(m); }
double asymmetry(const ComplexMatrix& m) { return asymmetry_impl(m); }

double determinant(const RealMatrix& m) { return lu_determinant(m); }
cplx determinant(const ComplexMatrix& m) { return lu_determinant(m); }

RealVector singular_values(const RealMatrix& m, const JacobiSettings& settings) {
  return singular_values_impl(m, settings);
}

RealVector singular_values(const ComplexMatrix& m, const JacobiSettings& settings) {
  return singular_values_impl(m, settings);
}

RealVector symmetric_eigenvalues(const RealMatrix& m, const JacobiSettings& settings) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, "eigenvalues of non-square matrix");
  const std::size_t n = m.rows();
  RealMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) a(r, c) = a(c, r) = m(r, c);

  const double scale = std::max(frobenius_norm(a), 1e-300);
  for (int sweep = 0; sweep < settings.max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(2.0 * off) <= settings.tolerance * scale) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  RealVector ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace milnor

namespace milnor {

namespace {

double dot_of(const RealVector& a, const RealVector& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

cplx dot_of(const ComplexVector& a, const ComplexVector& b) { return hermitian(a, b); }

template <typename Vec>
std::vector<Vec> complement_impl(const std::vector<Vec>& orthonormal, std::size_t dim) {
  using T = typename Vec::value_type;
  std::vector<Vec> basis(orthonormal);
  for (const Vec& v : basis)
    if (v.size() != dim) throw Error(ErrorCode::DimensionMismatch, "orthonormal_complement: vector length");
  if (basis.size() > dim) throw Error(ErrorCode::DimensionMismatch, "orthonormal_complement: too many vectors");

  std::vector<bool> used(dim, false);
  std::vector<Vec> added;
  while (basis.size() < dim) {
    double best = -1.0;
    std::size_t best_index = 0;
    Vec best_residual;
    for (std::size_t c = 0; c < dim; ++c) {
      if (used[c]) continue;
      Vec r(dim, T{0});
      r[c] = T{1};
      for (int pass = 0; pass < 2; ++pass)
        for (const Vec& b : basis) {
          const T coef = dot_of(r, b);
          for (std::size_t i = 0; i < dim; ++i) r[i] -= coef * b[i];
        }
      const double len = norm(r);
      if (len > best) {
        best = len;
        best_index = c;
        best_residual = std::move(r);
      }
    }
    if (best <= 1e-12) throw Error(ErrorCode::DegenerateSpan, "orthonormal_complement: input not independent");
    for (T& x : best_residual) x /= best;
    used[best_index] = true;
    basis.push_back(best_residual);
    added.push_back(std::move(best_residual));
  }
  return added;
}

}  // namespace

std::vector<RealVector> orthonormal_complement(const std::vector<RealVector>& orthonormal, std::size_t dim) {
  return complement_impl(orthonormal, dim);
}

std::vector<ComplexVector> orthonormal_complement(const std::vector<ComplexVector>& orthonormal, std::size_t dim) {
  return complement_impl(orthonormal, dim);
}

}  // namespace milnor
