#include "milnor/log_derivatives.hpp"

#include <cmath>

#include "milnor/error.hpp"

namespace milnor {

namespace {

std::size_t upper_index(std::size_t n, std::size_t j, std::size_t k) {
  if (j > k) std::swap(j, k);
  return j * n - j * (j + 1) / 2 + k;
}

}  // namespace

PolynomialJet::PolynomialJet(Polynomial f) : f_(std::move(f)) {
  const std::size_t n = f_.n_vars();
  first_.reserve(n);
  for (std::size_t j = 0; j < n; ++j) first_.push_back(f_.partial(j));
  second_.reserve(n * (n + 1) / 2);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j; k < n; ++k) second_.push_back(first_[j].partial(k));
}

const Polynomial& PolynomialJet::second_partial(std::size_t j, std::size_t k) const {
  const std::size_t n = n_vars();
  if (j >= n || k >= n) throw Error(ErrorCode::IndexOutOfRange, "second_partial: index out of range");
  return second_[upper_index(n, j, k)];
}

ComplexVector PolynomialJet::gradient(const ComplexVector& p) const {
  ComplexVector g(n_vars());
  for (std::size_t j = 0; j < g.size(); ++j) g[j] = first_[j].evaluate(p);
  return g;
}

ComplexMatrix PolynomialJet::hessian(const ComplexVector& p) const {
  const std::size_t n = n_vars();
  ComplexMatrix h(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j; k < n; ++k) h(j, k) = h(k, j) = second_[upper_index(n, j, k)].evaluate(p);
  return h;
}

cplx PolynomialJet::checked_value(const ComplexVector& p) const {
  const cplx v = f_.evaluate(p);
  if (std::abs(v) <= f_.zero_tolerance(p))
    throw Error(ErrorCode::EvaluationOnZeroSet,
                "|f(p)| = " + std::to_string(std::abs(v)) + " is below the degeneracy tolerance");
  return v;
}

ComplexVector PolynomialJet::log_gradient(const ComplexVector& p) const {
  const cplx v = checked_value(p);
  ComplexVector g = gradient(p);
  for (cplx& z : g) z = std::conj(z / v);
  return g;
}

ComplexMatrix PolynomialJet::log_hessian(const ComplexVector& p) const {
  const cplx v = checked_value(p);
  const ComplexVector g = gradient(p);
  ComplexMatrix h = hessian(p);
  const std::size_t n = n_vars();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j; k < n; ++k) {
      const cplx entry = h(j, k) / v - (g[j] / v) * (g[k] / v);
      h(j, k) = h(k, j) = entry;
    }
  }
  return h;
}

ComplexVector log_gradient(const Polynomial& f, const ComplexVector& p) { return PolynomialJet(f).log_gradient(p); }

ComplexMatrix log_hessian(const Polynomial& f, const ComplexVector& p) { return PolynomialJet(f).log_hessian(p); }

ComplexMatrix combined_hessian(const PolynomialJet& f, const PolynomialJet& g, const Rational& s,
                               const ComplexVector& p) {
  if (f.n_vars() != g.n_vars()) throw Error(ErrorCode::DimensionMismatch, "f and g live in different variable counts");
  const ComplexMatrix hf = f.log_hessian(p);
  const ComplexMatrix hg = g.log_hessian(p);
  const double sd = to_double(s);
  const cplx minus_i{0.0, -1.0};
  const std::size_t n = f.n_vars();
  ComplexMatrix h(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j; k < n; ++k) h(j, k) = h(k, j) = minus_i * (hg(j, k) - sd * hf(j, k));
  return h;
}

ComplexMatrix combined_hessian(const Polynomial& f, const Polynomial& g, const Rational& s, const ComplexVector& p) {
  return combined_hessian(PolynomialJet(f), PolynomialJet(g), s, p);
}

}  // namespace milnor
