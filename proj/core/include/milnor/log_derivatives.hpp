#pragma once

#include <vector>

#include "milnor/linalg.hpp"
#include "milnor/polynomial.hpp"

namespace milnor {

/// A polynomial together with its exact first and second partials, so that
/// repeated evaluation of gradients and Hessians does not re-differentiate.
class PolynomialJet {
 public:
  explicit PolynomialJet(Polynomial f);

  const Polynomial& polynomial() const noexcept { return f_; }
  std::size_t n_vars() const noexcept { return f_.n_vars(); }
  const Polynomial& partial(std::size_t j) const { return first_.at(j); }
  const Polynomial& second_partial(std::size_t j, std::size_t k) const;

  cplx value(const ComplexVector& p) const { return f_.evaluate(p); }
  /// (df/dz_1(p), ..., df/dz_n(p)), no conjugation.
  ComplexVector gradient(const ComplexVector& p) const;
  /// Holomorphic Hessian (d^2 f / dz_j dz_k)(p); symmetric by construction.
  ComplexMatrix hessian(const ComplexVector& p) const;

  /// conj(df/dz_j(p) / f(p)), the conjugated gradient of log f.
  /// Throws EvaluationOnZeroSet when |f(p)| is within the zero tolerance.
  ComplexVector log_gradient(const ComplexVector& p) const;
  /// (f f_jk - f_j f_k) / f^2 at p.
  ComplexMatrix log_hessian(const ComplexVector& p) const;

 private:
  cplx checked_value(const ComplexVector& p) const;

  Polynomial f_;
  std::vector<Polynomial> first_;
  std::vector<Polynomial> second_;  // upper triangle, row-major
};

ComplexVector log_gradient(const Polynomial& f, const ComplexVector& p);
ComplexMatrix log_hessian(const Polynomial& f, const ComplexVector& p);

/// H = -i (Hess log g - s Hess log f) at p.
ComplexMatrix combined_hessian(const PolynomialJet& f, const PolynomialJet& g, const Rational& s,
                               const ComplexVector& p);
ComplexMatrix combined_hessian(const Polynomial& f, const Polynomial& g, const Rational& s, const ComplexVector& p);

}  // namespace milnor
