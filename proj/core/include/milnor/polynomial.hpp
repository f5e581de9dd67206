#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "milnor/linalg.hpp"
#include "milnor/rational.hpp"

namespace milnor {

using Exponent = std::vector<unsigned>;

/// Sparse polynomial in z_1..z_n with exact Gaussian-rational coefficients.
/// Coefficients stay exact under arithmetic and differentiation; evaluation
/// happens in double precision from a cached numeric copy.
///
/// Variables are addressed by 0-based index in the API (z_1 is index 0).
class Polynomial {
 public:
  using TermMap = std::map<Exponent, GaussianRational>;

  explicit Polynomial(std::size_t n_vars = 1);
  /// Zero coefficients are dropped. Every exponent must have length n_vars.
  Polynomial(std::size_t n_vars, TermMap terms);

  static Polynomial constant(std::size_t n_vars, const GaussianRational& c);
  static Polynomial variable(std::size_t n_vars, std::size_t index);
  static Polynomial monomial(const Exponent& exponent, const GaussianRational& c = GaussianRational(1));

  std::size_t n_vars() const noexcept { return n_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Highest total degree over stored monomials; 0 for the zero polynomial.
  unsigned degree() const noexcept { return degree_; }
  /// Every monomial has the same total degree (vacuously true for zero).
  bool is_homogeneous() const;
  GaussianRational constant_term() const;
  bool has_constant_term() const { return !constant_term().is_zero(); }

  /// Same polynomial regarded in more variables (n >= n_vars()).
  Polynomial with_n_vars(std::size_t n) const;

  cplx evaluate(const ComplexVector& p) const;
  /// Formal partial derivative with respect to variable `index`.
  Polynomial partial(std::size_t index) const;

  /// Scale-aware zero test used for "p lies on the link":
  /// |f(p)| <= 1e-12 * (1 + |p|^deg f).
  double zero_tolerance(const ComplexVector& p) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const GaussianRational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const GaussianRational& c) { return a *= c; }
  friend Polynomial operator*(const GaussianRational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a) { return a *= GaussianRational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned exponent) const;

  /// Canonical text in the input grammar, e.g. "z1^2 + (2-3i)*z1*z2".
  std::string to_string() const;

 private:
  struct NumericTerm {
    Exponent exponent;
    cplx coefficient;
  };

  void rebuild_cache();

  std::size_t n_vars_;
  TermMap terms_;
  std::vector<NumericTerm> numeric_;
  unsigned degree_ = 0;
};

}  // namespace milnor
