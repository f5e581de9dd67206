#include "milnor/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "milnor/error.hpp"

namespace milnor {

namespace {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

cplx integer_power(cplx base, unsigned exponent) {
  cplx result{1.0, 0.0};
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    base *= base;
    exponent >>= 1u;
  }
  return result;
}

}  // namespace

Polynomial::Polynomial(std::size_t n_vars) : n_vars_(n_vars) {
  if (n_vars == 0) throw Error(ErrorCode::InvalidArgument, "polynomial needs at least one variable");
}

Polynomial::Polynomial(std::size_t n_vars, TermMap terms) : n_vars_(n_vars) {
  if (n_vars == 0) throw Error(ErrorCode::InvalidArgument, "polynomial needs at least one variable");
  for (auto& [exponent, coefficient] : terms) {
    if (exponent.size() != n_vars)
      throw Error(ErrorCode::DimensionMismatch, "exponent vector length differs from n_vars");
    if (!coefficient.is_zero()) terms_.emplace(exponent, std::move(coefficient));
  }
  rebuild_cache();
}

Polynomial Polynomial::constant(std::size_t n_vars, const GaussianRational& c) {
  return Polynomial(n_vars, TermMap{{Exponent(n_vars, 0), c}});
}

Polynomial Polynomial::variable(std::size_t n_vars, std::size_t index) {
  if (index >= n_vars) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  Exponent e(n_vars, 0);
  e[index] = 1;
  return Polynomial(n_vars, TermMap{{e, GaussianRational(1)}});
}

Polynomial Polynomial::monomial(const Exponent& exponent, const GaussianRational& c) {
  return Polynomial(exponent.size(), TermMap{{exponent, c}});
}

void Polynomial::rebuild_cache() {
  numeric_.clear();
  degree_ = 0;
  for (const auto& [exponent, coefficient] : terms_) {
    numeric_.push_back({exponent, coefficient.to_complex()});
    degree_ = std::max(degree_, total_degree(exponent));
  }
}

bool Polynomial::is_homogeneous() const {
  for (const auto& [exponent, coefficient] : terms_)
    if (total_degree(exponent) != degree_) return false;
  return true;
}

GaussianRational Polynomial::constant_term() const {
  const auto it = terms_.find(Exponent(n_vars_, 0));
  return it == terms_.end() ? GaussianRational() : it->second;
}

Polynomial Polynomial::with_n_vars(std::size_t n) const {
  if (n < n_vars_) throw Error(ErrorCode::DimensionMismatch, "cannot drop variables");
  TermMap widened;
  for (const auto& [exponent, coefficient] : terms_) {
    Exponent e(exponent);
    e.resize(n, 0);
    widened.emplace(std::move(e), coefficient);
  }
  return Polynomial(n, std::move(widened));
}

cplx Polynomial::evaluate(const ComplexVector& p) const {
  if (p.size() != n_vars_) throw Error(ErrorCode::DimensionMismatch, "evaluate: point dimension differs from n_vars");
  cplx acc{0.0, 0.0};
  for (const auto& term : numeric_) {
    cplx monomial = term.coefficient;
    for (std::size_t j = 0; j < n_vars_; ++j)
      if (term.exponent[j] != 0) monomial *= integer_power(p[j], term.exponent[j]);
    acc += monomial;
  }
  return acc;
}

Polynomial Polynomial::partial(std::size_t index) const {
  if (index >= n_vars_) throw Error(ErrorCode::IndexOutOfRange, "partial: variable index out of range");
  TermMap out;
  for (const auto& [exponent, coefficient] : terms_) {
    if (exponent[index] == 0) continue;
    Exponent e(exponent);
    const unsigned power = e[index]--;
    out.emplace(std::move(e), coefficient * GaussianRational(Rational(power)));
  }
  return Polynomial(n_vars_, std::move(out));
}

double Polynomial::zero_tolerance(const ComplexVector& p) const {
  return 1e-12 * (1.0 + std::pow(norm(p), static_cast<double>(degree_)));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.n_vars_ != n_vars_) throw Error(ErrorCode::DimensionMismatch, "adding polynomials in different variable counts");
  for (const auto& [exponent, coefficient] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  rebuild_cache();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (o.n_vars_ != n_vars_) throw Error(ErrorCode::DimensionMismatch, "multiplying polynomials in different variable counts");
  TermMap product;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponent e(n_vars_);
      for (std::size_t j = 0; j < n_vars_; ++j) e[j] = ea[j] + eb[j];
      auto [it, inserted] = product.try_emplace(std::move(e), ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(product, [](const auto& kv) { return kv.second.is_zero(); });
  terms_ = std::move(product);
  rebuild_cache();
  return *this;
}

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& [exponent, coefficient] : terms_) coefficient *= c;
  }
  rebuild_cache();
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(n_vars_, GaussianRational(1));
  Polynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest degree first, then the map's lexicographic order reversed.
  std::vector<const TermMap::value_type*> ordered;
  for (const auto& kv : terms_) ordered.push_back(&kv);
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto* a, const auto* b) {
    const unsigned da = total_degree(a->first);
    const unsigned db = total_degree(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  for (const auto* term : ordered) {
    const auto& [exponent, coefficient] = *term;
    std::string monomial;
    for (std::size_t j = 0; j < n_vars_; ++j) {
      if (exponent[j] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += "z" + std::to_string(j + 1);
      if (exponent[j] > 1) monomial += "^" + std::to_string(exponent[j]);
    }
    GaussianRational c = coefficient;
    bool negative = false;
    if (c.im == 0 && c.re < 0) {
      negative = true;
      c = -c;
    }
    if (!first) out << (negative ? " - " : " + ");
    else if (negative) out << "-";
    first = false;

    const bool unit = c.im == 0 && c.re == 1;
    const bool needs_parens = c.im != 0 || boost::multiprecision::denominator(c.re) != 1;
    std::string coeff_text = milnor::to_string(c);
    if (needs_parens) coeff_text = "(" + coeff_text + ")";
    if (monomial.empty()) {
      out << milnor::to_string(c);
    } else if (unit) {
      out << monomial;
    } else {
      out << coeff_text << "*" << monomial;
    }
  }
  return out.str();
}

}  // namespace milnor
