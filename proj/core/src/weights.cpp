#include "milnor/weights.hpp"

#include "milnor/error.hpp"

namespace milnor {

namespace {

void check_no_constant(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "the zero polynomial has no weights");
  if (f.has_constant_term())
    throw Error(ErrorCode::ConstantTermPresent, "polynomial has constant term " + to_string(f.constant_term()));
}

RationalVector reciprocals(const RationalVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const Rational& x : v) out.push_back(1 / x);
  return out;
}

}  // namespace

ExponentMatrix ExponentMatrix::of(const Polynomial& f) {
  ExponentMatrix b{f.n_vars(), {}};
  for (const auto& [exponent, coefficient] : f.terms()) b.rows.push_back(exponent);
  return b;
}

RationalRows ExponentMatrix::to_rational() const {
  RationalRows out;
  out.reserve(rows.size());
  for (const Exponent& e : rows) {
    RationalVector r;
    r.reserve(e.size());
    for (unsigned x : e) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

RationalVector CommonWeightCertificate::reciprocal_weights() const { return reciprocals(weights); }

bool CommonWeightCertificate::integral_factors() const {
  for (const Rational& s : factors)
    if (boost::multiprecision::denominator(s) != 1) return false;
  return true;
}

WeightSolution try_weight_space(const Polynomial& f) {
  check_no_constant(f);
  const ExponentMatrix b = ExponentMatrix::of(f);
  const FeasibilityResult r = solve_strictly_positive(b.to_rational(), RationalVector(b.rows.size(), Rational(1)));
  WeightSolution out;
  if (!r.solution) {
    out.reason = r.reason;
    return out;
  }
  out.feasible = true;
  out.reciprocal_point = r.solution->point;
  out.kernel_basis = r.solution->kernel_basis;
  out.canonical_weights = reciprocals(out.reciprocal_point);
  return out;
}

WeightSolution weight_space(const Polynomial& f) {
  WeightSolution w = try_weight_space(f);
  if (!w.feasible)
    throw Error(ErrorCode::NotWeightedHomogeneous, f.to_string() + " admits no positive weights (" + w.reason + ")");
  return w;
}

std::optional<CommonWeightCertificate> common_weights(const Polynomial& f, const Polynomial& g) {
  return common_weights_multi({f, g});
}

std::optional<CommonWeightCertificate> common_weights_multi(const std::vector<Polynomial>& polys) {
  if (polys.empty()) throw Error(ErrorCode::InvalidArgument, "common_weights_multi: no polynomials");
  const std::size_t n = polys.front().n_vars();
  const std::size_t m = polys.size();
  for (const Polynomial& f : polys) {
    if (f.n_vars() != n) throw Error(ErrorCode::DimensionMismatch, "polynomials in different variable counts");
    check_no_constant(f);
  }

  // Unknowns (u_1..u_n, s_2..s_m):  B_1 u = 1,  B_j u - s_j 1 = 0.
  const std::size_t unknowns = n + m - 1;
  RationalRows a;
  RationalVector rhs;
  for (std::size_t j = 0; j < m; ++j) {
    for (const Exponent& e : ExponentMatrix::of(polys[j]).rows) {
      RationalVector row(unknowns);
      for (std::size_t k = 0; k < n; ++k) row[k] = e[k];
      if (j == 0) {
        rhs.emplace_back(1);
      } else {
        row[n + j - 1] = -1;
        rhs.emplace_back(0);
      }
      a.push_back(std::move(row));
    }
  }
  const FeasibilityResult r = solve_strictly_positive(a, rhs);
  if (!r.solution) return std::nullopt;

  const RationalVector& x = r.solution->point;
  CommonWeightCertificate cert;
  cert.weights = reciprocals(RationalVector(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n)));
  cert.factors.emplace_back(1);
  cert.factors.insert(cert.factors.end(), x.begin() + static_cast<std::ptrdiff_t>(n), x.end());
  if (!certifies(cert, polys)) throw Error(ErrorCode::InvariantViolation, "certificate failed its own exact check");
  return cert;
}

bool certifies(const CommonWeightCertificate& cert, const std::vector<Polynomial>& polys) {
  if (cert.factors.size() != polys.size()) return false;
  const RationalVector u = cert.reciprocal_weights();
  for (std::size_t j = 0; j < polys.size(); ++j) {
    if (polys[j].n_vars() != u.size() || cert.factors[j] <= 0) return false;
    for (const auto& [exponent, coefficient] : polys[j].terms()) {
      Rational acc = 0;
      for (std::size_t k = 0; k < u.size(); ++k) acc += u[k] * exponent[k];
      if (acc != cert.factors[j]) return false;
    }
  }
  for (const Rational& w : cert.weights)
    if (w <= 0) return false;
  return true;
}

}  // namespace milnor
