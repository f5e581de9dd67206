#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milnor/linear_feasibility.hpp"
#include "milnor/polynomial.hpp"

namespace milnor {

/// One row per stored monomial, one column per variable.
struct ExponentMatrix {
  std::size_t n_vars = 0;
  std::vector<Exponent> rows;

  static ExponentMatrix of(const Polynomial& f);
  RationalRows to_rational() const;
};

/// Solution set of { B u = 1, u > 0 } for the reciprocal weights u_j = 1/w_j.
struct WeightSolution {
  bool feasible = false;
  std::string reason;
  RationalVector reciprocal_point;
  RationalRows kernel_basis;
  RationalVector canonical_weights;

  bool unique() const { return feasible && kernel_basis.empty(); }
};

/// Weights w_f shared by a tuple, with w_{f_j} = s_j w_f and s_1 = 1.
struct CommonWeightCertificate {
  RationalVector weights;
  RationalVector factors;

  RationalVector reciprocal_weights() const;
  /// s for a pair (f, g): factors[1].
  const Rational& s() const { return factors.at(1); }
  bool integral_factors() const;
};

/// Never throws for infeasible systems; reports them through `feasible`.
WeightSolution try_weight_space(const Polynomial& f);
/// Throws NotWeightedHomogeneous when no positive weights exist and
/// ConstantTermPresent when f(0) != 0.
WeightSolution weight_space(const Polynomial& f);

std::optional<CommonWeightCertificate> common_weights(const Polynomial& f, const Polynomial& g);
std::optional<CommonWeightCertificate> common_weights_multi(const std::vector<Polynomial>& polys);

/// Exact check that every monomial of polys[j] satisfies sum_k b_k / (s_j w_k) = 1.
bool certifies(const CommonWeightCertificate& cert, const std::vector<Polynomial>& polys);

}  // namespace milnor
