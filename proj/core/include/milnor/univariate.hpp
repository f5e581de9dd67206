#pragma once

#include <vector>

#include "milnor/linalg.hpp"
#include "milnor/rational.hpp"

namespace milnor {

/// Dense univariate polynomial, coefficient k multiplies t^k. Trailing zero
/// coefficients are trimmed by every operation below.
using ExactUnivariate = std::vector<GaussianRational>;

int degree(const ExactUnivariate& p);  // -1 for the zero polynomial
ExactUnivariate trimmed(ExactUnivariate p);
ExactUnivariate derivative(const ExactUnivariate& p);
/// Monic greatest common divisor.
ExactUnivariate gcd(ExactUnivariate a, ExactUnivariate b);
/// a / b, which must divide exactly.
ExactUnivariate exact_quotient(const ExactUnivariate& a, const ExactUnivariate& b);
/// p / gcd(p, p'): same roots, all simple.
ExactUnivariate squarefree_part(const ExactUnivariate& p);
std::vector<cplx> to_complex(const ExactUnivariate& p);

struct AberthSettings {
  int max_iterations = 200;
  /// Required backward error |p(z)| / sum_k |a_k| |z|^k at every root.
  double residual_tolerance = 1e-10;
};

struct RootSet {
  std::vector<cplx> roots;
  double max_residual = 0.0;
  int iterations = 0;
};

/// All roots of a polynomial with nonzero leading coefficient by
/// Aberth-Ehrlich simultaneous iteration, started on a circle of the Cauchy
/// radius. Throws RootFindingDidNotConverge when the backward error stays
/// above the tolerance.
RootSet aberth_roots(const std::vector<cplx>& coefficients, const AberthSettings& settings = {});

/// |p(z)| / sum_k |a_k| |z|^k
double relative_residual(const std::vector<cplx>& coefficients, cplx z);

}  // namespace milnor
