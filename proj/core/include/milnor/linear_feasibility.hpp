#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milnor/rational.hpp"

namespace milnor {

using RationalVector = std::vector<Rational>;
using RationalRows = std::vector<RationalVector>;

/// Exact solution set of {A x = b, x > 0} over the rationals.
struct PositiveSolution {
  /// A strictly positive solution chosen deterministically (see below).
  RationalVector point;
  /// Basis of ker(A); empty when the affine solution set is a single point.
  RationalRows kernel_basis;
};

struct FeasibilityResult {
  std::optional<PositiveSolution> solution;
  /// Why there is no solution: "inconsistent" (A x = b has none) or
  /// "no positive solution".
  std::string reason;
};

/// Gauss-Jordan elimination on [A | b], then Fourier-Motzkin elimination of
/// the strict positivity constraints over the free parameters. The returned
/// point back-substitutes the midpoint of each parameter's feasible interval;
/// a half-unbounded interval takes its finite end +/- 1, a fully unbounded one
/// takes 0.
FeasibilityResult solve_strictly_positive(const RationalRows& a, const RationalVector& b);

/// A x computed exactly.
RationalVector multiply(const RationalRows& a, const RationalVector& x);

}  // namespace milnor
