#pragma once

#include <vector>

#include "milnor/linalg.hpp"
#include "milnor/polynomial.hpp"
#include "milnor/univariate.hpp"

namespace milnor {

/// Singular set of the map for a pair of homogeneous polynomials in two
/// variables: the circles {eps e^{i theta} d} for each direction d.
struct CircleFamily {
  std::vector<ComplexVector> directions;  // unit vectors, one per circle
  double radius = 0.0;
  std::size_t count = 0;
  unsigned bound = 0;  // deg f + deg g - 2
  bool degenerate_all_singular = false;
  /// R = f_1 g_2 - f_2 g_1, exact.
  Polynomial minor{2};
};

/// Throws NotHomogeneous, DimensionMismatch (n != 2) and
/// RootFindingDidNotConverge.
CircleFamily homogeneous_2var_circles(const Polynomial& f, const Polynomial& g, double epsilon,
                                      const AberthSettings& settings = {});

/// sqrt(1 - |<a, b>|^2) for unit vectors; distance between the complex lines.
double chordal_distance(const ComplexVector& a, const ComplexVector& b);

}  // namespace milnor
