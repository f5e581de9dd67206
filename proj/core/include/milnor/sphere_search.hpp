#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "milnor/singular.hpp"
#include "milnor/weights.hpp"

namespace milnor {

struct SearchSettings {
  int restarts = 64;
  int iterations = 300;
  std::uint64_t seed = 0;
  Tolerances tolerances;
};

struct SearchResult {
  /// Local minima with margin <= 10 * rank tolerance, one per class, sorted
  /// by (margin, lexicographic point).
  std::vector<SingularityReport> hits;
  /// Smallest margin reached by any restart (whether or not it is a hit).
  double min_margin = 0.0;
  /// Final margin of every restart, in restart order.
  std::vector<double> restart_margins;
};

/// Multi-start steepest descent of the dependence margin over the sphere.
/// Each restart draws a Gaussian start (normalized) from a generator seeded
/// by (seed, restart index), so results do not depend on evaluation order.
/// When `cert` is present, hits are identified up to the weighted circle
/// action before deduplication.
SearchResult sphere_search(const MapSpec& spec, const SearchSettings& settings,
                           const std::optional<CommonWeightCertificate>& cert = std::nullopt);

/// Representative of p's orbit under the weighted circle action: the first
/// coordinate with |p_j| > 1e-4 |p| is rotated onto the positive real axis.
ComplexVector phase_normalized(const ComplexVector& p, const RationalVector& weights);

/// Whether b is within `tolerance` of some point of a's orbit under the
/// weighted circle action. Fixing one coordinate's phase leaves the finite
/// group t in w_j Z acting on the others; its elements are tried in turn
/// (at most 4096 of them).
bool same_orbit(const ComplexVector& a, const ComplexVector& b, const RationalVector& weights, double tolerance);

/// Uniform point on the sphere of the given radius.
template <typename Engine>
ComplexVector random_sphere_point(std::size_t n, double radius, Engine& engine);

}  // namespace milnor

#include <random>

namespace milnor {

template <typename Engine>
ComplexVector random_sphere_point(std::size_t n, double radius, Engine& engine) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    ComplexVector p(n);
    for (auto& z : p) {
      const double re = gauss(engine);
      const double im = gauss(engine);
      z = {re, im};
    }
    const double len = norm(p);
    if (len > 1e-12) return scaled(p, radius / len);
  }
}

}  // namespace milnor
