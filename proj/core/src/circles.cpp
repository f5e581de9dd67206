#include "milnor/circles.hpp"

#include <cmath>

#include "milnor/error.hpp"

namespace milnor {

namespace {

double coefficient_mass(const Polynomial& f) {
  double acc = 0.0;
  for (const auto& [exponent, coefficient] : f.terms()) acc += std::abs(coefficient.to_complex());
  return acc;
}

/// f vanishes on the whole circle through the unit direction d.
bool vanishes_on(const Polynomial& f, const ComplexVector& d) {
  return std::abs(f.evaluate(d)) <= 1e-9 * coefficient_mass(f);
}

}  // namespace

double chordal_distance(const ComplexVector& a, const ComplexVector& b) {
  const double overlap = std::norm(hermitian(a, b)) / (std::norm(norm(a)) * std::norm(norm(b)));
  return std::sqrt(std::max(0.0, 1.0 - overlap));
}

CircleFamily homogeneous_2var_circles(const Polynomial& f, const Polynomial& g, double epsilon,
                                      const AberthSettings& settings) {
  if (f.n_vars() != 2 || g.n_vars() != 2)
    throw Error(ErrorCode::DimensionMismatch, "circle enumeration needs polynomials in exactly two variables");
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero polynomial");
  if (!f.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, f.to_string() + " is not homogeneous");
  if (!g.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, g.to_string() + " is not homogeneous");
  if (f.degree() == 0 || g.degree() == 0) throw Error(ErrorCode::ConstantTermPresent, "constant polynomial");

  CircleFamily family;
  family.radius = epsilon;
  family.bound = f.degree() + g.degree() - 2;
  family.minor = f.partial(0) * g.partial(1) - f.partial(1) * g.partial(0);
  if (family.minor.is_zero()) {
    family.degenerate_all_singular = true;
    return family;
  }

  // R(z1, z2) = sum_k c_k z1^(d-k) z2^k  ->  R(1, t) = sum_k c_k t^k
  const unsigned d = family.minor.degree();
  ExactUnivariate dehomogenized(d + 1);
  for (const auto& [exponent, coefficient] : family.minor.terms()) dehomogenized[exponent[1]] = coefficient;
  dehomogenized = trimmed(std::move(dehomogenized));

  std::vector<ComplexVector> candidates;
  // A drop in degree means z1 divides R: the line z1 = 0.
  if (degree(dehomogenized) < static_cast<int>(d)) candidates.push_back({cplx{0.0, 0.0}, cplx{1.0, 0.0}});
  if (degree(dehomogenized) >= 1) {
    const RootSet roots = aberth_roots(to_complex(squarefree_part(dehomogenized)), settings);
    for (const cplx& t : roots.roots) {
      const double len = std::sqrt(1.0 + std::norm(t));
      candidates.push_back({cplx{1.0 / len, 0.0}, t / len});
    }
  }

  for (const ComplexVector& dir : candidates) {
    if (vanishes_on(f, dir) || vanishes_on(g, dir)) continue;
    bool duplicate = false;
    for (const ComplexVector& kept : family.directions)
      if (chordal_distance(dir, kept) <= 1e-7) duplicate = true;
    if (!duplicate) family.directions.push_back(dir);
  }
  family.count = family.directions.size();
  if (family.count > family.bound)
    throw Error(ErrorCode::InvariantViolation, "circle count exceeds deg f + deg g - 2");
  return family;
}

}  // namespace milnor
