#pragma once

#include <optional>
#include <string>
#include <vector>

#include "milnor/linalg.hpp"
#include "milnor/log_derivatives.hpp"
#include "milnor/polynomial.hpp"
#include "milnor/weights.hpp"

namespace milnor {

struct Tolerances {
  /// Unit-column matrix is rank deficient iff its smallest singular value
  /// is at most this.
  double rank = 1e-8;
  /// |det Re(V^T H V)| > fold * |Re(V^T H V)|_F^(2n-2) declares a fold.
  double fold = 1e-8;
};

/// The product map z -> (f_1/|f_1|, ..., f_m/|f_m|) on the sphere of radius
/// epsilon, minus the links.
class MapSpec {
 public:
  MapSpec(std::vector<Polynomial> polys, double epsilon);

  std::size_t n_vars() const noexcept { return n_; }
  std::size_t size() const noexcept { return jets_.size(); }
  double epsilon() const noexcept { return epsilon_; }
  const PolynomialJet& jet(std::size_t j) const { return jets_.at(j); }
  const std::vector<PolynomialJet>& jets() const noexcept { return jets_; }
  const Polynomial& polynomial(std::size_t j) const { return jets_.at(j).polynomial(); }
  std::vector<Polynomial> polynomials() const;

 private:
  std::vector<PolynomialJet> jets_;
  std::size_t n_;
  double epsilon_;
};

/// A point p with |p| = radius (relative error at most 1e-9).
class SpherePoint {
 public:
  /// Throws OffSphere when |p| differs from radius by more than 1e-9 relative.
  SpherePoint(ComplexVector coords, double radius);
  /// Rescales p onto the sphere when |p| is within `relative_slack` of
  /// radius; throws OffSphere otherwise (or ZeroVector for p = 0).
  static SpherePoint projected(const ComplexVector& p, double radius, double relative_slack);

  const ComplexVector& coords() const noexcept { return coords_; }
  double radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return coords_.size(); }

 private:
  ComplexVector coords_;
  double radius_;
};

enum class Verdict { Singular, Regular, NotApplicable };
std::string to_string(Verdict v);

struct SingularityReport {
  ComplexVector point;
  double numeric_margin = 0.0;
  Verdict numeric_verdict = Verdict::NotApplicable;
  std::optional<double> algebraic_residual;
  Verdict algebraic_verdict = Verdict::NotApplicable;
};

struct DependenceResult {
  bool dependent = false;
  double margin = 0.0;
};

/// Throws OffSphere / PointOnLink when p is not in the domain of the map.
void check_domain(const MapSpec& spec, const SpherePoint& p);

std::vector<cplx> phi(const MapSpec& spec, const SpherePoint& p);

/// m x (2n-1) real matrix of d Phi_p in an orthonormal real basis of T_p S;
/// row j is Re<v, i grad log f_j(p)> / |grad log f_j(p)|.
RealMatrix differential_matrix(const MapSpec& spec, const SpherePoint& p);
int differential_rank(const MapSpec& spec, const SpherePoint& p, const Tolerances& tol = {});

/// Columns p, i grad log f_1(p), ..., i grad log f_m(p) as unit vectors of
/// R^{2n}; the smallest singular value is the margin.
RealMatrix dependence_matrix(const MapSpec& spec, const SpherePoint& p);
SingularityReport is_singular_numeric(const MapSpec& spec, const SpherePoint& p, const Tolerances& tol = {});

/// Jacobian 2x2 minors f_j g_k - f_k g_j at p. Valid only for pairs that
/// carry a common-weight certificate.
SingularityReport is_singular_algebraic(const PolynomialJet& f, const PolynomialJet& g,
                                        const CommonWeightCertificate& cert, const SpherePoint& p,
                                        const Tolerances& tol = {});
/// Throws CertificateRequired when `cert` is empty or does not certify (f, g).
SingularityReport is_singular_algebraic(const Polynomial& f, const Polynomial& g,
                                        const std::optional<CommonWeightCertificate>& cert, const SpherePoint& p,
                                        const Tolerances& tol = {});

/// Numeric report plus, for pairs with a certificate, the algebraic one.
SingularityReport analyze_point(const MapSpec& spec, const SpherePoint& p,
                                const std::optional<CommonWeightCertificate>& cert, const Tolerances& tol = {});

/// Smallest singular value of the complex matrix of unit columns.
DependenceResult complex_dependence(const std::vector<ComplexVector>& vectors, const Tolerances& tol = {});

/// z_j -> z_j exp(2 pi i t / w_j)
ComplexVector circle_action(const ComplexVector& p, const RationalVector& weights, double t);

}  // namespace milnor
