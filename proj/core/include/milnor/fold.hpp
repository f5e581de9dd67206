#pragma once

#include <optional>

#include "milnor/linalg.hpp"
#include "milnor/log_derivatives.hpp"
#include "milnor/singular.hpp"
#include "milnor/weights.hpp"

namespace milnor {

/// Real symmetric form Re(V^T H V) restricted to the kernel directions and
/// what it says about a fold.
struct ReducedForm {
  RealMatrix matrix;
  double det = 0.0;
  RealVector eigenvalues;  // ascending
  double threshold = 0.0;  // fold tolerance * |matrix|_F^(size)
  bool numerically_zero = false;
  bool is_fold = false;
  /// |det| within [0.1, 10] x threshold.
  bool indeterminate = false;
  int negative_count = 0;
};

/// `reference_scale` is the size below which |Re(V^T H V)|_F counts as
/// rounding noise (H itself may be pure cancellation).
ReducedForm reduce_form(const ComplexMatrix& hessian, const ComplexMatrix& basis, double reference_scale,
                        const Tolerances& tol = {});

struct FoldReport {
  ComplexVector point;
  Rational s;
  ComplexMatrix hessian;  // H = -i (Hess log g - s Hess log f)
  ComplexMatrix real_basis;  // V, n x (2n-2), columns of length |p|
  std::optional<ComplexMatrix> complex_basis;  // W, n x (n-1), when c_dependent
  ReducedForm form;
  double det_real = 0.0;
  std::optional<cplx> det_complex;
  /// |det_real - (-1)^(n-1) |det_complex|^2| / |det_real|, when c_dependent.
  std::optional<double> identity_residual;
  RealVector eigenvalues;
  bool is_fold = false;
  bool indeterminate = false;
  std::optional<int> index;           // negative eigenvalue count
  std::optional<int> absolute_index;  // min(k, 2n-2-k)
  bool c_dependent = false;
  double c_dependence_margin = 0.0;
  double singularity_residual = 0.0;
};

/// Real basis (as complex columns, orthonormal over R) of
/// { v : Re<v, p> = Re<v, q> = 0 }. Throws DegenerateSpan when p and q are
/// real-dependent.
ComplexMatrix real_tangent_basis(const ComplexVector& p, const ComplexVector& q);

/// Complex basis of { v : <v, p> = 0 }. Columns have length |p| and the
/// phase of their first significant coordinate equals that of p, so that
/// W^T H W is invariant under p -> e^{i theta} p for homogeneous pairs.
ComplexMatrix complex_tangent_basis(const ComplexVector& p);

/// Fold criterion at a singular point of a certified pair. Throws
/// NotSingular for regular points and CertificateRequired when `cert` does
/// not certify (f, g).
FoldReport fold_test(const PolynomialJet& f, const PolynomialJet& g, const CommonWeightCertificate& cert,
                     const SpherePoint& p, const Tolerances& tol = {});
FoldReport fold_test(const Polynomial& f, const Polynomial& g, const CommonWeightCertificate& cert,
                     const SpherePoint& p, const Tolerances& tol = {});

/// Negative eigenvalue count of a fold. In the c_dependent case also checks
/// that the eigenvalues come in +-lambda pairs and that the count is n-1,
/// throwing InvariantViolation otherwise. Throws NotAFold for non-folds.
int index_of(const FoldReport& report);

}  // namespace milnor
