#include "milnor/fold.hpp"

#include <algorithm>
#include <cmath>

#include "milnor/error.hpp"

namespace milnor {

namespace {

constexpr cplx kI{0.0, 1.0};

std::size_t leading_index(const ComplexVector& v) {
  const double len = norm(v);
  for (std::size_t j = 0; j < v.size(); ++j)
    if (std::abs(v[j]) > 1e-4 * len) return j;
  return 0;
}

}  // namespace

ReducedForm reduce_form(const ComplexMatrix& hessian, const ComplexMatrix& basis, double reference_scale,
                        const Tolerances& tol) {
  ReducedForm form;
  form.matrix = real_part(basis.transpose() * hessian * basis);
  const std::size_t k = form.matrix.rows();
  const double scale = frobenius_norm(form.matrix);
  form.det = determinant(form.matrix);
  form.eigenvalues = symmetric_eigenvalues(form.matrix);
  form.threshold = tol.fold * std::pow(scale, static_cast<double>(k));
  form.numerically_zero = scale <= tol.rank * reference_scale;
  form.is_fold = !form.numerically_zero && std::abs(form.det) > form.threshold;
  form.indeterminate = !form.numerically_zero && form.threshold > 0.0 &&
                       std::abs(form.det) >= 0.1 * form.threshold && std::abs(form.det) <= 10.0 * form.threshold;
  form.negative_count =
      static_cast<int>(std::count_if(form.eigenvalues.begin(), form.eigenvalues.end(), [](double x) { return x < 0; }));
  return form;
}

ComplexMatrix real_tangent_basis(const ComplexVector& p, const ComplexVector& q) {
  if (p.size() != q.size()) throw Error(ErrorCode::DimensionMismatch, "real_tangent_basis: lengths differ");
  RealVector a = to_real(p);
  RealVector b = to_real(q);
  const double la = norm(a);
  const double lb = norm(b);
  if (la == 0.0 || lb == 0.0) throw Error(ErrorCode::DegenerateSpan, "p or q is zero");
  for (double& x : a) x /= la;
  double overlap = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) overlap += a[k] * b[k];
  for (std::size_t k = 0; k < a.size(); ++k) b[k] -= overlap * a[k];
  const double residual = norm(b);
  if (residual <= 1e-10 * lb) throw Error(ErrorCode::DegenerateSpan, "p and q are linearly dependent over R");
  for (double& x : b) x /= residual;

  const std::vector<RealVector> rest = orthonormal_complement({a, b}, a.size());
  std::vector<ComplexVector> columns;
  for (const RealVector& r : rest) columns.push_back(from_real(r));
  return ComplexMatrix::from_columns(columns);
}

ComplexMatrix complex_tangent_basis(const ComplexVector& p) {
  const double len = norm(p);
  if (len == 0.0) throw Error(ErrorCode::ZeroVector, "complex_tangent_basis: p = 0");
  if (p.size() < 2) return ComplexMatrix(p.size(), 0);
  const cplx p_phase = std::polar(1.0, std::arg(p[leading_index(p)]));
  std::vector<ComplexVector> columns = orthonormal_complement({scaled(p, 1.0 / len)}, p.size());
  for (ComplexVector& c : columns) {
    const cplx c_phase = std::polar(1.0, std::arg(c[leading_index(c)]));
    c = scaled(c, len * p_phase / c_phase);
  }
  return ComplexMatrix::from_columns(columns);
}

FoldReport fold_test(const PolynomialJet& f, const PolynomialJet& g, const CommonWeightCertificate& cert,
                     const SpherePoint& p, const Tolerances& tol) {
  const SingularityReport check = is_singular_algebraic(f, g, cert, p, tol);
  if (check.algebraic_verdict != Verdict::Singular)
    throw Error(ErrorCode::NotSingular,
                "minor residual " + std::to_string(*check.algebraic_residual) + " exceeds the rank tolerance");

  const ComplexVector& z = p.coords();
  const std::size_t n = z.size();
  const double radius = norm(z);

  FoldReport report;
  report.point = z;
  report.s = cert.s();
  report.singularity_residual = *check.algebraic_residual;
  report.hessian = combined_hessian(f, g, report.s, z);

  const ComplexVector q = scaled(f.log_gradient(z), kI);
  const DependenceResult dep = complex_dependence({z, q}, tol);
  report.c_dependent = dep.dependent;
  report.c_dependence_margin = dep.margin;

  if (report.c_dependent) {
    ComplexMatrix w = complex_tangent_basis(z);
    ComplexMatrix v(n, 2 * (n - 1));
    for (std::size_t c = 0; c + 1 < n; ++c) {
      const ComplexVector col = w.column(c);
      v.set_column(c, col);
      v.set_column(c + n - 1, scaled(col, kI));
    }
    report.det_complex = determinant(w.transpose() * report.hessian * w);
    report.complex_basis = std::move(w);
    report.real_basis = std::move(v);
  } else {
    ComplexMatrix v = real_tangent_basis(z, q);
    for (std::size_t r = 0; r < v.rows(); ++r)
      for (std::size_t c = 0; c < v.cols(); ++c) v(r, c) *= radius;
    report.real_basis = std::move(v);
  }

  const double reference = radius * radius *
                           (frobenius_norm(g.log_hessian(z)) + std::abs(to_double(report.s)) * frobenius_norm(f.log_hessian(z)));
  report.form = reduce_form(report.hessian, report.real_basis, reference, tol);
  report.det_real = report.form.det;
  report.eigenvalues = report.form.eigenvalues;
  report.is_fold = report.form.is_fold;
  report.indeterminate = report.form.indeterminate;
  if (report.is_fold) {
    const int k = report.form.negative_count;
    report.index = k;
    report.absolute_index = std::min(k, static_cast<int>(2 * n - 2) - k);
  }
  if (report.det_complex) {
    const double sign = (n - 1) % 2 == 0 ? 1.0 : -1.0;
    const double expected = sign * std::norm(*report.det_complex);
    report.identity_residual = std::abs(report.det_real - expected) / std::max(std::abs(report.det_real), 1e-300);
  }
  return report;
}

FoldReport fold_test(const Polynomial& f, const Polynomial& g, const CommonWeightCertificate& cert,
                     const SpherePoint& p, const Tolerances& tol) {
  return fold_test(PolynomialJet(f), PolynomialJet(g), cert, p, tol);
}

int index_of(const FoldReport& report) {
  if (!report.is_fold) throw Error(ErrorCode::NotAFold, "index is only defined at fold points");
  const RealVector& ev = report.eigenvalues;
  const int negatives = static_cast<int>(std::count_if(ev.begin(), ev.end(), [](double x) { return x < 0; }));
  if (report.c_dependent) {
    const double scale = std::max(frobenius_norm(report.form.matrix), 1e-300);
    for (std::size_t k = 0; k < ev.size(); ++k) {
      if (std::abs(ev[k] + ev[ev.size() - 1 - k]) >= 1e-8 * scale)
        throw Error(ErrorCode::InvariantViolation, "eigenvalues of the reduced form do not pair as +-lambda");
    }
    const int expected = static_cast<int>(report.point.size()) - 1;
    if (negatives != expected)
      throw Error(ErrorCode::InvariantViolation,
                  "index " + std::to_string(negatives) + " differs from n-1 = " + std::to_string(expected));
  }
  return negatives;
}

}  // namespace milnor
