#include "milnor/singular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "milnor/error.hpp"

namespace milnor {

namespace {

constexpr cplx kI{0.0, 1.0};

RealVector unit(RealVector v) {
  const double len = norm(v);
  if (len == 0.0) throw Error(ErrorCode::ZeroVector, "cannot normalize the zero vector");
  for (double& x : v) x /= len;
  return v;
}

}  // namespace

MapSpec::MapSpec(std::vector<Polynomial> polys, double epsilon) : epsilon_(epsilon) {
  if (polys.empty()) throw Error(ErrorCode::InvalidArgument, "a map needs at least one polynomial");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
  n_ = polys.front().n_vars();
  if (polys.size() > 2 * n_ - 1)
    throw Error(ErrorCode::InvalidArgument, "at most 2n-1 polynomials are allowed in n variables");
  for (auto& f : polys) {
    if (f.n_vars() != n_) throw Error(ErrorCode::DimensionMismatch, "polynomials in different variable counts");
    if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "the zero polynomial has an empty domain");
    if (f.has_constant_term())
      throw Error(ErrorCode::ConstantTermPresent, f.to_string() + " does not vanish at the origin");
    jets_.emplace_back(std::move(f));
  }
}

std::vector<Polynomial> MapSpec::polynomials() const {
  std::vector<Polynomial> out;
  for (const auto& j : jets_) out.push_back(j.polynomial());
  return out;
}

SpherePoint::SpherePoint(ComplexVector coords, double radius) : coords_(std::move(coords)), radius_(radius) {
  const double len = norm(coords_);
  if (!(radius > 0.0) || std::abs(len - radius) > 1e-9 * radius)
    throw Error(ErrorCode::OffSphere, "|p| = " + std::to_string(len) + " but the sphere radius is " +
                                          std::to_string(radius));
}

SpherePoint SpherePoint::projected(const ComplexVector& p, double radius, double relative_slack) {
  const double len = norm(p);
  if (len == 0.0) throw Error(ErrorCode::ZeroVector, "the origin is not on any sphere");
  if (std::abs(len - radius) > relative_slack * radius)
    throw Error(ErrorCode::OffSphere, "|p| = " + std::to_string(len) + " is too far from epsilon = " +
                                          std::to_string(radius));
  return SpherePoint(scaled(p, radius / len), radius);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Singular: return "singular";
    case Verdict::Regular: return "regular";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

void check_domain(const MapSpec& spec, const SpherePoint& p) {
  if (p.size() != spec.n_vars()) throw Error(ErrorCode::DimensionMismatch, "point dimension differs from n");
  if (std::abs(p.radius() - spec.epsilon()) > 1e-9 * spec.epsilon())
    throw Error(ErrorCode::OffSphere, "point lies on the sphere of radius " + std::to_string(p.radius()) +
                                          ", expected " + std::to_string(spec.epsilon()));
  for (std::size_t j = 0; j < spec.size(); ++j) {
    const Polynomial& f = spec.polynomial(j);
    const double value = std::abs(f.evaluate(p.coords()));
    if (value <= f.zero_tolerance(p.coords()))
      throw Error(ErrorCode::PointOnLink,
                  "|f" + std::to_string(j + 1) + "(p)| = " + std::to_string(value) + " is on the link");
  }
}

std::vector<cplx> phi(const MapSpec& spec, const SpherePoint& p) {
  check_domain(spec, p);
  std::vector<cplx> out;
  for (const auto& jet : spec.jets()) {
    const cplx v = jet.value(p.coords());
    out.push_back(v / std::abs(v));
  }
  return out;
}

RealMatrix differential_matrix(const MapSpec& spec, const SpherePoint& p) {
  check_domain(spec, p);
  const std::size_t dim = 2 * spec.n_vars();
  const std::vector<RealVector> tangent = orthonormal_complement({unit(to_real(p.coords()))}, dim);
  RealMatrix d(spec.size(), tangent.size());
  for (std::size_t j = 0; j < spec.size(); ++j) {
    const RealVector q = to_real(scaled(spec.jet(j).log_gradient(p.coords()), kI));
    const double len = norm(q);
    for (std::size_t c = 0; c < tangent.size(); ++c) {
      double acc = 0.0;
      for (std::size_t r = 0; r < dim; ++r) acc += tangent[c][r] * q[r];
      d(j, c) = acc / len;
    }
  }
  return d;
}

int differential_rank(const MapSpec& spec, const SpherePoint& p, const Tolerances& tol) {
  const RealVector sv = singular_values(differential_matrix(spec, p));
  return static_cast<int>(std::count_if(sv.begin(), sv.end(), [&](double s) { return s > tol.rank; }));
}

RealMatrix dependence_matrix(const MapSpec& spec, const SpherePoint& p) {
  check_domain(spec, p);
  std::vector<RealVector> columns;
  columns.push_back(unit(to_real(p.coords())));
  for (const auto& jet : spec.jets()) columns.push_back(unit(to_real(scaled(jet.log_gradient(p.coords()), kI))));
  return RealMatrix::from_columns(columns);
}

SingularityReport is_singular_numeric(const MapSpec& spec, const SpherePoint& p, const Tolerances& tol) {
  SingularityReport report;
  report.point = p.coords();
  const RealVector sv = singular_values(dependence_matrix(spec, p));
  report.numeric_margin = sv.back();
  report.numeric_verdict = report.numeric_margin <= tol.rank ? Verdict::Singular : Verdict::Regular;
  return report;
}

SingularityReport is_singular_algebraic(const PolynomialJet& f, const PolynomialJet& g,
                                        const CommonWeightCertificate& cert, const SpherePoint& p,
                                        const Tolerances& tol) {
  if (!certifies(cert, {f.polynomial(), g.polynomial()}))
    throw Error(ErrorCode::CertificateRequired, "certificate does not certify w_g = s w_f for this pair");
  if (p.size() != f.n_vars() || f.n_vars() != g.n_vars())
    throw Error(ErrorCode::DimensionMismatch, "point dimension differs from n");
  for (const PolynomialJet* jet : {&f, &g}) {
    const double value = std::abs(jet->value(p.coords()));
    if (value <= jet->polynomial().zero_tolerance(p.coords()))
      throw Error(ErrorCode::PointOnLink, "|" + jet->polynomial().to_string() + "| = " + std::to_string(value) +
                                              " at p: the point is on the link");
  }

  const ComplexVector df = f.gradient(p.coords());
  const ComplexVector dg = g.gradient(p.coords());
  double worst = 0.0;
  for (std::size_t j = 0; j < df.size(); ++j)
    for (std::size_t k = j + 1; k < df.size(); ++k) worst = std::max(worst, std::abs(df[j] * dg[k] - df[k] * dg[j]));

  SingularityReport report;
  report.point = p.coords();
  report.algebraic_residual = worst / (norm(df) * norm(dg) + 1e-30);
  report.algebraic_verdict = *report.algebraic_residual <= tol.rank ? Verdict::Singular : Verdict::Regular;
  return report;
}

SingularityReport is_singular_algebraic(const Polynomial& f, const Polynomial& g,
                                        const std::optional<CommonWeightCertificate>& cert, const SpherePoint& p,
                                        const Tolerances& tol) {
  if (!cert) throw Error(ErrorCode::CertificateRequired, "the minor criterion needs w_g = s w_f");
  return is_singular_algebraic(PolynomialJet(f), PolynomialJet(g), *cert, p, tol);
}

SingularityReport analyze_point(const MapSpec& spec, const SpherePoint& p,
                                const std::optional<CommonWeightCertificate>& cert, const Tolerances& tol) {
  SingularityReport report = is_singular_numeric(spec, p, tol);
  if (cert && spec.size() == 2) {
    const SingularityReport alg = is_singular_algebraic(spec.jet(0), spec.jet(1), *cert, p, tol);
    report.algebraic_residual = alg.algebraic_residual;
    report.algebraic_verdict = alg.algebraic_verdict;
  }
  return report;
}

DependenceResult complex_dependence(const std::vector<ComplexVector>& vectors, const Tolerances& tol) {
  if (vectors.empty()) throw Error(ErrorCode::InvalidArgument, "complex_dependence: no vectors");
  const std::size_t dim = vectors.front().size();
  std::vector<ComplexVector> columns;
  for (const auto& v : vectors) {
    if (v.size() != dim) throw Error(ErrorCode::DimensionMismatch, "complex_dependence: vector lengths differ");
    const double len = norm(v);
    if (len == 0.0) return {true, 0.0};
    columns.push_back(scaled(v, 1.0 / len));
  }
  const RealVector sv = singular_values(ComplexMatrix::from_columns(columns));
  const double margin = sv.back();
  return {margin <= tol.rank, margin};
}

ComplexVector circle_action(const ComplexVector& p, const RationalVector& weights, double t) {
  if (weights.size() != p.size()) throw Error(ErrorCode::DimensionMismatch, "circle_action: weight count");
  ComplexVector out(p);
  for (std::size_t j = 0; j < p.size(); ++j) out[j] *= std::polar(1.0, 2.0 * std::numbers::pi * t / to_double(weights[j]));
  return out;
}

}  // namespace milnor
