#include "cli/commands.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <sstream>

#include "milnor/circles.hpp"
#include "milnor/fold.hpp"
#include "milnor/parser.hpp"
#include "milnor/sphere_search.hpp"
#include "milnor/suites.hpp"
#include "milnor/weights.hpp"

namespace milnor::cli {
namespace {

Json complex_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json vector_json(const ComplexVector& v) {
  Json out = Json::array();
  for (cplx z : v) out.push_back(complex_json(z));
  return out;
}

Json vector_json(const RealVector& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(x);
  return out;
}

Json vector_json(const RationalVector& v) {
  Json out = Json::array();
  for (const Rational& q : v) out.push_back(to_fraction_string(q));
  return out;
}

Json matrix_json(const ComplexMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json matrix_json(const RealMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(10) << x;
  return s.str();
}

std::string fmt(cplx z) {
  std::ostringstream s;
  s << std::setprecision(10) << z.real() << (std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag()) << "i";
  return s.str();
}

std::string fmt(const ComplexVector& v) {
  std::string out = "(";
  for (std::size_t j = 0; j < v.size(); ++j) out += (j ? ", " : "") + fmt(v[j]);
  return out + ")";
}

std::string fmt(const RealVector& v) {
  std::string out = "(";
  for (std::size_t j = 0; j < v.size(); ++j) out += (j ? ", " : "") + fmt(v[j]);
  return out + ")";
}

std::string fmt(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t j = 0; j < v.size(); ++j) out += (j ? ", " : "") + to_fraction_string(v[j]);
  return out + ")";
}

Json tolerances_json(const Tolerances& tol) { return Json{{"rank", tol.rank}, {"fold", tol.fold}}; }

Json base_document(const std::string& command, const JobConfig& config) {
  Json doc;
  doc["schema"] = kSchema;
  doc["tool"] = Json{{"name", "milnor"}, {"version", kToolVersion}};
  doc["command"] = command;
  Json echo;
  echo["polynomials"] = config.polynomials;
  if (config.epsilon) echo["epsilon"] = *config.epsilon;
  echo["seed"] = config.seed;
  echo["tolerances"] = tolerances_json(config.tolerances());
  if (config.point) echo["point"] = *config.point;
  if (command == "singular") {
    echo["scan"] = config.scan;
    echo["circles"] = config.circles;
  }
  if (command == "singular" || command == "verify") {
    echo["restarts"] = config.restarts;
    echo["iterations"] = config.iterations;
  }
  if (command == "verify") {
    echo["suite"] = config.suite;
    echo["m"] = config.m_values;
    echo["n"] = config.n_values;
  }
  doc["config"] = std::move(echo);
  return doc;
}

std::vector<Polynomial> parse_inputs(const JobConfig& config) {
  if (config.polynomials.empty()) throw Error(ErrorCode::InvalidArgument, "at least one polynomial is required");
  return parse_polynomials(config.polynomials);
}

void check_epsilon(const JobConfig& config) {
  const double eps = config.epsilon_or_default();
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw Error(ErrorCode::InvalidArgument, "epsilon must be a positive number");
}

Json certificate_json(const CommonWeightCertificate& cert) {
  return Json{{"weights", vector_json(cert.weights)},
              {"factors", vector_json(cert.factors)},
              {"integral_factors", cert.integral_factors()}};
}

std::string certificate_text(const CommonWeightCertificate& cert) {
  std::string text = "common weights w = " + fmt(cert.weights) + ", factors s = " + fmt(cert.factors);
  text += cert.integral_factors() ? " (integral)\n" : " (not all integral)\n";
  return text;
}

Json singularity_json(const SingularityReport& r) {
  Json out;
  out["point"] = vector_json(r.point);
  out["numeric_margin"] = r.numeric_margin;
  out["numeric_verdict"] = to_string(r.numeric_verdict);
  out["algebraic_residual"] = r.algebraic_residual ? Json(*r.algebraic_residual) : Json(nullptr);
  out["algebraic_verdict"] = to_string(r.algebraic_verdict);
  return out;
}

std::string singularity_text(const SingularityReport& r) {
  std::string text = "  point " + fmt(r.point) + "\n";
  text += "    numeric:   " + to_string(r.numeric_verdict) + " (margin " + fmt(r.numeric_margin) + ")\n";
  if (r.algebraic_residual)
    text += "    algebraic: " + to_string(r.algebraic_verdict) + " (residual " + fmt(*r.algebraic_residual) + ")\n";
  return text;
}

CommandResult error_result(CommandResult result, const Error& e) {
  Json err{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    err["line"] = pe->line();
    err["column"] = pe->column();
  }
  result.document["status"] = "error";
  result.document["error"] = std::move(err);
  result.text += std::string("error: ") + e.what() + "\n";
  result.exit_code = exit_code_for(e.code());
  return result;
}

CommandResult guarded(const std::string& command, const JobConfig& config,
                      const std::function<void(CommandResult&)>& body) {
  CommandResult result;
  result.document = base_document(command, config);
  try {
    body(result);
    if (!result.document.contains("status")) result.document["status"] = result.exit_code == kExitOk ? "ok" : "fail";
    return result;
  } catch (const Error& e) {
    return error_result(std::move(result), e);
  }
}

SpherePoint input_point(const JobConfig& config) {
  return SpherePoint::projected(parse_point(*config.point), config.epsilon_or_default(), kPointSlack);
}

}  // namespace

Tolerances JobConfig::tolerances() const {
  Tolerances tol;
  if (tolerance_rank) tol.rank = *tolerance_rank;
  if (tolerance_fold) tol.fold = *tolerance_fold;
  return tol;
}

std::string CommandResult::render(OutputFormat format) const {
  return format == OutputFormat::Json ? to_json_string(document) : text;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSingular:
    case ErrorCode::CertificateRequired:
    case ErrorCode::NotAFold:
    case ErrorCode::NotWeightedHomogeneous:
    case ErrorCode::NotHomogeneous:
    case ErrorCode::DegenerateSpan:
    case ErrorCode::InvariantViolation:
    case ErrorCode::EvaluationOnZeroSet:
      return kExitVerdictFail;
    case ErrorCode::RootFindingDidNotConverge:
      return kExitNonConvergence;
    case ErrorCode::DimensionMismatch:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::ConstantTermPresent:
    case ErrorCode::PointOnLink:
    case ErrorCode::OffSphere:
    case ErrorCode::ZeroVector:
    case ErrorCode::UnknownSuite:
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
      return kExitUsage;
  }
  return kExitUsage;
}

CommandResult cmd_weights(const JobConfig& config) {
  return guarded("weights", config, [&](CommandResult& result) {
    const std::vector<Polynomial> polys = parse_inputs(config);
    Json entries = Json::array();
    bool all_feasible = true;
    for (std::size_t j = 0; j < polys.size(); ++j) {
      const WeightSolution sol = try_weight_space(polys[j]);
      Json entry;
      entry["polynomial"] = polys[j].to_string();
      entry["feasible"] = sol.feasible;
      result.text += "f" + std::to_string(j + 1) + " = " + polys[j].to_string() + "\n";
      if (sol.feasible) {
        entry["family_dimension"] = sol.kernel_basis.size();
        entry["canonical_weights"] = vector_json(sol.canonical_weights);
        entry["reciprocal_point"] = vector_json(sol.reciprocal_point);
        Json kernel = Json::array();
        for (const auto& row : sol.kernel_basis) kernel.push_back(vector_json(row));
        entry["kernel_basis"] = std::move(kernel);
        if (sol.unique()) {
          result.text += "  weights w = " + fmt(sol.canonical_weights) + "\n";
        } else {
          result.text += "  " + std::to_string(sol.kernel_basis.size()) +
                         "-dimensional family of weights, canonical w = " + fmt(sol.canonical_weights) + "\n";
        }
      } else {
        all_feasible = false;
        entry["reason"] = sol.reason;
        result.text += "  not weighted homogeneous: " + sol.reason + "\n";
      }
      entries.push_back(std::move(entry));
    }
    result.document["polynomials"] = std::move(entries);

    bool certified = true;
    if (polys.size() >= 2) {
      const auto cert = common_weights_multi(polys);
      if (cert) {
        result.document["certificate"] = certificate_json(*cert);
        result.text += certificate_text(*cert);
      } else {
        certified = false;
        result.document["certificate"] = nullptr;
        result.text += "no common weights\n";
      }
    }
    result.exit_code = all_feasible && certified ? kExitOk : kExitVerdictFail;
  });
}

CommandResult cmd_singular(const JobConfig& config) {
  return guarded("singular", config, [&](CommandResult& result) {
    check_epsilon(config);
    if (!config.point && !config.scan && !config.circles)
      throw Error(ErrorCode::InvalidArgument, "singular needs --point, --scan or --circles");
    const std::vector<Polynomial> polys = parse_inputs(config);
    const MapSpec spec(polys, config.epsilon_or_default());
    const Tolerances tol = config.tolerances();
    const auto cert = polys.size() >= 2 ? common_weights_multi(polys) : std::nullopt;
    result.document["certificate"] = cert ? certificate_json(*cert) : Json(nullptr);
    if (cert) result.text += certificate_text(*cert);

    if (config.point) {
      const SpherePoint p = input_point(config);
      const SingularityReport report = analyze_point(spec, p, cert, tol);
      Json entry = singularity_json(report);
      Json phases = Json::array();
      for (cplx z : phi(spec, p)) phases.push_back(complex_json(z));
      entry["phi"] = std::move(phases);
      entry["differential_rank"] = differential_rank(spec, p, tol);
      result.document["points"] = Json::array({std::move(entry)});
      result.text += "point analysis:\n" + singularity_text(report);
      result.text += "    rank d(Phi) = " + std::to_string(differential_rank(spec, p, tol)) + " of " +
                     std::to_string(spec.size()) + "\n";
    }

    if (config.scan) {
      SearchSettings settings;
      settings.restarts = config.restarts;
      settings.iterations = config.iterations;
      settings.seed = config.seed;
      settings.tolerances = tol;
      const SearchResult found = sphere_search(spec, settings, cert);
      Json hits = Json::array();
      for (const auto& hit : found.hits) hits.push_back(singularity_json(hit));
      result.document["scan"] = Json{{"restarts", settings.restarts},
                                     {"iterations", settings.iterations},
                                     {"min_margin", found.min_margin},
                                     {"hits", std::move(hits)}};
      result.text += "scan: " + std::to_string(found.hits.size()) + " singular point class(es), minimum margin " +
                     fmt(found.min_margin) + "\n";
      for (const auto& hit : found.hits) result.text += singularity_text(hit);
    }

    if (config.circles) {
      if (polys.size() != 2) throw Error(ErrorCode::InvalidArgument, "--circles needs exactly two polynomials");
      const CircleFamily family = homogeneous_2var_circles(polys[0], polys[1], config.epsilon_or_default());
      Json dirs = Json::array();
      for (const auto& d : family.directions) dirs.push_back(vector_json(d));
      result.document["circles"] = Json{{"minor", family.minor.to_string()},
                                        {"count", family.count},
                                        {"bound", family.bound},
                                        {"radius", family.radius},
                                        {"degenerate_all_singular", family.degenerate_all_singular},
                                        {"directions", std::move(dirs)}};
      if (family.degenerate_all_singular) {
        result.text += "circles: every point is singular (f1 g2 - f2 g1 vanishes identically)\n";
      } else {
        result.text += "circles: " + std::to_string(family.count) + " (bound " + std::to_string(family.bound) + ")\n";
        for (const auto& d : family.directions) result.text += "  direction " + fmt(d) + "\n";
      }
    }
  });
}

CommandResult cmd_fold(const JobConfig& config) {
  return guarded("fold", config, [&](CommandResult& result) {
    check_epsilon(config);
    if (!config.point) throw Error(ErrorCode::InvalidArgument, "fold needs --point");
    const std::vector<Polynomial> polys = parse_inputs(config);
    if (polys.size() != 2) throw Error(ErrorCode::InvalidArgument, "fold needs exactly two polynomials f and g");
    const MapSpec spec(polys, config.epsilon_or_default());
    const auto cert = common_weights(polys[0], polys[1]);
    if (!cert) throw Error(ErrorCode::CertificateRequired, "f and g have no common weights");
    result.document["certificate"] = certificate_json(*cert);
    result.text += certificate_text(*cert);

    const SpherePoint p = input_point(config);
    const FoldReport r = fold_test(spec.jet(0), spec.jet(1), *cert, p, config.tolerances());
    std::optional<int> index;
    if (r.is_fold) index = index_of(r);

    Json out;
    out["point"] = vector_json(r.point);
    out["s"] = to_fraction_string(r.s);
    out["singularity_residual"] = r.singularity_residual;
    out["hessian"] = matrix_json(r.hessian);
    out["reduced_form"] = matrix_json(r.form.matrix);
    out["det_real"] = r.det_real;
    out["threshold"] = r.form.threshold;
    out["numerically_zero"] = r.form.numerically_zero;
    out["c_dependent"] = r.c_dependent;
    out["c_dependence_margin"] = r.c_dependence_margin;
    out["det_complex"] = r.det_complex ? complex_json(*r.det_complex) : Json(nullptr);
    out["identity_residual"] = r.identity_residual ? Json(*r.identity_residual) : Json(nullptr);
    out["eigenvalues"] = vector_json(r.eigenvalues);
    out["is_fold"] = r.is_fold;
    out["indeterminate"] = r.indeterminate;
    out["index"] = index ? Json(*index) : Json(nullptr);
    out["absolute_index"] = index && r.absolute_index ? Json(*r.absolute_index) : Json(nullptr);
    result.document["fold"] = std::move(out);

    result.text += "point " + fmt(r.point) + ", s = " + to_fraction_string(r.s) + "\n";
    result.text += "det Re(V^T H V) = " + fmt(r.det_real) + " (threshold " + fmt(r.form.threshold) + ")\n";
    if (r.det_complex) result.text += "det W^T H W = " + fmt(*r.det_complex) + "\n";
    result.text += "eigenvalues " + fmt(r.eigenvalues) + "\n";
    result.text += std::string("fold: ") + (r.is_fold ? "yes" : "no");
    if (r.indeterminate) result.text += " (indeterminate: determinant close to the threshold)";
    result.text += "\n";
    if (index) result.text += "index " + std::to_string(*index) + "\n";
  });
}

CommandResult cmd_verify(const JobConfig& config) {
  return guarded("verify", config, [&](CommandResult& result) {
    SuiteOptions options;
    options.m_values = config.m_values;
    options.n_values = config.n_values;
    options.epsilon = config.epsilon;
    if (options.epsilon && !(*options.epsilon > 0.0))
      throw Error(ErrorCode::InvalidArgument, "epsilon must be a positive number");
    options.restarts = config.restarts;
    options.iterations = config.iterations;
    options.seed = config.seed;
    options.tolerances = config.tolerances();

    std::vector<std::string> names;
    if (config.suite == "all") {
      names = suite_names();
    } else {
      names.push_back(config.suite);
    }

    Json suites = Json::array();
    bool all_passed = true;
    for (const auto& name : names) {
      const SuiteReport report = run_suite(name, options);
      Json checks = Json::array();
      result.text += "suite " + report.suite + "\n";
      for (const auto& check : report.checks) {
        checks.push_back(Json{{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
        result.text += std::string("  [") + (check.passed ? "PASS" : "FAIL") + "] " + check.name;
        if (!check.detail.empty()) result.text += ": " + check.detail;
        result.text += "\n";
      }
      result.text += std::string("  => ") + (report.passed() ? "PASS" : "FAIL") + "\n";
      all_passed = all_passed && report.passed();
      suites.push_back(Json{{"suite", report.suite}, {"passed", report.passed()}, {"checks", std::move(checks)}});
    }
    result.document["suites"] = std::move(suites);
    result.document["passed"] = all_passed;
    result.exit_code = all_passed ? kExitOk : kExitVerdictFail;
  });
}

}  // namespace milnor::cli
