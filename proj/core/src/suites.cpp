#include "milnor/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "milnor/circles.hpp"
#include "milnor/error.hpp"
#include "milnor/fold.hpp"
#include "milnor/sphere_search.hpp"
#include "milnor/weights.hpp"

namespace milnor {

namespace families {

std::pair<Polynomial, Polynomial> fermat_pair(const std::vector<GaussianRational>& c,
                                              const std::vector<GaussianRational>& d, unsigned m) {
  if (c.size() != d.size() || c.empty()) throw Error(ErrorCode::DimensionMismatch, "fermat_pair: |c| != |d|");
  const std::size_t n = c.size();
  Polynomial f(n), g(n);
  for (std::size_t j = 0; j < n; ++j) {
    Exponent e(n, 0);
    e[j] = m;
    f += Polynomial::monomial(e, c[j]);
    g += Polynomial::monomial(e, d[j]);
  }
  return {f, g};
}

std::pair<Polynomial, Polynomial> power_sum_with_product(unsigned m) {
  const Polynomial z1 = Polynomial::variable(2, 0);
  const Polynomial z2 = Polynomial::variable(2, 1);
  return {z1.pow(m) + z2.pow(m), z1 * z2};
}

std::vector<Polynomial> coordinate_functions(std::size_t n) {
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < n; ++j) out.push_back(Polynomial::variable(n, j));
  return out;
}

}  // namespace families

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed; });
}

void SuiteReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

namespace {

constexpr cplx kI{0.0, 1.0};

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(3);
  out << std::scientific << x;
  return out.str();
}

std::vector<int> or_default(const std::vector<int>& given, std::vector<int> fallback) {
  return given.empty() ? fallback : given;
}

double relative_error(cplx got, cplx want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

// Nonzero Gaussian integers with |re|, |im| <= 3 and A_jk = c_j d_k - c_k d_j != 0.
std::pair<std::vector<GaussianRational>, std::vector<GaussianRational>> fermat_coefficients(std::size_t n,
                                                                                            std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(-3, 3);
  auto draw = [&] {
    for (;;) {
      GaussianRational z(Rational(pick(rng)), Rational(pick(rng)));
      if (!z.is_zero()) return z;
    }
  };
  for (;;) {
    std::vector<GaussianRational> c(n), d(n);
    for (std::size_t j = 0; j < n; ++j) {
      c[j] = draw();
      d[j] = draw();
    }
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if ((c[j] * d[k] - c[k] * d[j]).is_zero()) ok = false;
    if (ok) return {c, d};
  }
}

double random_min_margin(const MapSpec& spec, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double lowest = std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    const SpherePoint p(random_sphere_point(spec.n_vars(), spec.epsilon(), rng), spec.epsilon());
    try {
      lowest = std::min(lowest, is_singular_numeric(spec, p).numeric_margin);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PointOnLink) throw;
    }
  }
  return lowest;
}

void no_singular_points(SuiteReport& report, const std::string& label, const MapSpec& spec,
                        const SuiteOptions& opt) {
  SearchSettings settings;
  settings.restarts = opt.restarts;
  settings.iterations = opt.iterations;
  settings.seed = opt.seed;
  settings.tolerances = opt.tolerances;
  const SearchResult search = sphere_search(spec, settings);
  report.add(label + ": sphere search finds no singular point", search.hits.empty(),
             std::to_string(opt.restarts) + " restarts, min margin " + fmt(search.min_margin));
  const double lowest = random_min_margin(spec, 10000, opt.seed);
  report.add(label + ": random-sample margin above floor", lowest > kDisjointMarginFloor,
             "1 - min over 10000 points = " + fmt(1.0 - lowest) + " vs 1 - floor = " + fmt(1.0 - kDisjointMarginFloor));
}

SuiteReport prop33(const SuiteOptions& opt) {
  SuiteReport report{"prop33", {}};
  const double eps = opt.epsilon.value_or(0.1);
  const Polynomial z1 = Polynomial::variable(2, 0);
  const Polynomial z2 = Polynomial::variable(2, 1);
  no_singular_points(report, "f=z1^2, g=z2^2", MapSpec({z1.pow(2), z2.pow(2)}, eps), opt);
  return report;
}

SuiteReport prop52(const SuiteOptions& opt) {
  SuiteReport report{"prop52", {}};
  const double eps = opt.epsilon.value_or(0.1);
  for (int n : or_default(opt.n_values, {3})) {
    no_singular_points(report, "f_j=z_j, n=" + std::to_string(n),
                       MapSpec(families::coordinate_functions(static_cast<std::size_t>(n)), eps), opt);
  }
  return report;
}

SuiteReport prop41(const SuiteOptions& opt) {
  SuiteReport report{"prop41", {}};
  const double eps = opt.epsilon.value_or(1.0);
  std::mt19937_64 rng(opt.seed);
  for (int n : or_default(opt.n_values, {2, 3})) {
    for (int m : or_default(opt.m_values, {2, 3, 4})) {
      const auto [c, d] = fermat_coefficients(static_cast<std::size_t>(n), rng);
      const auto [f, g] = families::fermat_pair(c, d, static_cast<unsigned>(m));
      const std::string tag = "n=" + std::to_string(n) + " m=" + std::to_string(m);
      const auto cert = common_weights(f, g);
      report.add(tag + ": common weights with s = 1", cert && cert->s() == 1);
      if (!cert) continue;
      const MapSpec spec({f, g}, eps);
      const PolynomialJet fj(f), gj(g);

      bool singular = true, formula = true, verdict = true, index = true;
      double worst_margin = 0.0, worst_formula = 0.0;
      for (int u = 0; u < n; ++u) {
        for (double theta : {0.0, 1.0, 2.0}) {
          ComplexVector z(static_cast<std::size_t>(n));
          z[static_cast<std::size_t>(u)] = std::polar(eps, theta);
          const SpherePoint p(z, eps);
          const SingularityReport sr = analyze_point(spec, p, cert, opt.tolerances);
          worst_margin = std::max({worst_margin, sr.numeric_margin, sr.algebraic_residual.value_or(1.0)});
          singular = singular && sr.numeric_verdict == Verdict::Singular && sr.algebraic_verdict == Verdict::Singular;

          const FoldReport fr = fold_test(fj, gj, *cert, p, opt.tolerances);
          const ComplexMatrix& h = fr.hessian;
          double err = 0.0;
          double ref = 0.0;
          const std::size_t uu = static_cast<std::size_t>(u);
          for (std::size_t j = 0; j < h.rows(); ++j) {
            for (std::size_t k = 0; k < h.cols(); ++k) {
              cplx want{0.0, 0.0};
              if (m == 2 && j == k) {
                const cplx a = (c[j] * d[uu] - c[uu] * d[j]).to_complex();
                want = 2.0 * kI * std::polar(1.0, -2.0 * theta) / (eps * eps * (c[uu] * d[uu]).to_complex()) * a;
              }
              err = std::max(err, std::abs(h(j, k) - want));
              ref = std::max(ref, std::abs(want));
            }
          }
          if (m == 2) {
            worst_formula = std::max(worst_formula, err / ref);
            formula = formula && err <= 1e-8 * ref;
            verdict = verdict && fr.is_fold && !fr.indeterminate;
            try {
              index = index && index_of(fr) == n - 1;
            } catch (const Error&) {
              index = false;
            }
          } else {
            worst_formula = std::max(worst_formula, err);
            formula = formula && err <= 1e-10;
            verdict = verdict && !fr.is_fold;
          }
        }
      }
      report.add(tag + ": circle representatives are singular (both criteria)", singular,
                 "worst margin " + fmt(worst_margin));
      if (m == 2) {
        report.add(tag + ": Hessian matches diagonal formula", formula, "worst relative error " + fmt(worst_formula));
        report.add(tag + ": every representative is a fold", verdict);
        report.add(tag + ": fold index equals n-1", index);
      } else {
        report.add(tag + ": Hessian vanishes", formula, "worst entry " + fmt(worst_formula));
        report.add(tag + ": singular points are not folds", verdict);
      }
    }
  }
  return report;
}

SuiteReport prop42(const SuiteOptions& opt) {
  SuiteReport report{"prop42", {}};
  const double eps = opt.epsilon.value_or(1.0);
  for (int m : or_default(opt.m_values, {2, 3, 5})) {
    const auto [f, g] = families::power_sum_with_product(static_cast<unsigned>(m));
    const std::string tag = "m=" + std::to_string(m);
    const auto cert = common_weights(f, g);
    const bool s_ok = cert && cert->s() == Rational(2, m) && cert->weights == RationalVector{m, m};
    report.add(tag + ": w_f = (m, m) and s = 2/m exactly", s_ok,
               cert ? "s = " + to_fraction_string(cert->s()) : "no certificate");
    if (!cert) continue;
    const MapSpec spec({f, g}, eps);
    const PolynomialJet fj(f), gj(g);

    bool singular = true, det_ok = true, index_ok = true;
    double worst_margin = 0.0, worst_det = 0.0;
    for (int k = 0; k < m; ++k) {
      const cplx omega = std::polar(1.0, 2.0 * std::numbers::pi * k / m);
      for (int t = 0; t < 7; ++t) {
        const double theta = 2.0 * std::numbers::pi * t / 7.0;
        const cplx phase = std::polar(eps / std::sqrt(2.0), theta);
        const SpherePoint p({phase, phase * omega}, eps);
        const SingularityReport sr = analyze_point(spec, p, cert, opt.tolerances);
        worst_margin = std::max({worst_margin, sr.numeric_margin, sr.algebraic_residual.value_or(1.0)});
        singular = singular && sr.numeric_margin <= 1e-8 && sr.algebraic_residual.value_or(1.0) <= 1e-8;

        const FoldReport fr = fold_test(fj, gj, *cert, p, opt.tolerances);
        const double err = fr.det_complex ? relative_error(*fr.det_complex, cplx{0.0, 2.0 * m}) : 1.0;
        worst_det = std::max(worst_det, err);
        det_ok = det_ok && err <= 1e-8 && fr.is_fold;
        try {
          index_ok = index_ok && index_of(fr) == 1;
        } catch (const Error&) {
          index_ok = false;
        }
      }
    }
    report.add(tag + ": (e^{it}/sqrt2)(1, omega) singular by both criteria", singular, "worst margin " + fmt(worst_margin));
    report.add(tag + ": det(W^T H W) = 2mi", det_ok, "worst relative error " + fmt(worst_det));
    report.add(tag + ": fold index 1", index_ok);
  }
  return report;
}

SuiteReport prop43(const SuiteOptions& opt) {
  SuiteReport report{"prop43", {}};
  const double eps = opt.epsilon.value_or(1.0);
  const Polynomial z1 = Polynomial::variable(2, 0);
  const Polynomial z2 = Polynomial::variable(2, 1);

  const CircleFamily quad = homogeneous_2var_circles(z1.pow(2) + z2.pow(2), z1 * z2, eps);
  report.add("(z1^2+z2^2, z1 z2): 2 circles, bound 2", quad.count == 2 && quad.bound == 2,
             "count " + std::to_string(quad.count) + ", bound " + std::to_string(quad.bound));

  for (int m : or_default(opt.m_values, {2, 3, 4, 5, 6})) {
    const auto [f, g] = families::power_sum_with_product(static_cast<unsigned>(m));
    const CircleFamily fam = homogeneous_2var_circles(f, g, eps);
    const bool ok = !fam.degenerate_all_singular && fam.count == static_cast<std::size_t>(m) &&
                    fam.bound == static_cast<unsigned>(m);
    report.add("(z1^" + std::to_string(m) + "+z2^" + std::to_string(m) + ", z1 z2): m circles, bound m", ok,
               "count " + std::to_string(fam.count) + ", bound " + std::to_string(fam.bound));
  }

  const CircleFamily same = homogeneous_2var_circles(z1 * z2, z1 * z2, eps);
  report.add("(z1 z2, z1 z2): every point singular", same.degenerate_all_singular);
  return report;
}

SuiteReport prop53(const SuiteOptions& opt) {
  SuiteReport report{"prop53", {}};
  const double eps = opt.epsilon.value_or(1.0);
  {
    const Polynomial z1 = Polynomial::variable(2, 0);
    const Polynomial z2 = Polynomial::variable(2, 1);
    const auto a = common_weights_multi({z1.pow(2), z2.pow(2), z1 * z2});
    // u_2 is free here: s = (1, 2 u_2, 1/2 + u_2).
    bool family_ok = a && certifies(*a, {z1.pow(2), z2.pow(2), z1 * z2});
    if (family_ok) {
      const RationalVector u = a->reciprocal_weights();
      family_ok = u[0] == Rational(1, 2) && u[1] > 0 && a->factors[0] == 1 && a->factors[1] == 2 * u[1] &&
                  a->factors[2] == Rational(1, 2) + u[1];
    }
    report.add("(z1^2, z2^2, z1 z2): u_1 = 1/2, s = (1, 2 u_2, 1/2 + u_2)", family_ok);
    const auto b = common_weights_multi({z1.pow(3) + z2.pow(3), z1 * z2, z1.pow(2) * z2 + z1 * z2.pow(2)});
    report.add("(z1^3+z2^3, z1 z2, z1^2 z2 + z1 z2^2): s = (1, 2/3, 1)",
               b && b->reciprocal_weights() == RationalVector{Rational(1, 3), Rational(1, 3)} &&
                   b->factors == RationalVector{1, Rational(2, 3), 1});
  }

  // A certified triple in C^3 whose singular set is non-empty.
  const std::size_t n = 3;
  std::vector<Polynomial> z;
  for (std::size_t j = 0; j < n; ++j) z.push_back(Polynomial::variable(n, j));
  const std::vector<Polynomial> triple{
      z[0].pow(2) + z[1].pow(2) + z[2].pow(2),
      z[0].pow(2) + GaussianRational(2) * z[1].pow(2) + GaussianRational(3) * z[2].pow(2),
      z[0].pow(2) + z[1] * z[2],
  };
  const auto cert = common_weights_multi(triple);
  report.add("triple in C^3 is certified", cert.has_value());
  if (!cert) return report;
  const MapSpec spec(triple, eps);

  // <w(p), grad log f_j(p)> = s_j at random points.
  std::mt19937_64 rng(opt.seed);
  double worst_pairing = 0.0;
  for (int k = 0; k < 20; ++k) {
    const ComplexVector p = random_sphere_point(n, eps, rng);
    ComplexVector w(n);
    for (std::size_t j = 0; j < n; ++j) w[j] = p[j] / to_double(cert->weights[j]);
    for (std::size_t j = 0; j < spec.size(); ++j) {
      const cplx pairing = hermitian(w, spec.jet(j).log_gradient(p));
      worst_pairing = std::max(worst_pairing, relative_error(pairing, to_double(cert->factors[j])));
    }
  }
  report.add("pairing <w(p), grad log f_j> = s_j", worst_pairing < 1e-9, "worst relative error " + fmt(worst_pairing));

  SearchSettings settings;
  settings.restarts = opt.restarts;
  settings.iterations = opt.iterations;
  settings.seed = opt.seed;
  settings.tolerances = opt.tolerances;
  const SearchResult search = sphere_search(spec, settings, cert);
  bool dependent = !search.hits.empty();
  double worst = 0.0;
  for (const SingularityReport& hit : search.hits) {
    std::vector<ComplexVector> grads;
    for (const auto& jet : spec.jets()) grads.push_back(scaled(jet.log_gradient(hit.point), kI));
    // The hits are only located to the search tolerance, so compare at 10x.
    const DependenceResult dep = complex_dependence(grads);
    worst = std::max(worst, dep.margin);
    dependent = dependent && dep.margin <= 10.0 * opt.tolerances.rank;
  }
  report.add("log-gradients are C-dependent at every singular point found", dependent,
             std::to_string(search.hits.size()) + " points, worst margin " + fmt(worst));
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"prop33", "prop41", "prop42", "prop43", "prop52", "prop53"};
  return names;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  using Runner = SuiteReport (*)(const SuiteOptions&);
  Runner runner = nullptr;
  if (name == "prop33") runner = prop33;
  if (name == "prop41") runner = prop41;
  if (name == "prop42") runner = prop42;
  if (name == "prop43") runner = prop43;
  if (name == "prop52") runner = prop52;
  if (name == "prop53") runner = prop53;
  if (!runner) throw Error(ErrorCode::UnknownSuite, "no suite named '" + name + "'");
  try {
    return runner(options);
  } catch (const Error& e) {
    // e.g. a tolerance so tight that a known singular point is rejected
    SuiteReport report{name, {}};
    report.add("suite ran to completion", false, e.what());
    return report;
  }
}

}  // namespace milnor
