#include "milnor/sphere_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "milnor/error.hpp"

namespace milnor {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

class MarginObjective {
 public:
  explicit MarginObjective(const MapSpec& spec) : spec_(spec) {}

  /// Smallest singular value at eps * x / |x|; +inf off the domain.
  double margin(const RealVector& x) const {
    try {
      const ComplexVector p = scaled(from_real(x), spec_.epsilon() / norm(x));
      return singular_values(dependence_matrix(spec_, SpherePoint(p, spec_.epsilon()))).back();
    } catch (const Error&) {
      return kInf;
    }
  }

 private:
  const MapSpec& spec_;
};

RealVector on_sphere(RealVector x, double radius) {
  const double len = norm(x);
  for (double& v : x) v *= radius / len;
  return x;
}

struct Descent {
  RealVector x;
  double margin;
};

Descent descend(const MarginObjective& objective, RealVector x, double radius, int iterations) {
  const double h = 1e-6 * radius;
  double f = objective.margin(x);
  double step = 0.1 * radius;
  for (int it = 0; it < iterations && std::isfinite(f) && f > 0.0; ++it) {
    // Squared margin is smooth across the singular set where the margin
    // itself has a kink.
    RealVector grad(x.size());
    bool finite = true;
    for (std::size_t k = 0; k < x.size(); ++k) {
      RealVector plus(x), minus(x);
      plus[k] += h;
      minus[k] -= h;
      const double fp = objective.margin(plus);
      const double fm = objective.margin(minus);
      if (!std::isfinite(fp) || !std::isfinite(fm)) {
        finite = false;
        break;
      }
      grad[k] = (fp * fp - fm * fm) / (2.0 * h);
    }
    if (!finite) break;
    // Drop the radial part; it is zero up to differencing error.
    double radial = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) radial += grad[k] * x[k];
    radial /= radius * radius;
    for (std::size_t k = 0; k < x.size(); ++k) grad[k] -= radial * x[k];
    const double gnorm = norm(grad);
    if (gnorm == 0.0) break;

    bool improved = false;
    step = std::min(2.0 * step, 0.25 * radius);
    while (step > 1e-16 * radius) {
      RealVector trial(x);
      for (std::size_t k = 0; k < x.size(); ++k) trial[k] -= step * grad[k] / gnorm;
      trial = on_sphere(std::move(trial), radius);
      const double ft = objective.margin(trial);
      if (ft < f) {
        x = std::move(trial);
        f = ft;
        improved = true;
        break;
      }
      step *= 0.5;
    }
    if (!improved) break;
  }
  return {std::move(x), f};
}

bool lexicographic_less(const ComplexVector& a, const ComplexVector& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].real() != b[j].real()) return a[j].real() < b[j].real();
    if (a[j].imag() != b[j].imag()) return a[j].imag() < b[j].imag();
  }
  return false;
}

}  // namespace

ComplexVector phase_normalized(const ComplexVector& p, const RationalVector& weights) {
  const double len = norm(p);
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (std::abs(p[j]) > 1e-4 * len) {
      const double t = -std::arg(p[j]) * to_double(weights.at(j)) / (2.0 * std::numbers::pi);
      ComplexVector q = circle_action(p, weights, t);
      q[j] = std::abs(q[j]);
      return q;
    }
  }
  return p;
}

namespace {

std::size_t first_significant(const ComplexVector& p) {
  const double len = norm(p);
  for (std::size_t j = 0; j < p.size(); ++j)
    if (std::abs(p[j]) > 1e-4 * len) return j;
  return 0;
}

double distance(const ComplexVector& a, const ComplexVector& b) {
  double acc = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) acc += std::norm(a[j] - b[j]);
  return std::sqrt(acc);
}

}  // namespace

bool same_orbit(const ComplexVector& a, const ComplexVector& b, const RationalVector& weights, double tolerance) {
  const ComplexVector na = phase_normalized(a, weights);
  const ComplexVector nb = phase_normalized(b, weights);
  const std::size_t j = first_significant(a);
  if (j != first_significant(b)) return distance(na, nb) < tolerance;
  // Smallest k > 0 with k w_j / w_l integral for every l.
  BigInt period = 1;
  for (const Rational& w : weights) {
    const Rational ratio = weights.at(j) / w;
    const BigInt den = boost::multiprecision::denominator(ratio);
    period = period / boost::multiprecision::gcd(period, den) * den;
    if (period > 4096) {
      period = 4096;
      break;
    }
  }
  const int count = static_cast<int>(period);
  for (int k = 0; k < count; ++k) {
    const ComplexVector moved = k == 0 ? na : circle_action(na, weights, k * to_double(weights.at(j)));
    if (distance(moved, nb) < tolerance) return true;
  }
  return false;
}

SearchResult sphere_search(const MapSpec& spec, const SearchSettings& settings,
                           const std::optional<CommonWeightCertificate>& cert) {
  if (settings.restarts < 1 || settings.iterations < 1)
    throw Error(ErrorCode::InvalidArgument, "restarts and iterations must be at least 1");
  const MarginObjective objective(spec);
  const double eps = spec.epsilon();
  const double accept = 10.0 * settings.tolerances.rank;

  SearchResult result;
  result.min_margin = kInf;
  std::vector<SingularityReport> candidates;
  for (int r = 0; r < settings.restarts; ++r) {
    std::seed_seq seq{static_cast<std::uint32_t>(settings.seed), static_cast<std::uint32_t>(settings.seed >> 32),
                      static_cast<std::uint32_t>(r)};
    std::mt19937_64 engine(seq);
    RealVector start;
    do {
      start = to_real(random_sphere_point(spec.n_vars(), eps, engine));
    } while (!std::isfinite(objective.margin(start)));

    const Descent d = descend(objective, std::move(start), eps, settings.iterations);
    result.restart_margins.push_back(d.margin);
    result.min_margin = std::min(result.min_margin, d.margin);
    if (!(d.margin <= accept)) continue;

    ComplexVector p = scaled(from_real(d.x), eps / norm(d.x));
    if (cert) p = phase_normalized(p, cert->weights);
    candidates.push_back(analyze_point(spec, SpherePoint(p, eps), cert, settings.tolerances));
  }

  std::sort(candidates.begin(), candidates.end(), [](const SingularityReport& a, const SingularityReport& b) {
    if (a.numeric_margin != b.numeric_margin) return a.numeric_margin < b.numeric_margin;
    return lexicographic_less(a.point, b.point);
  });
  for (auto& c : candidates) {
    const bool seen = std::any_of(result.hits.begin(), result.hits.end(), [&](const SingularityReport& h) {
      return cert ? same_orbit(c.point, h.point, cert->weights, 1e-4 * eps) : distance(c.point, h.point) < 1e-4 * eps;
    });
    if (!seen) result.hits.push_back(std::move(c));
  }
  return result;
}

}  // namespace milnor
