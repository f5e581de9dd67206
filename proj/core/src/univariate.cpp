#include "milnor/univariate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "milnor/error.hpp"

namespace milnor {

int degree(const ExactUnivariate& p) {
  for (std::size_t k = p.size(); k-- > 0;)
    if (!p[k].is_zero()) return static_cast<int>(k);
  return -1;
}

ExactUnivariate trimmed(ExactUnivariate p) {
  p.resize(static_cast<std::size_t>(degree(p) + 1));
  return p;
}

ExactUnivariate derivative(const ExactUnivariate& p) {
  ExactUnivariate d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * GaussianRational(Rational(k)));
  return trimmed(std::move(d));
}

namespace {

ExactUnivariate remainder(ExactUnivariate a, const ExactUnivariate& b) {
  const int db = degree(b);
  if (db < 0) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  a = trimmed(std::move(a));
  const GaussianRational lead_inv = GaussianRational(1) / b[static_cast<std::size_t>(db)];
  for (int da = degree(a); da >= db; da = degree(a)) {
    const GaussianRational factor = a[static_cast<std::size_t>(da)] * lead_inv;
    const std::size_t shift = static_cast<std::size_t>(da - db);
    for (int k = 0; k <= db; ++k) a[shift + static_cast<std::size_t>(k)] -= factor * b[static_cast<std::size_t>(k)];
    a[static_cast<std::size_t>(da)] = GaussianRational();
    a = trimmed(std::move(a));
  }
  return a;
}

ExactUnivariate monic(ExactUnivariate p) {
  const int d = degree(p);
  if (d < 0) return {};
  const GaussianRational inv = GaussianRational(1) / p[static_cast<std::size_t>(d)];
  for (auto& c : p) c *= inv;
  return trimmed(std::move(p));
}

}  // namespace

ExactUnivariate gcd(ExactUnivariate a, ExactUnivariate b) {
  a = trimmed(std::move(a));
  b = trimmed(std::move(b));
  while (degree(b) >= 0) {
    ExactUnivariate r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

ExactUnivariate exact_quotient(const ExactUnivariate& a_in, const ExactUnivariate& b) {
  const int db = degree(b);
  if (db < 0) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  ExactUnivariate a = trimmed(a_in);
  const int da = degree(a);
  if (da < db) {
    if (da < 0) return {};
    throw Error(ErrorCode::InvalidArgument, "exact_quotient: divisor has higher degree");
  }
  ExactUnivariate q(static_cast<std::size_t>(da - db + 1));
  const GaussianRational lead_inv = GaussianRational(1) / b[static_cast<std::size_t>(db)];
  for (int k = da; k >= db; --k) {
    const GaussianRational factor = a[static_cast<std::size_t>(k)] * lead_inv;
    q[static_cast<std::size_t>(k - db)] = factor;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(k - db + j)] -= factor * b[static_cast<std::size_t>(j)];
  }
  if (degree(a) >= 0) throw Error(ErrorCode::InvalidArgument, "exact_quotient: nonzero remainder");
  return trimmed(std::move(q));
}

ExactUnivariate squarefree_part(const ExactUnivariate& p) {
  if (degree(p) <= 0) return trimmed(p);
  return exact_quotient(p, gcd(p, derivative(p)));
}

std::vector<cplx> to_complex(const ExactUnivariate& p) {
  std::vector<cplx> out;
  out.reserve(p.size());
  for (const auto& c : trimmed(p)) out.push_back(c.to_complex());
  return out;
}

double relative_residual(const std::vector<cplx>& a, cplx z) {
  cplx value{0.0, 0.0};
  double scale = 0.0;
  const double r = std::abs(z);
  for (std::size_t k = a.size(); k-- > 0;) {
    value = value * z + a[k];
    scale = scale * r + std::abs(a[k]);
  }
  return scale == 0.0 ? 0.0 : std::abs(value) / scale;
}

RootSet aberth_roots(const std::vector<cplx>& a, const AberthSettings& settings) {
  std::size_t n = a.size();
  while (n > 0 && a[n - 1] == cplx{0.0, 0.0}) --n;
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "aberth_roots: zero polynomial");
  const std::size_t deg = n - 1;
  RootSet out;
  if (deg == 0) return out;

  const cplx lead = a[deg];
  double cauchy = 0.0;
  for (std::size_t k = 0; k < deg; ++k) cauchy = std::max(cauchy, std::abs(a[k] / lead));
  cauchy += 1.0;

  std::vector<cplx> z(deg);
  for (std::size_t k = 0; k < deg; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(deg) + 0.4;
    z[k] = std::polar(cauchy, angle);
  }

  auto eval = [&](cplx x, cplx& p, cplx& dp) {
    p = a[deg];
    dp = {0.0, 0.0};
    for (std::size_t k = deg; k-- > 0;) {
      dp = dp * x + p;
      p = p * x + a[k];
    }
  };

  for (int it = 1; it <= settings.max_iterations; ++it) {
    out.iterations = it;
    double largest_step = 0.0;
    for (std::size_t i = 0; i < deg; ++i) {
      cplx p, dp;
      eval(z[i], p, dp);
      if (p == cplx{0.0, 0.0}) continue;
      const cplx ratio = p / dp;
      cplx repulsion{0.0, 0.0};
      for (std::size_t j = 0; j < deg; ++j)
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      const cplx step = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[i] -= step;
      largest_step = std::max(largest_step, std::abs(step) / (1.0 + std::abs(z[i])));
    }
    if (largest_step < 1e-15) break;
  }

  out.max_residual = 0.0;
  for (const cplx& root : z) out.max_residual = std::max(out.max_residual, relative_residual(a, root));
  if (out.max_residual > settings.residual_tolerance)
    throw Error(ErrorCode::RootFindingDidNotConverge,
                "Aberth iteration left residual " + std::to_string(out.max_residual) + " after " +
                    std::to_string(out.iterations) + " iterations");
  out.roots = std::move(z);
  return out;
}

}  // namespace milnor
