#include "milnor/linear_feasibility.hpp"

#include <set>

#include "milnor/error.hpp"

namespace milnor {

namespace {

/// coeffs . t + constant > 0
struct Strict {
  RationalVector coeffs;
  Rational constant;

  bool operator<(const Strict& o) const {
    if (coeffs != o.coeffs) return coeffs < o.coeffs;
    return constant < o.constant;
  }
};

/// Scale by a positive factor so the last nonzero coefficient is +-1.
Strict normalized(Strict c) {
  for (std::size_t j = c.coeffs.size(); j-- > 0;) {
    if (c.coeffs[j] != 0) {
      const Rational scale = abs(c.coeffs[j]);
      for (auto& x : c.coeffs) x /= scale;
      c.constant /= scale;
      break;
    }
  }
  return c;
}

struct Interval {
  std::optional<Rational> lower;  // t > lower
  std::optional<Rational> upper;  // t < upper

  Rational pick() const {
    if (lower && upper) return (*lower + *upper) / 2;
    if (lower) return *lower + 1;
    if (upper) return *upper - 1;
    return Rational(0);
  }
};

}  // namespace

RationalVector multiply(const RationalRows& a, const RationalVector& x) {
  RationalVector out(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != x.size()) throw Error(ErrorCode::DimensionMismatch, "multiply: row length differs");
    for (std::size_t c = 0; c < x.size(); ++c) out[r] += a[r][c] * x[c];
  }
  return out;
}

FeasibilityResult solve_strictly_positive(const RationalRows& a, const RationalVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "solve_strictly_positive: |b| != rows(A)");
  if (a.empty()) throw Error(ErrorCode::InvalidArgument, "solve_strictly_positive: empty system");
  const std::size_t n = a.front().size();

  // Gauss-Jordan on the augmented matrix.
  RationalRows m;
  m.reserve(a.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].size() != n) throw Error(ErrorCode::DimensionMismatch, "solve_strictly_positive: ragged A");
    RationalVector row(a[r]);
    row.push_back(b[r]);
    m.push_back(std::move(row));
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= factor * m[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < m.size(); ++r)
    if (m[r][n] != 0) return {std::nullopt, "inconsistent"};

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  const std::size_t k = free_cols.size();

  // x = x0 + N t
  RationalVector x0(n);
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) x0[pivot_cols[r]] = m[r][n];
  RationalRows kernel;
  for (std::size_t f : free_cols) {
    RationalVector v(n);
    v[f] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -m[r][f];
    kernel.push_back(std::move(v));
  }

  // levels[j] holds the constraints that only involve t_0..t_{j-1}.
  std::vector<std::set<Strict>> levels(k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    Strict c{RationalVector(k), x0[i]};
    for (std::size_t j = 0; j < k; ++j) c.coeffs[j] = kernel[j][i];
    levels[k].insert(normalized(std::move(c)));
  }
  for (std::size_t j = k; j-- > 0;) {
    std::vector<const Strict*> pos, neg;
    for (const Strict& c : levels[j + 1]) {
      if (c.coeffs[j] > 0) pos.push_back(&c);
      else if (c.coeffs[j] < 0) neg.push_back(&c);
      else levels[j].insert(c);
    }
    // After normalization the t_j coefficients are exactly +1 and -1.
    for (const Strict* p : pos) {
      for (const Strict* q : neg) {
        Strict sum{RationalVector(k), p->constant + q->constant};
        for (std::size_t i = 0; i < k; ++i) sum.coeffs[i] = p->coeffs[i] + q->coeffs[i];
        sum.coeffs[j] = 0;
        levels[j].insert(normalized(std::move(sum)));
      }
    }
  }
  for (const Strict& c : levels[0])
    if (c.constant <= 0) return {std::nullopt, "no positive solution"};

  RationalVector t(k);
  for (std::size_t j = 0; j < k; ++j) {
    Interval range;
    for (const Strict& c : levels[j + 1]) {
      Rational rest = c.constant;
      for (std::size_t i = 0; i < j; ++i) rest += c.coeffs[i] * t[i];
      const Rational& coef = c.coeffs[j];
      if (coef == 0) continue;
      const Rational bound = -rest / coef;
      if (coef > 0) {
        if (!range.lower || bound > *range.lower) range.lower = bound;
      } else {
        if (!range.upper || bound < *range.upper) range.upper = bound;
      }
    }
    t[j] = range.pick();
  }

  RationalVector x(x0);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) x[i] += kernel[j][i] * t[j];
  for (const Rational& xi : x)
    if (xi <= 0) throw Error(ErrorCode::InvariantViolation, "back-substitution left a non-positive coordinate");
  return {PositiveSolution{std::move(x), std::move(kernel)}, {}};
}

}  // namespace milnor
