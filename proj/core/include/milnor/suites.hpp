#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "milnor/polynomial.hpp"
#include "milnor/singular.hpp"

namespace milnor {

// Polynomial families that the verification suites are built on.
namespace families {

/// f = sum_j c_j z_j^m, g = sum_k d_k z_k^m.
std::pair<Polynomial, Polynomial> fermat_pair(const std::vector<GaussianRational>& c,
                                              const std::vector<GaussianRational>& d, unsigned m);
/// f = z1^m + z2^m, g = z1 z2.
std::pair<Polynomial, Polynomial> power_sum_with_product(unsigned m);
/// f_j = z_j in n variables.
std::vector<Polynomial> coordinate_functions(std::size_t n);

}  // namespace families

struct SuiteCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;

  bool passed() const;
  void add(std::string name, bool ok, std::string detail = {});
};

struct SuiteOptions {
  std::vector<int> m_values;  // empty: suite default
  std::vector<int> n_values;  // empty: suite default
  std::optional<double> epsilon;
  int restarts = 64;
  int iterations = 300;
  std::uint64_t seed = 0;
  Tolerances tolerances;
};

/// Minimum margin over 10,000 uniform sphere points for the disjoint-variable
/// maps of the prop33/prop52 suites must exceed this.
/// Measured with tests/tools/margin_floor.cpp: 1 - 3.3e-16 over 10^6 points
/// per map and seed.
inline constexpr double kDisjointMarginFloor = 1.0 - 1e-12;

const std::vector<std::string>& suite_names();
/// Throws UnknownSuite for names not in suite_names().
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace milnor
