#include <doctest.h>

#include "milnor/error.hpp"
#include "milnor/suites.hpp"

using namespace milnor;

TEST_CASE("every named suite passes with its defaults") {
  for (const auto& name : suite_names()) {
    const SuiteReport report = run_suite(name);
    CAPTURE(name);
    CHECK(report.suite == name);
    CHECK_FALSE(report.checks.empty());
    for (const auto& check : report.checks) {
      CAPTURE(check.name);
      CAPTURE(check.detail);
      CHECK(check.passed);
    }
  }
}

TEST_CASE("suite options are honoured") {
  SuiteOptions options;
  options.m_values = {3};
  options.n_values = {2};
  const SuiteReport report = run_suite("prop41", options);
  CHECK(report.passed());
  for (const auto& check : report.checks) CHECK(check.name.find("m=3") != std::string::npos);
}

TEST_CASE("unknown suites") {
  try {
    (void)run_suite("prop99");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownSuite);
  }
}

TEST_CASE("family constructors") {
  const auto [f, g] = families::fermat_pair({1, 2}, {3, 4}, 2);
  CHECK(f.to_string() == "z1^2 + 2*z2^2");
  CHECK(g.to_string() == "3*z1^2 + 4*z2^2");
  const auto [p, q] = families::power_sum_with_product(4);
  CHECK(p.to_string() == "z1^4 + z2^4");
  CHECK(q.to_string() == "z1*z2");
  CHECK(families::coordinate_functions(3).size() == 3);
}
