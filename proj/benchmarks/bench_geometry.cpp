#include <benchmark/benchmark.h>

#include <cmath>

#include "milnor/circles.hpp"
#include "milnor/fold.hpp"
#include "milnor/parser.hpp"
#include "milnor/sphere_search.hpp"
#include "milnor/weights.hpp"

using namespace milnor;

namespace {

std::pair<Polynomial, Polynomial> power_pair(int m) {
  const auto polys = parse_polynomials({"z1^" + std::to_string(m) + " + z2^" + std::to_string(m), "z1*z2"});
  return {polys[0], polys[1]};
}

}  // namespace

static void BM_Circles(benchmark::State& state) {
  const auto [f, g] = power_pair(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(homogeneous_2var_circles(f, g, 1.0));
}
BENCHMARK(BM_Circles)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

static void BM_FoldTest(benchmark::State& state) {
  const auto [f, g] = power_pair(2);
  const auto cert = common_weights(f, g);
  const PolynomialJet jf(f), jg(g);
  const double r = std::sqrt(0.5);
  const SpherePoint p({r, r}, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(fold_test(jf, jg, *cert, p));
}
BENCHMARK(BM_FoldTest);

static void BM_SphereSearch(benchmark::State& state) {
  const auto [f, g] = power_pair(3);
  const MapSpec spec({f, g}, 1.0);
  const auto cert = common_weights(f, g);
  SearchSettings settings;
  settings.restarts = static_cast<int>(state.range(0));
  settings.iterations = 300;
  for (auto _ : state) benchmark::DoNotOptimize(sphere_search(spec, settings, cert));
}
BENCHMARK(BM_SphereSearch)->Arg(8)->Arg(64)->Unit(benchmark::kMillisecond);
