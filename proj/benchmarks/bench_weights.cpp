#include <benchmark/benchmark.h>

#include "milnor/parser.hpp"
#include "milnor/weights.hpp"

using namespace milnor;

static void BM_WeightSpaceFermat(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::string text;
  for (std::size_t j = 1; j <= n; ++j) text += (j > 1 ? " + " : "") + ("z" + std::to_string(j)) + "^" + std::to_string(j + 1);
  const Polynomial f = parse_polynomial(text);
  for (auto _ : state) benchmark::DoNotOptimize(weight_space(f));
}
BENCHMARK(BM_WeightSpaceFermat)->DenseRange(2, 6);

static void BM_WeightSpaceFamily(benchmark::State& state) {
  const Polynomial f = parse_polynomial("z1*z2 + z3*z4 + z5^2");
  for (auto _ : state) benchmark::DoNotOptimize(weight_space(f));
}
BENCHMARK(BM_WeightSpaceFamily);

static void BM_CommonWeights(benchmark::State& state) {
  const auto polys = parse_polynomials({"z1^3 + z2^3 + z3^3", "2*z1^3 - i*z2^3 + (1/2)*z3^3"});
  for (auto _ : state) benchmark::DoNotOptimize(common_weights(polys[0], polys[1]));
}
BENCHMARK(BM_CommonWeights);

static void BM_CommonWeightsMulti(benchmark::State& state) {
  const auto polys = parse_polynomials({"z1^2", "z2^2", "z1*z2"});
  for (auto _ : state) benchmark::DoNotOptimize(common_weights_multi(polys));
}
BENCHMARK(BM_CommonWeightsMulti);
