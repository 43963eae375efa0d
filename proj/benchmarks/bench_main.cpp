#include <benchmark/benchmark.h>

#include <random>

#include "zerosum/catalog.hpp"
#include "zerosum/detect.hpp"
#include "zerosum/factorize.hpp"
#include "zerosum/search.hpp"
#include "zerosum/seq.hpp"

using namespace zerosum;

namespace {

const Seq& example_sequence() {
  static const Seq s = Seq::parse("3^14,2^3,-1^48", 3);
  return s;
}

void BM_SpectrumExample(benchmark::State& state) {
  const Seq& s = example_sequence();
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(s));
}
BENCHMARK(BM_SpectrumExample);

void BM_ContainsLengthLongConstruction(benchmark::State& state) {
  const Seq s = avoiding_constructions(5, 2520).s;
  for (auto _ : state) benchmark::DoNotOptimize(contains_length(s, 2520));
}
BENCHMARK(BM_ContainsLengthLongConstruction);

void BM_WitnessReconstruct(benchmark::State& state) {
  const Seq& s = example_sequence();
  for (auto _ : state) benchmark::DoNotOptimize(witness(s, 12));
}
BENCHMARK(BM_WitnessReconstruct);

void BM_FactorizeExample(benchmark::State& state) {
  const Seq& s = example_sequence();
  for (auto _ : state) benchmark::DoNotOptimize(factorize_minimal(s));
}
BENCHMARK(BM_FactorizeExample);

void BM_BetaFactorize(benchmark::State& state) {
  std::mt19937 rng(1234);
  std::vector<std::int64_t> xs(30);
  for (auto& x : xs) x = static_cast<std::int64_t>(rng() % 201) - 100;
  for (auto _ : state) benchmark::DoNotOptimize(beta_factorize(xs, 12));
}
BENCHMARK(BM_BetaFactorize);

void BM_EnumerateAvoiding(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_avoiding(2, 6, 7));
}
BENCHMARK(BM_EnumerateAvoiding);

void BM_SprimeSmall(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sprime(2, 12));
}
BENCHMARK(BM_SprimeSmall);

}  // namespace

BENCHMARK_MAIN();
