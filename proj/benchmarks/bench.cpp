#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "coxinv/formulas.hpp"
#include "coxinv/oddgraph.hpp"
#include "coxinv/oracle.hpp"

namespace {

using namespace coxinv;

const std::vector<std::string> kAffine{"~A10", "~B10", "~C10", "~D10",
                                       "~E8",  "~F4",  "~G2"};

void BM_Cc2Affine(benchmark::State& state) {
  const auto m = parse_name(kAffine[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(cc2(m).total);
  state.SetLabel(kAffine[state.range(0)]);
}
BENCHMARK(BM_Cc2Affine)->DenseRange(0, 6);

void BM_GammaK(benchmark::State& state) {
  const auto m = parse_name("~E8+~B6");
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_k(m, k).component_count);
  }
}
BENCHMARK(BM_GammaK)->DenseRange(1, 15, 2);

void BM_GammaKPairwise(benchmark::State& state) {
  const auto m = parse_name("~E8+~B6");
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_k_pairwise(m, k).component_count);
  }
}
BENCHMARK(BM_GammaKPairwise)->DenseRange(1, 15, 2);

void BM_Cc2Elementary(benchmark::State& state) {
  // (Z/2)^n visits every subset.
  const int n = static_cast<int>(state.range(0));
  std::string name = "A1";
  for (int i = 1; i < n; ++i) name += "+A1";
  const auto m = parse_name(name);
  for (auto _ : state) benchmark::DoNotOptimize(cc2(m).total);
}
BENCHMARK(BM_Cc2Elementary)->DenseRange(8, 18, 2);

void BM_Bounds(benchmark::State& state) {
  const auto m = parse_name("~E8+~C4");
  for (auto _ : state) benchmark::DoNotOptimize(bounds(m).omega_lower);
}
BENCHMARK(BM_Bounds);

const std::vector<std::string> kFinite{"B5", "E6", "H4", "A7", "B7"};

void BM_OracleEnumerate(benchmark::State& state) {
  const auto m = parse_name(kFinite[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::enumerate(m).size());
  state.SetLabel(kFinite[state.range(0)]);
}
BENCHMARK(BM_OracleEnumerate)
    ->DenseRange(0, 4)
    ->Unit(benchmark::kMillisecond);

void BM_OracleInvolutionClasses(benchmark::State& state) {
  const auto m = parse_name(kFinite[state.range(0)]);
  const auto table = oracle::enumerate(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::involution_classes(table).classes.size());
  }
  state.SetLabel(kFinite[state.range(0)]);
}
BENCHMARK(BM_OracleInvolutionClasses)
    ->DenseRange(0, 4)
    ->Unit(benchmark::kMillisecond);

void BM_RacgCliques(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  std::bernoulli_distribution coin(0.5);
  SimpleGraph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng)) g.add_edge(a, b);
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(cc2_racg(g));
}
BENCHMARK(BM_RacgCliques)->RangeMultiplier(2)->Range(8, 64);

}  // namespace
