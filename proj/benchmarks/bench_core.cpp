#include <benchmark/benchmark.h>

#include <random>

#include "boolfn/approx.hpp"
#include "boolfn/bounds.hpp"
#include "boolfn/chebyshev.hpp"
#include "boolfn/measures.hpp"
#include "boolfn/multilinear.hpp"
#include "boolfn/symmetrize.hpp"
#include "boolfn/truth_table.hpp"

namespace {

using namespace boolfn;

TruthTable random_table(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TruthTable t(n);
  for (std::uint32_t x = 0; x < t.size(); ++x) t.set(x, rng() & 1);
  return t;
}

void BM_Moebius(benchmark::State& state) {
  TruthTable f = random_table(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(degree(f));
}
BENCHMARK(BM_Moebius)->Arg(8)->Arg(12)->Arg(16);

void BM_BlockSensitivity(benchmark::State& state) {
  TruthTable f = random_table(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(block_sensitivity(f).value);
}
BENCHMARK(BM_BlockSensitivity)->Arg(6)->Arg(8)->Arg(10);

void BM_DecisionTreeDepth(benchmark::State& state) {
  TruthTable f = random_table(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(decision_tree_depth(f));
}
BENCHMARK(BM_DecisionTreeDepth)->Arg(6)->Arg(8)->Arg(9);

void BM_Symmetrize(benchmark::State& state) {
  TruthTable f = compose(make_nae(3), make_nae(3));
  for (auto _ : state) benchmark::DoNotOptimize(symmetrize(f).poly.degree());
}
BENCHMARK(BM_Symmetrize);

void BM_QuarticBandProgram(benchmark::State& state) {
  LinearProgram lp = quartic_band_program();
  for (auto _ : state) benchmark::DoNotOptimize(solve(lp).value);
}
BENCHMARK(BM_QuarticBandProgram);

void BM_ApproxDegree(benchmark::State& state) {
  TruthTable f = random_table(static_cast<int>(state.range(0)), 4);
  const Rational third(1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(approx_degree(f, third).degree);
}
BENCHMARK(BM_ApproxDegree)->Arg(3)->Arg(4)->Arg(5);

void BM_SweepN3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep(3, false, 1).violations.size());
}
BENCHMARK(BM_SweepN3);

void BM_NaeApproximant(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rational c = optimal_c(n).c + Rational(1, 100);
  for (auto _ : state) benchmark::DoNotOptimize(nae_approximant(n, c).degree);
}
BENCHMARK(BM_NaeApproximant)->Arg(10)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
