#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "hopf/graph.hpp"
#include "hopf/linsys.hpp"
#include "hopf/rng.hpp"
#include "hopf/survey.hpp"

namespace {

using namespace hopf;

/// One deterministic smooth curve per (n, stream); resamples until smooth.
GraphCurve smooth_curve(int n, std::uint64_t stream) {
  SplitMix64 rng(derive_seed(0xb311c4, stream));
  while (true) {
    GraphCurve d = random_curve(n, 100, rng);
    if (d.smooth()) return d;
  }
}

void bm_resultant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(41);
  const GraphCurve d = random_curve(n, 100, rng);
  for (auto _ : state) benchmark::DoNotOptimize(bf_resultant(d.P(), d.Q()));
}

void bm_squarefree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GraphCurve d = smooth_curve(n, 1);
  const BinaryForm f = fiber_form(d, ProjPoint(1, 1));
  for (auto _ : state) benchmark::DoNotOptimize(squarefree_decomposition(f));
}

void bm_pencil_discriminant(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GraphCurve d = smooth_curve(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(pencil_discriminant(d));
}

void bm_classify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GraphCurve d = smooth_curve(n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(classify(d));
}

void bm_condition_rank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<FatPoint> pts;
  for (int i = 0; i < 4; ++i) pts.push_back({i, ProjPoint(i + 2, 1), (n + 1) / 2});
  const FatPointScheme z(pts);
  for (auto _ : state) benchmark::DoNotOptimize(condition_matrix(z, n).rank());
}

void bm_survey(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_survey(n, 20, 100, 7));
}

}  // namespace

BENCHMARK(bm_resultant)->DenseRange(2, 8, 2);
BENCHMARK(bm_squarefree)->DenseRange(2, 8, 2);
BENCHMARK(bm_pencil_discriminant)->DenseRange(2, 8, 2);
BENCHMARK(bm_classify)->DenseRange(2, 8, 2);
BENCHMARK(bm_condition_rank)->DenseRange(2, 8, 2);
BENCHMARK(bm_survey)->DenseRange(2, 6, 2);

BENCHMARK_MAIN();
