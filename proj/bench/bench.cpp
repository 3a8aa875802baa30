// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <tuple>

#include "sic/certify.hpp"
#include "sic/enumeration.hpp"
#include "sic/graph6.hpp"
#include "sic/known_graphs.hpp"
#include "sic/realize.hpp"

namespace {

void BM_EnumerateParallel(benchmark::State& state) {
  sic::EnumerationOptions opts;
  opts.workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto report = sic::enumerate_square_free_connected(static_cast<int>(state.range(0)), {}, opts);
    benchmark::DoNotOptimize(report.total);
  }
}

void BM_EnumerateReference(benchmark::State& state) {
  for (auto _ : state) {
    auto report = sic::enumerate_square_free_connected_reference(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(report.total);
  }
}

void BM_RealizeParallel(benchmark::State& state) {
  const sic::Graph g = sic::parse_graph6(sic::known::kThirteenVertexChiAbove3[0]);
  sic::RealizationOptions opts;
  opts.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sic::find_realization(g, 3, opts).residual);
}

void BM_RealizeSerial(benchmark::State& state) {
  const sic::Graph g = sic::parse_graph6(sic::known::kThirteenVertexChiAbove3[0]);
  for (auto _ : state) benchmark::DoNotOptimize(sic::find_realization_serial(g, 3).residual);
}

void BM_CertifyYuOh(benchmark::State& state) {
  std::vector<sic::ExactVector> vs;
  for (auto [a, b, c] : {std::tuple{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {0, 1, -1}, {1, 0, 1}, {1, 0, -1},
                         {1, 1, 0}, {1, -1, 0}, {1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}}) {
    vs.push_back({sic::GaussianRational(sic::Rational(a)), sic::GaussianRational(sic::Rational(b)),
                  sic::GaussianRational(sic::Rational(c))});
  }
  const auto s = sic::ProjectorSet::exact(3, vs);
  for (auto _ : state) benchmark::DoNotOptimize(sic::certify_sic(s).status);
}

void worker_counts(benchmark::internal::Benchmark* b) {
  const int max = omp_get_max_threads();
  for (int n : {9, 10, 11})
    for (int w = 1; w <= max; w *= 2) b->Args({n, w});
}

}  // namespace

BENCHMARK(BM_EnumerateParallel)->Apply(worker_counts)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateReference)->Arg(9)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RealizeParallel)->RangeMultiplier(2)->Range(1, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RealizeSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyYuOh)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
