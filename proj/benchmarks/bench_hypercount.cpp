#include <cmath>

#include <benchmark/benchmark.h>

#include "hypercount/counting.hpp"
#include "hypercount/generators.hpp"
#include "hypercount/properties.hpp"
#include "hypercount/structure.hpp"

using namespace hypercount;

namespace {

Hypergraph host(std::size_t n, std::size_t k, double p, std::uint64_t seed = 1) {
  GenSpec spec;
  spec.n = n;
  spec.k = k;
  spec.p = p;
  spec.seed = seed;
  return generate(spec);
}

void BM_CountLoosePath(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = host(n, 3, 2.0 * std::pow(static_cast<double>(n), -0.45));
  const auto& h = catalog_pattern("k3-loose-path2").pattern;
  CountOptions options;
  options.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(count_embeddings(h, g, {}, options).total);
  state.counters["edges"] = static_cast<double>(g.edge_count());
}
BENCHMARK(BM_CountLoosePath)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_CountGraphCycle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = host(n, 2, 0.3);
  const auto& h = catalog_pattern("k2-cycle5").pattern;
  CountOptions options;
  options.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(count_embeddings(h, g, {}, options).total);
}
BENCHMARK(BM_CountGraphCycle)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_TupleScanExact(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = host(n, 3, 0.3);
  TupleParams params;
  params.d = 2;
  params.delta = 0.5;
  params.scan.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(check_tuple(g, params).holds);
}
BENCHMARK(BM_TupleScanExact)->Arg(15)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_TupleScanSampled(benchmark::State& state) {
  const auto g = host(60, 3, 0.2);
  TupleParams params;
  params.d = 2;
  params.delta = 0.5;
  params.scan.mode = CheckMode::sampled;
  params.scan.samples = static_cast<std::uint64_t>(state.range(0));
  params.scan.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(check_tuple(g, params).holds);
}
BENCHMARK(BM_TupleScanSampled)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_Degeneracy(benchmark::State& state) {
  const auto& h = catalog_pattern("k3-loose-cycle3").pattern;
  for (auto _ : state) benchmark::DoNotOptimize(degeneracy(h).value);
}
BENCHMARK(BM_Degeneracy);

}  // namespace

BENCHMARK_MAIN();
