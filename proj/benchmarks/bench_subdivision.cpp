#include <benchmark/benchmark.h>

#include "hsd/chains.hpp"
#include "hsd/invariance.hpp"
#include "hsd/random.hpp"
#include "hsd/subdivision.hpp"

namespace {

hsd::Hypergraph instance(std::size_t vertices, std::size_t edges) {
  return hsd::random_hypergraph({vertices, edges, 17});
}

void BM_Subdivide(benchmark::State& state) {
  const auto h = instance(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(hsd::subdivide(h));
}
BENCHMARK(BM_Subdivide)->Args({5, 10})->Args({6, 20})->Args({7, 40});

void BM_IteratedSubdivision(benchmark::State& state) {
  const auto h = instance(4, 8);
  const int rounds = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hsd::iterate_subdivision(h, rounds));
}
BENCHMARK(BM_IteratedSubdivision)->Arg(1)->Arg(2);

void BM_EmbeddedHomology(benchmark::State& state) {
  const auto h = instance(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(hsd::embedded_homology(h, hsd::CoefficientRing::integers()));
}
BENCHMARK(BM_EmbeddedHomology)->Args({5, 10})->Args({6, 20})->Args({7, 40});

void BM_VerifyInvariance(benchmark::State& state) {
  const auto h = instance(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(hsd::verify_invariance(h, hsd::CoefficientRing::integers()));
}
BENCHMARK(BM_VerifyInvariance)->Args({4, 8})->Args({5, 12})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
