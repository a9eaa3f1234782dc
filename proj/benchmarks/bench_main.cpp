#include <benchmark/benchmark.h>

#include "multitwist/classify.hpp"
#include "multitwist/coxeter.hpp"
#include "multitwist/numthy.hpp"
#include "multitwist/spectral.hpp"
#include "multitwist/sweep.hpp"

namespace mt = multitwist;

static void BM_PfEigenPath(benchmark::State& state) {
  const auto ad = mt::adjacency_matrix(mt::make_path(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(mt::pf_eigen(ad).mu);
}
BENCHMARK(BM_PfEigenPath)->Arg(10)->Arg(50)->Arg(100);

static void BM_GraphMuQuad(benchmark::State& state) {
  const auto g = mt::make_path(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mt::graph_mu_quad(g));
}
BENCHMARK(BM_GraphMuQuad)->Arg(10)->Arg(100);

static void BM_CharPolyEh10(benchmark::State& state) {
  const auto ad = mt::adjacency_matrix(mt::make_eh10());
  for (auto _ : state) benchmark::DoNotOptimize(mt::char_poly_exact(ad));
}
BENCHMARK(BM_CharPolyEh10);

static void BM_LargestRootLehmer(benchmark::State& state) {
  const auto p = mt::lehmer_polynomial();
  for (auto _ : state) benchmark::DoNotOptimize(mt::largest_real_root(p, 1e-15));
}
BENCHMARK(BM_LargestRootLehmer);

static void BM_MahlerLehmer(benchmark::State& state) {
  const auto p = mt::lehmer_polynomial();
  for (auto _ : state) benchmark::DoNotOptimize(mt::mahler_measure(p));
}
BENCHMARK(BM_MahlerLehmer);

static void BM_HowlettEh10(benchmark::State& state) {
  const auto cs = mt::CoxeterSystem::from_graph(mt::make_eh10());
  for (auto _ : state) benchmark::DoNotOptimize(mt::howlett_element(cs));
}
BENCHMARK(BM_HowlettEh10);

static void BM_EnumerateMultigraphs(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(mt::enumerate_connected_multigraphs(static_cast<std::size_t>(state.range(0)), 8).size());
}
BENCHMARK(BM_EnumerateMultigraphs)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
