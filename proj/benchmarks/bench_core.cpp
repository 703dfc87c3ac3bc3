#include <benchmark/benchmark.h>

#include "gsketch/canonical.hpp"
#include "gsketch/clustering.hpp"
#include "gsketch/errors.hpp"
#include "gsketch/instances.hpp"
#include "gsketch/preserver.hpp"
#include "gsketch/spanner.hpp"
#include "gsketch/verify.hpp"

using namespace gsketch;

namespace {

Graph sparse(std::size_t n) { return random_graph(n, 4 * n, 1); }

void BM_Bfs(benchmark::State& state) {
  const auto g = sparse(static_cast<std::size_t>(state.range(0)));
  NodeId s = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bfs_distances(g, s));
    s = (s + 1) % g.node_count();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}
BENCHMARK(BM_Bfs)->RangeMultiplier(4)->Range(256, 16384);

void BM_CanonicalPath(benchmark::State& state) {
  const auto g = sparse(static_cast<std::size_t>(state.range(0)));
  Rng rng(2);
  for (auto _ : state) {
    const auto u = static_cast<NodeId>(rng.uniform_below(g.node_count()));
    const auto v = static_cast<NodeId>(rng.uniform_below(g.node_count()));
    if (u == v) continue;
    try {
      benchmark::DoNotOptimize(canonical_shortest_path(g, u, v));
    } catch (const NoPathError&) {
    }
  }
}
BENCHMARK(BM_CanonicalPath)->RangeMultiplier(4)->Range(256, 16384);

void BM_NaivePreserver(benchmark::State& state) {
  const auto g = sparse(static_cast<std::size_t>(state.range(0)));
  const auto pairs = random_pairs(g, static_cast<std::size_t>(state.range(1)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(naive_preserver(g, pairs));
}
BENCHMARK(BM_NaivePreserver)->Args({512, 200})->Args({2048, 800});

void BM_NewPreserver(benchmark::State& state) {
  const auto g = sparse(static_cast<std::size_t>(state.range(0)));
  const auto pairs = random_pairs(g, static_cast<std::size_t>(state.range(1)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(new_preserver(g, pairs, PreserverParams{}));
}
BENCHMARK(BM_NewPreserver)->Args({512, 200})->Args({2048, 800});

void BM_Clustering(benchmark::State& state) {
  const auto g = grid_graph(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_clustering(g, 2));
}
BENCHMARK(BM_Clustering)->Arg(16)->Arg(32)->Arg(64);

void BM_SubsetSpanner(benchmark::State& state) {
  const auto g = sparse(static_cast<std::size_t>(state.range(0)));
  const auto s = random_subset(g.node_count(), 32, 4);
  for (auto _ : state) benchmark::DoNotOptimize(subset_spanner(g, s, 0.3));
}
BENCHMARK(BM_SubsetSpanner)->Arg(256)->Arg(1024);

void BM_StandardSpanner(benchmark::State& state) {
  const auto g = sparse(static_cast<std::size_t>(state.range(0)));
  StandardParams sp;
  sp.d = 0.3;
  sp.seed = 5;
  for (auto _ : state) benchmark::DoNotOptimize(standard_spanner(g, sp));
}
BENCHMARK(BM_StandardSpanner)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_Verify(benchmark::State& state) {
  const auto g = sparse(static_cast<std::size_t>(state.range(0)));
  const auto pairs = random_pairs(g, 1000, 6);
  const auto pres = naive_preserver(g, pairs);
  for (auto _ : state) benchmark::DoNotOptimize(verify(g, pres.h, pairs, 0.0, 1));
}
BENCHMARK(BM_Verify)->Arg(2048);

}  // namespace
BENCHMARK_MAIN();
