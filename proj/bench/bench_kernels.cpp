// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <map>

#include "rainbow/coloring.hpp"
#include "rainbow/connectivity.hpp"
#include "rainbow/diameter_builder.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/planar.hpp"

using namespace rainbow;

namespace {

// A verified coloring of a tower with `layers` + 1 triangles.
struct Colored {
  Graph g;
  EdgeColoring col;
};

const Colored& tower_coloring(int layers) {
  static std::map<int, Colored> cache;
  auto it = cache.find(layers);
  if (it == cache.end()) {
    Graph g = clique_tower(3, layers);
    EdgeColoring col = construct_k3(g).coloring;
    it = cache.emplace(layers, Colored{std::move(g), std::move(col)}).first;
  }
  return it->second;
}

void BM_VerifySerial(benchmark::State& state) {
  const Colored& c = tower_coloring(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_rainbow_connected_serial(c.g, c.col));
  state.counters["n"] = c.g.n();
}

void BM_VerifyParallel(benchmark::State& state) {
  const Colored& c = tower_coloring(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_rainbow_connected(c.g, c.col));
  state.counters["n"] = c.g.n();
}

void BM_VerifyPlanarSerial(benchmark::State& state) {
  const PlanarEmbedding emb = stacked_triangulation(static_cast<int>(state.range(0)), 1);
  const EdgeColoring col = construct_planar(emb).coloring;
  for (auto _ : state) benchmark::DoNotOptimize(is_rainbow_connected_serial(emb.graph(), col));
}

void BM_VerifyPlanarParallel(benchmark::State& state) {
  const PlanarEmbedding emb = stacked_triangulation(static_cast<int>(state.range(0)), 1);
  const EdgeColoring col = construct_planar(emb).coloring;
  for (auto _ : state) benchmark::DoNotOptimize(is_rainbow_connected(emb.graph(), col));
}

void BM_AllPairsSerial(benchmark::State& state) {
  const Graph g = random_connected_graph(static_cast<int>(state.range(0)), 1, 50, 7);
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances_serial(g));
}

void BM_AllPairsParallel(benchmark::State& state) {
  const Graph g = random_connected_graph(static_cast<int>(state.range(0)), 1, 50, 7);
  for (auto _ : state) benchmark::DoNotOptimize(all_pairs_distances(g));
}

void BM_ConnectivitySerial(benchmark::State& state) {
  const Graph g = stacked_triangulation(static_cast<int>(state.range(0)), 3).graph();
  for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity_serial(g));
}

void BM_ConnectivityParallel(benchmark::State& state) {
  const Graph g = stacked_triangulation(static_cast<int>(state.range(0)), 3).graph();
  for (auto _ : state) benchmark::DoNotOptimize(vertex_connectivity(g));
}

}  // namespace

BENCHMARK(BM_VerifySerial)->Arg(5)->Arg(15)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(5)->Arg(15)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyPlanarSerial)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyPlanarParallel)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AllPairsSerial)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AllPairsParallel)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConnectivitySerial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConnectivityParallel)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
