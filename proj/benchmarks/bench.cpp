#include <benchmark/benchmark.h>

#include <random>

#include "leafcert/closure.hpp"
#include "leafcert/families.hpp"
#include "leafcert/indices.hpp"
#include "leafcert/oracle.hpp"
#include "leafcert/structure.hpp"

namespace {

using namespace leafcert;

Graph dense_random(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.7);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

void BM_OracleComplete(benchmark::State& state) {
  const Graph g = complete_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_k_leaf_connected(g, 2).value);
}
BENCHMARK(BM_OracleComplete)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_OracleExtremal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = build({Family::ExtremalM1, n, 3});
  for (auto _ : state) benchmark::DoNotOptimize(is_k_leaf_connected(g, 3).value);
}
BENCHMARK(BM_OracleExtremal)->DenseRange(7, 10)->Unit(benchmark::kMillisecond);

void BM_Indices(benchmark::State& state) {
  const Graph g = dense_random(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(compute_indices(g));
}
BENCHMARK(BM_Indices)->Arg(20)->Arg(60)->Arg(200);

void BM_Closure(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = dense_random(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(l_closure(g, static_cast<long>(n + 1)));
}
BENCHMARK(BM_Closure)->Arg(20)->Arg(60)->Arg(200);

void BM_Isomorphism(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = build({Family::FourSevenException, n});
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = (v * 7 + 3) % n;
  const Graph h = relabel(g, perm);
  for (auto _ : state) benchmark::DoNotOptimize(are_isomorphic(g, h));
}
BENCHMARK(BM_Isomorphism)->Arg(20)->Arg(31);

}  // namespace
BENCHMARK_MAIN();
