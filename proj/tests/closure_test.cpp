#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "leafcert/closure.hpp"
#include "leafcert/errors.hpp"
#include "leafcert/families.hpp"
#include "test_support.hpp"

namespace leafcert {
namespace {

std::vector<Edge> all_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

void expect_closed(const ClosureTrace& t) {
  const Graph& h = t.result;
  for (auto [u, v] : all_pairs(h.order())) {
    if (!h.adjacent(u, v)) {
      EXPECT_LE(static_cast<long>(h.degree(u) + h.degree(v)), t.l - 1);
    }
  }
}

TEST(Closure, CompleteGraphIsFixed) {
  for (long l : {0L, 3L, 100L}) {
    const ClosureTrace t = l_closure(complete_graph(6), l);
    EXPECT_TRUE(t.added.empty());
    EXPECT_EQ(t.result, complete_graph(6));
  }
}

TEST(Closure, FourCycleClosesToK4) {
  const ClosureTrace t = l_closure(cycle_graph(4), 4);
  EXPECT_EQ(t.result, complete_graph(4));
  EXPECT_EQ(t.added, (std::vector<Edge>{{0, 2}, {1, 3}}));
  EXPECT_EQ(l_closure(cycle_graph(4), 5).result, cycle_graph(4));
}

TEST(Closure, ExtremalGraphIsAlreadyClosed) {
  const Graph g = build({Family::ExtremalM1, 8, 2});
  const ClosureTrace t = l_closure(g, 9);
  EXPECT_TRUE(t.added.empty());
  std::size_t best = 0;
  for (auto [u, v] : all_pairs(8)) {
    if (!g.adjacent(u, v)) best = std::max(best, g.degree(u) + g.degree(v));
  }
  EXPECT_EQ(best, 8u);
}

TEST(Closure, ExceptionalFamiliesAreClosed) {
  for (std::size_t k = 2; k <= 4; ++k) {
    for (std::size_t n = k + 17; n <= 26; ++n) {
      const long l = static_cast<long>(n + k) - 1;
      for (const FamilySpec spec : {FamilySpec{Family::EdgeException, n, k},
                                    FamilySpec{Family::ThreeFiveException, n, k},
                                    FamilySpec{Family::FourSevenException, n, k}}) {
        const Graph g = build(spec);
        EXPECT_TRUE(l_closure(g, l).added.empty()) << family_name(spec.family);
      }
    }
  }
}

TEST(Closure, NegativeThresholdRejected) {
  EXPECT_THROW(l_closure(cycle_graph(4), -1), ArgumentError);
  const auto bad = std::vector<Edge>{{0, 1}};
  EXPECT_THROW(l_closure(cycle_graph(4), 4, bad), ArgumentError);
}

TEST(Closure, TraceInvariantsOnRandomGraphs) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 14;
    const Graph g = testing::random_graph(n, 0.45, rng);
    const long l = static_cast<long>(n) + trial % 4;
    const ClosureTrace t = l_closure(g, l);
    EXPECT_TRUE(is_spanning_subgraph(g, t.result));
    expect_closed(t);
    // Replay the trace: each pair must be eligible at its own step.
    Graph replay = g;
    for (auto [u, v] : t.added) {
      EXPECT_FALSE(replay.adjacent(u, v));
      EXPECT_GE(static_cast<long>(replay.degree(u) + replay.degree(v)), l);
      replay.add_edge(u, v);
    }
    EXPECT_EQ(replay, t.result);
    EXPECT_TRUE(l_closure(t.result, l).added.empty());  // idempotent
  }
}

TEST(Closure, ResultIndependentOfScanOrder) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 4 + trial % 9;
    const Graph g = testing::random_graph(n, 0.5, rng);
    const long l = static_cast<long>(n) + trial % 3;
    const Graph lexicographic = l_closure(g, l).result;
    auto order = all_pairs(n);
    std::shuffle(order.begin(), order.end(), rng);
    EXPECT_EQ(l_closure(g, l, order).result, lexicographic);
  }
}

TEST(Closure, LargerThresholdGivesSubgraph) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 4 + trial % 10;
    const Graph g = testing::random_graph(n, 0.5, rng);
    const long l = static_cast<long>(n) - 1 + trial % 3;
    EXPECT_TRUE(is_spanning_subgraph(l_closure(g, l + 1).result, l_closure(g, l).result));
  }
}

}  // namespace
}  // namespace leafcert
