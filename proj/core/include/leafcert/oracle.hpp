#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "leafcert/graph.hpp"

namespace leafcert {

inline constexpr std::size_t kDefaultOracleLimit = 10;

using SpanningTree = std::vector<Edge>;

/// A spanning tree of g whose degree-1 vertices are exactly `leaves`, or
/// nullopt when none exists.
///
/// Removing all leaves of such a tree leaves a spanning tree of
/// G[V \ leaves]. The search therefore enumerates spanning trees of that
/// induced subgraph and accepts one when its own leaves can be matched into
/// distinct vertices of `leaves` along edges of g; every other leaf hangs
/// off any internal neighbour. Requires g connected, n <= 64 and
/// 2 <= |leaves| <= n-1; throws ArgumentError / LimitError otherwise.
std::optional<SpanningTree> spanning_tree_with_leaf_set(
    const Graph& g, std::span<const Vertex> leaves);

/// Independent check that `tree` is a spanning tree of g with leaf set
/// exactly `leaves`.
bool is_valid_leaf_tree(const Graph& g, std::span<const Edge> tree,
                        std::span<const Vertex> leaves);

struct LeafWitness {
  std::vector<Vertex> leaves;
  SpanningTree tree;
};

struct LeafDecision {
  bool value = false;
  // Lexicographically first k-set with no spanning tree having it as leaf set.
  std::optional<std::vector<Vertex>> counterexample;
  // Filled per k-set (in lexicographic order) when witnesses are requested.
  std::vector<LeafWitness> witnesses;
};

struct OracleOptions {
  std::size_t max_order = kDefaultOracleLimit;
  bool collect_witnesses = false;
};

/// Exhaustive decision over every k-subset in lexicographic order; stops at
/// the first failing subset. Requires g connected and 2 <= k <= n-1.
LeafDecision is_k_leaf_connected(const Graph& g, std::size_t k,
                                 const OracleOptions& options = {});

}  // namespace leafcert
