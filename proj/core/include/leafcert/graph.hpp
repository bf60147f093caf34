#pragma once

#include <bitset>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace leafcert {

// Largest order a Graph can hold. Adjacency rows are fixed-width bit sets.
inline constexpr std::size_t kMaxOrder = 512;

using Vertex = std::size_t;
using VertexSet = std::bitset<kMaxOrder>;
// Undirected edge, stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept symmetric and irreflexive by every mutator, so the
/// invariants hold for every reachable value. Intended to be built once and
/// then shared read-only.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph of order n. Throws ArgumentError when n > kMaxOrder.
  explicit Graph(std::size_t order);

  static Graph from_edges(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }
  std::size_t min_degree() const;

  /// No-op when the edge already exists. Throws ArgumentError on loops or
  /// out-of-range endpoints.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// Edges in lexicographic order of (first, second).
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.rows_ == b.rows_;
  }

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

Graph complement(const Graph& g);
/// Disjoint union g + h; h's vertices are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
/// Join g ∨ h: the disjoint union plus every edge between the two sides.
Graph join(const Graph& g, const Graph& h);
/// Vertex v of g becomes perm[v] in the result.
Graph relabel(const Graph& g, std::span<const Vertex> perm);
/// Whether every edge of g is an edge of h (same order required).
bool is_spanning_subgraph(const Graph& g, const Graph& h);

std::vector<std::size_t> degree_sequence(const Graph& g);

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

}  // namespace leafcert
