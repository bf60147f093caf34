#include "leafcert/graph.hpp"

#include <algorithm>
#include <string>

#include "leafcert/errors.hpp"

namespace leafcert {

Graph::Graph(std::size_t order) {
  if (order > kMaxOrder) {
    throw ArgumentError("order " + std::to_string(order) + " exceeds " +
                        std::to_string(kMaxOrder));
  }
  rows_.resize(order);
}

Graph Graph::from_edges(std::size_t order, std::span<const Edge> edges) {
  Graph g(order);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

std::size_t Graph::min_degree() const {
  std::size_t best = order();
  for (const auto& row : rows_) best = std::min(best, row.count());
  return best;
}

void Graph::check_pair(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) {
    throw ArgumentError("vertex out of range");
  }
  if (u == v) throw ArgumentError("loops are not allowed");
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (rows_[u].test(v)) return;
  rows_[u].set(v);
  rows_[v].set(u);
  ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_pair(u, v);
  if (!rows_[u].test(v)) return;
  rows_[u].reset(v);
  rows_[v].reset(u);
  --edge_count_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v = u + 1; v < order(); ++v) {
      if (rows_[u].test(v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  Graph out(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const std::size_t shift = g.order();
  Graph out(shift + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(u + shift, v + shift);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  const std::size_t shift = g.order();
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < h.order(); ++v) out.add_edge(u, v + shift);
  }
  return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw ArgumentError("permutation size mismatch");
  std::vector<bool> seen(perm.size(), false);
  for (Vertex p : perm) {
    if (p >= perm.size() || seen[p]) throw ArgumentError("not a permutation");
    seen[p] = true;
  }
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

bool is_spanning_subgraph(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if ((g.neighbors(v) & ~h.neighbors(v)).any()) return false;
  }
  return true;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> d(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

Graph complete_graph(std::size_t n) { return complement(Graph(n)); }

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ArgumentError("a cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

}  // namespace leafcert
