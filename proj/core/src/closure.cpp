#include "leafcert/closure.hpp"

#include <algorithm>

#include "leafcert/errors.hpp"

namespace leafcert {
namespace {

std::vector<Edge> lexicographic_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

}  // namespace

ClosureTrace l_closure(const Graph& g, long l) {
  return l_closure(g, l, lexicographic_pairs(g.order()));
}

ClosureTrace l_closure(const Graph& g, long l, std::span<const Edge> scan_order) {
  if (l < 0) throw ArgumentError("closure threshold must be nonnegative");
  const std::size_t n = g.order();
  if (scan_order.size() != n * (n - 1) / 2) {
    throw ArgumentError("scan order must list every vertex pair once");
  }
  ClosureTrace trace{l, {}, g};
  std::vector<long> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = static_cast<long>(g.degree(v));

  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [u, v] : scan_order) {
      if (trace.result.adjacent(u, v) || degree[u] + degree[v] < l) continue;
      trace.result.add_edge(u, v);
      trace.added.emplace_back(std::min(u, v), std::max(u, v));
      ++degree[u];
      ++degree[v];
      changed = true;
      break;
    }
  }
  return trace;
}

}  // namespace leafcert
