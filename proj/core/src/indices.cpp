#include "leafcert/indices.hpp"

#include <limits>

#include "leafcert/errors.hpp"
#include "leafcert/structure.hpp"

namespace leafcert {
namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// Sum of value(dist) / dist grouped by distance, so only one rational
// division happens per distinct distance.
Rational sum_over_distances(const std::vector<Integer>& by_distance) {
  Rational total = 0;
  for (std::size_t t = 1; t < by_distance.size(); ++t) {
    if (by_distance[t] != 0) total += Rational(by_distance[t], Integer(t));
  }
  return total;
}

}  // namespace

DistanceMatrix all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> d(n * n, kUnreached);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n; ++s) {
    std::uint32_t* row = d.data() + s * n;
    row[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      const VertexSet& nbrs = g.neighbors(u);
      for (Vertex v = 0; v < n; ++v) {
        if (nbrs.test(v) && row[v] == kUnreached) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
      }
    }
    if (queue.size() != n) {
      throw ArgumentError("distances are undefined on a disconnected graph");
    }
  }
  return DistanceMatrix(n, std::move(d));
}

std::string_view index_name(IndexKind kind) {
  switch (kind) {
    case IndexKind::EdgeCount: return "e";
    case IndexKind::M1: return "M1";
    case IndexKind::M2: return "M2";
    case IndexKind::HM1: return "HM1";
    case IndexKind::HM2: return "HM2";
    case IndexKind::RDD: return "RDD";
  }
  return "unknown";
}

Integer first_zagreb(const Graph& g) {
  Integer total = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const Integer d = g.degree(v);
    total += d * d;
  }
  return total;
}

Integer second_zagreb(const Graph& g) {
  Integer total = 0;
  for (auto [u, v] : g.edges()) total += Integer(g.degree(u)) * g.degree(v);
  return total;
}

Integer first_hyper_zagreb(const Graph& g) {
  Integer total = 0;
  for (auto [u, v] : g.edges()) {
    const Integer s = g.degree(u) + g.degree(v);
    total += s * s;
  }
  return total;
}

Integer second_hyper_zagreb(const Graph& g) {
  Integer total = 0;
  for (auto [u, v] : g.edges()) {
    const Integer p = Integer(g.degree(u)) * g.degree(v);
    total += p * p;
  }
  return total;
}

Rational reciprocal_degree_distance(const Graph& g) {
  return reciprocal_degree_distance(g, all_pairs_distances(g));
}

Rational reciprocal_degree_distance(const Graph& g,
                                    const DistanceMatrix& dist) {
  const std::size_t n = g.order();
  std::vector<Integer> by_distance(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      by_distance[dist(u, v)] += g.degree(u) + g.degree(v);
    }
  }
  return sum_over_distances(by_distance);
}

Rational reciprocal_transmission(const Graph& g, Vertex v) {
  if (v >= g.order()) throw ArgumentError("vertex out of range");
  return reciprocal_transmission(all_pairs_distances(g), v);
}

Rational reciprocal_transmission(const DistanceMatrix& dist, Vertex v) {
  std::vector<Integer> by_distance(dist.order(), 0);
  for (Vertex u = 0; u < dist.order(); ++u) {
    if (u != v) by_distance[dist(v, u)] += 1;
  }
  return sum_over_distances(by_distance);
}

Rational compute_index(const Graph& g, IndexKind kind) {
  switch (kind) {
    case IndexKind::EdgeCount: return Rational(g.edge_count());
    case IndexKind::M1: return Rational(first_zagreb(g));
    case IndexKind::M2: return Rational(second_zagreb(g));
    case IndexKind::HM1: return Rational(first_hyper_zagreb(g));
    case IndexKind::HM2: return Rational(second_hyper_zagreb(g));
    case IndexKind::RDD: return reciprocal_degree_distance(g);
  }
  throw ArgumentError("unknown index kind");
}

IndexReport compute_indices(const Graph& g) {
  IndexReport r;
  r.n = g.order();
  r.e = g.edge_count();
  r.m1 = first_zagreb(g);
  r.m2 = second_zagreb(g);
  r.hm1 = first_hyper_zagreb(g);
  r.hm2 = second_hyper_zagreb(g);
  if (is_connected(g)) {
    const DistanceMatrix dist = all_pairs_distances(g);
    r.rdd = reciprocal_degree_distance(g, dist);
    std::vector<Rational> dhat(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
      dhat[v] = reciprocal_transmission(dist, v);
    }
    r.dhat = std::move(dhat);
  }
  return r;
}

}  // namespace leafcert
