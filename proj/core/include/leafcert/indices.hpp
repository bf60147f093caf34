#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "leafcert/graph.hpp"
#include "leafcert/numbers.hpp"

namespace leafcert {

/// Hop distances between every ordered pair of a connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix(std::size_t n, std::vector<std::uint32_t> entries)
      : n_(n), entries_(std::move(entries)) {}

  std::size_t order() const noexcept { return n_; }
  std::uint32_t operator()(Vertex i, Vertex j) const {
    return entries_[i * n_ + j];
  }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> entries_;
};

/// One BFS per source. Throws ArgumentError on a disconnected graph.
DistanceMatrix all_pairs_distances(const Graph& g);

enum class IndexKind { EdgeCount, M1, M2, HM1, HM2, RDD };

std::string_view index_name(IndexKind kind);

Integer first_zagreb(const Graph& g);
Integer second_zagreb(const Graph& g);
Integer first_hyper_zagreb(const Graph& g);
Integer second_hyper_zagreb(const Graph& g);
/// Sum over unordered pairs of (d(u)+d(v))/dist(u,v), reduced.
Rational reciprocal_degree_distance(const Graph& g);
Rational reciprocal_degree_distance(const Graph& g, const DistanceMatrix& dist);

/// Sum of 1/dist(v,u) over u != v.
Rational reciprocal_transmission(const Graph& g, Vertex v);
Rational reciprocal_transmission(const DistanceMatrix& dist, Vertex v);

/// Exact value of the named index. RDD throws ArgumentError when g is
/// disconnected.
Rational compute_index(const Graph& g, IndexKind kind);

struct IndexReport {
  std::size_t n = 0;
  std::size_t e = 0;
  Integer m1, m2, hm1, hm2;
  // Absent for disconnected graphs.
  std::optional<Rational> rdd;
  std::optional<std::vector<Rational>> dhat;
};

IndexReport compute_indices(const Graph& g);

}  // namespace leafcert
