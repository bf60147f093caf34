#pragma once

#include <cstddef>

#include "leafcert/graph.hpp"

namespace leafcert {

inline constexpr std::size_t kDefaultConnectivityLimit = 12;
inline constexpr std::size_t kDefaultIsomorphismLimit = 64;

bool is_connected(const Graph& g);
bool is_connected_without(const Graph& g, const VertexSet& removed);

/// Minimum vertex cut size by exhaustive enumeration of candidate cut sets in
/// increasing size; kappa(K_n) = n - 1. Throws LimitError above `limit`.
std::size_t vertex_connectivity(const Graph& g,
                                std::size_t limit = kDefaultConnectivityLimit);

/// Backtracking isomorphism test over jointly refined degree classes.
/// Throws LimitError when either order exceeds `limit`.
bool are_isomorphic(const Graph& g, const Graph& h,
                    std::size_t limit = kDefaultIsomorphismLimit);

}  // namespace leafcert
