#pragma once

#include <span>
#include <vector>

#include "leafcert/graph.hpp"

namespace leafcert {

struct ClosureTrace {
  long l = 0;
  std::vector<Edge> added;  // in insertion order
  Graph result;
};

/// Repeatedly joins a nonadjacent pair whose current degree sum is at least
/// l, scanning pairs lexicographically and restarting after each addition,
/// until no such pair remains. Throws ArgumentError when l < 0.
ClosureTrace l_closure(const Graph& g, long l);

/// Same fixed point, but candidate pairs are scanned in `scan_order` (a
/// permutation of all vertex pairs with first < second).
ClosureTrace l_closure(const Graph& g, long l, std::span<const Edge> scan_order);

}  // namespace leafcert
