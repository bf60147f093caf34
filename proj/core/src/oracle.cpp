#include "leafcert/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "leafcert/errors.hpp"
#include "leafcert/structure.hpp"

namespace leafcert {
namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaskBits = 64;

int lowest(Mask m) { return __builtin_ctzll(m); }
int popcount(Mask m) { return __builtin_popcountll(m); }
Mask bit(std::size_t v) { return Mask{1} << v; }

bool mask_connected(const std::array<Mask, kMaskBits>& rows, Mask alive) {
  if (alive == 0) return true;
  Mask seen = alive & -alive;
  Mask frontier = seen;
  while (frontier) {
    const int v = lowest(frontier);
    frontier &= frontier - 1;
    const Mask fresh = rows[v] & alive & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen == alive;
}

// Searches one graph for spanning trees with a prescribed leaf set. Built
// once per graph so the oracle can query many leaf sets cheaply.
class LeafTreeSearch {
 public:
  explicit LeafTreeSearch(const Graph& g) : n_(g.order()) {
    rows_.fill(0);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = 0; v < n_; ++v) {
        if (g.adjacent(u, v)) rows_[u] |= bit(v);
      }
    }
    all_ = n_ == kMaskBits ? ~Mask{0} : bit(n_) - 1;
  }

  std::optional<SpanningTree> find(Mask leaves) {
    leaves_ = leaves;
    internal_ = all_ & ~leaves;
    const int internal_count = popcount(internal_);
    if (internal_count == 0) return std::nullopt;
    if (internal_count == 1) {
      const int hub = lowest(internal_);
      if ((rows_[hub] & leaves) != leaves) return std::nullopt;
      return attach_leaves({});
    }
    for (Mask s = leaves; s; s &= s - 1) {
      if ((rows_[lowest(s)] & internal_) == 0) return std::nullopt;
    }
    if (!mask_connected(rows_, internal_)) return std::nullopt;

    edges_.clear();
    for (Mask a = internal_; a; a &= a - 1) {
      const int u = lowest(a);
      for (Mask b = rows_[u] & internal_ & ~((bit(u) << 1) - 1); b; b &= b - 1) {
        edges_.emplace_back(u, lowest(b));
      }
    }
    available_ = rows_;
    for (std::size_t v = 0; v < n_; ++v) available_[v] &= internal_;
    std::iota(parent_.begin(), parent_.end(), 0);
    tree_degree_.fill(0);
    chosen_.clear();
    rejected_leaf_sets_.clear();
    needed_ = static_cast<std::size_t>(internal_count - 1);
    if (!enumerate(0)) return std::nullopt;
    return attach_leaves(chosen_);
  }

 private:
  int root(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  // Backtracking over edges of G[internal]: include when it joins two
  // components, exclude only while the remaining edges still span.
  bool enumerate(std::size_t index) {
    if (chosen_.size() == needed_) return accept_current();
    if (index == edges_.size()) return false;
    const auto [u, v] = edges_[index];
    const int ru = root(u);
    const int rv = root(v);
    if (ru != rv) {
      parent_[ru] = rv;
      ++tree_degree_[u];
      ++tree_degree_[v];
      chosen_.emplace_back(u, v);
      if (enumerate(index + 1)) return true;
      chosen_.pop_back();
      --tree_degree_[u];
      --tree_degree_[v];
      parent_[ru] = ru;
    }
    available_[u] &= ~bit(v);
    available_[v] &= ~bit(u);
    bool found = false;
    if (mask_connected(available_, internal_)) found = enumerate(index + 1);
    available_[u] |= bit(v);
    available_[v] |= bit(u);
    return found;
  }

  bool accept_current() {
    Mask tree_leaves = 0;
    for (Mask a = internal_; a; a &= a - 1) {
      const int v = lowest(a);
      if (tree_degree_[v] == 1) tree_leaves |= bit(v);
    }
    if (popcount(tree_leaves) > popcount(leaves_)) return false;
    if (rejected_leaf_sets_.count(tree_leaves)) return false;
    if (match_tree_leaves(tree_leaves)) return true;
    rejected_leaf_sets_.insert(tree_leaves);
    return false;
  }

  // Kuhn's augmenting paths: saturate every tree leaf with a distinct
  // prescribed leaf adjacent to it.
  bool match_tree_leaves(Mask tree_leaves) {
    partner_of_leaf_.fill(-1);
    for (Mask a = tree_leaves; a; a &= a - 1) {
      Mask visited = 0;
      if (!augment(lowest(a), visited)) return false;
    }
    return true;
  }

  bool augment(int tree_leaf, Mask& visited) {
    for (Mask c = rows_[tree_leaf] & leaves_ & ~visited; c; c &= c - 1) {
      const int s = lowest(c);
      if (visited & bit(s)) continue;
      visited |= bit(s);
      if (partner_of_leaf_[s] < 0 || augment(partner_of_leaf_[s], visited)) {
        partner_of_leaf_[s] = tree_leaf;
        return true;
      }
    }
    return false;
  }

  SpanningTree attach_leaves(SpanningTree tree) const {
    Mask matched = 0;
    if (!tree.empty()) {
      for (Mask s = leaves_; s; s &= s - 1) {
        const int leaf = lowest(s);
        if (partner_of_leaf_[leaf] >= 0) {
          tree.emplace_back(partner_of_leaf_[leaf], leaf);
          matched |= bit(leaf);
        }
      }
    }
    for (Mask s = leaves_ & ~matched; s; s &= s - 1) {
      const int leaf = lowest(s);
      tree.emplace_back(lowest(rows_[leaf] & internal_), leaf);
    }
    for (auto& [a, b] : tree) {
      if (a > b) std::swap(a, b);
    }
    std::sort(tree.begin(), tree.end());
    return tree;
  }

  std::size_t n_;
  std::array<Mask, kMaskBits> rows_{};
  Mask all_ = 0;
  Mask leaves_ = 0;
  Mask internal_ = 0;
  std::vector<Edge> edges_;
  std::array<Mask, kMaskBits> available_{};
  std::array<int, kMaskBits> parent_{};
  std::array<int, kMaskBits> tree_degree_{};
  std::array<int, kMaskBits> partner_of_leaf_{};
  SpanningTree chosen_;
  std::size_t needed_ = 0;
  std::unordered_set<Mask> rejected_leaf_sets_;
};

void require_searchable(const Graph& g, std::size_t max_order) {
  const std::size_t cap = std::min(max_order, kMaskBits);
  if (g.order() > cap) {
    throw LimitError("oracle: order " + std::to_string(g.order()) +
                     " exceeds limit " + std::to_string(cap));
  }
  if (!is_connected(g)) throw ArgumentError("oracle: graph is disconnected");
}

Mask to_mask(const Graph& g, std::span<const Vertex> leaves) {
  Mask m = 0;
  for (Vertex v : leaves) {
    if (v >= g.order()) throw ArgumentError("leaf vertex out of range");
    if (m & bit(v)) throw ArgumentError("duplicate leaf vertex");
    m |= bit(v);
  }
  if (leaves.size() < 2 || leaves.size() + 1 > g.order()) {
    throw ArgumentError("leaf set size must lie in 2..n-1");
  }
  return m;
}

}  // namespace

std::optional<SpanningTree> spanning_tree_with_leaf_set(
    const Graph& g, std::span<const Vertex> leaves) {
  require_searchable(g, kMaskBits);
  const Mask m = to_mask(g, leaves);
  return LeafTreeSearch(g).find(m);
}

bool is_valid_leaf_tree(const Graph& g, std::span<const Edge> tree,
                        std::span<const Vertex> leaves) {
  const std::size_t n = g.order();
  if (n == 0 || tree.size() != n - 1) return false;
  std::vector<std::size_t> degree(n, 0);
  std::vector<Vertex> comp(n);
  std::iota(comp.begin(), comp.end(), Vertex{0});
  auto find = [&](Vertex v) {
    while (comp[v] != v) v = comp[v] = comp[comp[v]];
    return v;
  };
  for (auto [u, v] : tree) {
    if (u >= n || v >= n || u == v || !g.adjacent(u, v)) return false;
    const Vertex a = find(u);
    const Vertex b = find(v);
    if (a == b) return false;  // cycle or repeated edge
    comp[a] = b;
    ++degree[u];
    ++degree[v];
  }
  std::vector<bool> wanted(n, false);
  for (Vertex v : leaves) {
    if (v >= n) return false;
    wanted[v] = true;
  }
  for (Vertex v = 0; v < n; ++v) {
    if ((degree[v] == 1) != wanted[v]) return false;
  }
  return true;
}

LeafDecision is_k_leaf_connected(const Graph& g, std::size_t k,
                                 const OracleOptions& options) {
  require_searchable(g, options.max_order);
  const std::size_t n = g.order();
  if (k < 2 || k + 1 > n) throw ArgumentError("k must lie in 2..n-1");

  LeafTreeSearch search(g);
  LeafDecision decision;
  std::vector<Vertex> subset(k);
  std::iota(subset.begin(), subset.end(), Vertex{0});
  for (;;) {
    Mask m = 0;
    for (Vertex v : subset) m |= bit(v);
    auto tree = search.find(m);
    if (!tree) {
      decision.value = false;
      decision.counterexample = subset;
      return decision;
    }
    if (!is_valid_leaf_tree(g, *tree, subset)) {
      throw std::logic_error("oracle produced an invalid witness tree");
    }
    if (options.collect_witnesses) {
      decision.witnesses.push_back({subset, std::move(*tree)});
    }
    // Next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  decision.value = true;
  return decision;
}

}  // namespace leafcert
