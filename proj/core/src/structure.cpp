#include "leafcert/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "leafcert/errors.hpp"

namespace leafcert {
namespace {

using Mask = std::uint64_t;

std::vector<Mask> to_masks(const Graph& g) {
  std::vector<Mask> rows(g.order(), 0);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.adjacent(u, v)) rows[u] |= Mask{1} << v;
    }
  }
  return rows;
}

// Whether the vertices in `alive` induce a connected subgraph.
bool mask_connected(const std::vector<Mask>& rows, Mask alive) {
  if (alive == 0) return true;
  Mask seen = alive & -alive;
  Mask frontier = seen;
  while (frontier) {
    const int v = __builtin_ctzll(frontier);
    frontier &= frontier - 1;
    const Mask fresh = rows[v] & alive & ~seen;
    seen |= fresh;
    frontier |= fresh;
  }
  return seen == alive;
}

// Jointly refines vertex colours of g and h until stable. Colours are
// comparable across the two graphs.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine(
    const Graph& g, const Graph& h) {
  const std::size_t n = g.order();
  std::vector<std::size_t> cg(n), ch(n);
  for (Vertex v = 0; v < n; ++v) {
    cg[v] = g.degree(v);
    ch[v] = h.degree(v);
  }
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    auto signature = [&](const Graph& x, const std::vector<std::size_t>& c,
                         Vertex v) {
      std::vector<std::size_t> sig{c[v]};
      for (Vertex u = 0; u < n; ++u) {
        if (x.adjacent(v, u)) sig.push_back(c[u]);
      }
      std::sort(sig.begin() + 1, sig.end());
      return sig;
    };
    std::vector<std::vector<std::size_t>> sg(n), sh(n);
    for (Vertex v = 0; v < n; ++v) {
      sg[v] = signature(g, cg, v);
      sh[v] = signature(h, ch, v);
      ids.emplace(sg[v], 0);
      ids.emplace(sh[v], 0);
    }
    std::size_t next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (Vertex v = 0; v < n; ++v) {
      cg[v] = ids[sg[v]];
      ch[v] = ids[sh[v]];
    }
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {cg, ch};
}

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h, std::vector<std::size_t> cg,
            std::vector<std::size_t> ch)
      : g_(g), h_(h), cg_(std::move(cg)), ch_(std::move(ch)),
        map_(g.order(), kUnmapped), used_(g.order(), false) {
    std::vector<std::size_t> size(g.order() + 1, 0);
    for (auto c : cg_) ++size[c];
    order_.resize(g.order());
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return size[cg_[a]] < size[cg_[b]];
    });
  }

  bool run() { return extend(0); }

 private:
  static constexpr Vertex kUnmapped = static_cast<Vertex>(-1);

  bool consistent(Vertex v, Vertex image, std::size_t depth) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex u = order_[i];
      if (g_.adjacent(v, u) != h_.adjacent(image, map_[u])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex w = 0; w < h_.order(); ++w) {
      if (used_[w] || ch_[w] != cg_[v] || !consistent(v, w, depth)) continue;
      map_[v] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      used_[w] = false;
      map_[v] = kUnmapped;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<std::size_t> cg_, ch_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

}  // namespace

bool is_connected(const Graph& g) { return is_connected_without(g, VertexSet{}); }

bool is_connected_without(const Graph& g, const VertexSet& removed) {
  const std::size_t n = g.order();
  VertexSet alive;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed.test(v)) alive.set(v);
  }
  if (alive.none()) return true;
  Vertex start = 0;
  while (!alive.test(start)) ++start;
  VertexSet seen;
  seen.set(start);
  std::vector<Vertex> queue{start};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexSet fresh = g.neighbors(queue[head]) & alive & ~seen;
    for (Vertex u = 0; u < n; ++u) {
      if (fresh.test(u)) queue.push_back(u);
    }
    seen |= fresh;
  }
  return seen == alive;
}

std::size_t vertex_connectivity(const Graph& g, std::size_t limit) {
  const std::size_t n = g.order();
  const std::size_t cap = std::min<std::size_t>(limit, 63);
  if (n > cap) {
    throw LimitError("vertex_connectivity: order " + std::to_string(n) +
                     " exceeds limit " + std::to_string(cap));
  }
  const auto rows = to_masks(g);
  const Mask all = (Mask{1} << n) - 1;
  if (!mask_connected(rows, all)) return 0;
  for (std::size_t size = 1; size + 2 <= n; ++size) {
    // Gosper's hack over all size-subsets of the n vertices.
    Mask cut = (Mask{1} << size) - 1;
    while (cut <= all) {
      if (!mask_connected(rows, all & ~cut)) return size;
      const Mask low = cut & -cut;
      const Mask ripple = cut + low;
      cut = (((ripple ^ cut) >> 2) / low) | ripple;
    }
  }
  return n - 1;
}

bool are_isomorphic(const Graph& g, const Graph& h, std::size_t limit) {
  if (g.order() > limit || h.order() > limit) {
    throw LimitError("are_isomorphic: order exceeds limit " +
                     std::to_string(limit));
  }
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  auto [cg, ch] = refine(g, h);
  auto sorted_g = cg;
  auto sorted_h = ch;
  std::sort(sorted_g.begin(), sorted_g.end());
  std::sort(sorted_h.begin(), sorted_h.end());
  if (sorted_g != sorted_h) return false;
  return IsoSearch(g, h, std::move(cg), std::move(ch)).run();
}

}  // namespace leafcert
