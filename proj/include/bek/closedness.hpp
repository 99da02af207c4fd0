#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bek/graph.hpp"

namespace bek {

// ---------------------------------------------------------------------------
// Chordality and claw-freeness.

/// Chordal <=> a perfect elimination ordering exists; tested by repeatedly
/// removing a simplicial vertex (one whose live neighborhood is a clique).
inline bool is_chordal(const Graph& g) {
  const int n = g.vertex_count();
  std::uint32_t alive = g.full_mask();
  for (int step = 0; step < n; ++step) {
    bool found = false;
    for (std::uint32_t m = alive; m && !found; m &= m - 1) {
      const int v = std::countr_zero(m) + 1;
      const std::uint32_t nb = g.neighbor_mask(v) & alive;
      bool simplicial = true;
      for (std::uint32_t a = nb; a && simplicial; a &= a - 1) {
        const int u = std::countr_zero(a) + 1;
        if ((nb & ~g.neighbor_mask(u) & ~(1u << (u - 1))) != 0) simplicial = false;
      }
      if (simplicial) {
        alive &= ~(1u << (v - 1));
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

/// No induced K_{1,3}: no vertex has three pairwise non-adjacent neighbors.
inline bool is_claw_free(const Graph& g) {
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const auto nb = g.neighbors(v);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (g.has_edge(nb[a], nb[b])) continue;
        for (std::size_t c = b + 1; c < nb.size(); ++c)
          if (!g.has_edge(nb[a], nb[c]) && !g.has_edge(nb[b], nb[c])) return false;
      }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Narrowness.

namespace detail {

inline constexpr long long kShortestPathCap = 1'000'000;

/// Enumerates the vertex masks of all shortest u-v paths via the BFS-layer
/// DAG. Throws past kShortestPathCap paths.
inline void enumerate_shortest_paths(const Graph& g,
                                     const std::vector<std::vector<int>>& dist,
                                     int u, int v, std::uint32_t mask, int cur,
                                     long long& count,
                                     std::vector<std::uint32_t>& out) {
  if (cur == v) {
    if (++count > kShortestPathCap)
      throw std::runtime_error("is_narrow: shortest-path enumeration cap exceeded");
    out.push_back(mask);
    return;
  }
  for (int w : g.neighbors(cur))
    if (dist[w][v] == dist[cur][v] - 1)
      enumerate_shortest_paths(g, dist, u, v, mask | (1u << (w - 1)), w, count, out);
}

}  // namespace detail

/// Narrow <=> every vertex is within distance one of every longest shortest
/// path. Defined for connected graphs only.
inline bool is_narrow(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0 || !is_connected(g))
    throw std::invalid_argument("is_narrow: graph must be connected and nonempty");
  if (n == 1) return true;
  const auto dist = distances(g);
  int diam = 0;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) diam = std::max(diam, dist[u][v]);
  long long count = 0;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      if (dist[u][v] != diam) continue;
      std::vector<std::uint32_t> paths;
      detail::enumerate_shortest_paths(g, dist, u, v, 1u << (u - 1), u, count, paths);
      for (std::uint32_t p : paths)
        for (int w = 1; w <= n; ++w) {
          bool near = false;
          for (std::uint32_t m = p; m && !near; m &= m - 1)
            if (dist[w][std::countr_zero(m) + 1] <= 1) near = true;
          if (!near) return false;
        }
    }
  return true;
}

/// Closed <=> every connected component is chordal, claw-free and narrow.
inline bool is_closed(const Graph& g) {
  for (std::uint32_t comp : component_masks(g)) {
    const Graph c = induced_subgraph_mask(g, comp);
    if (!is_chordal(c) || !is_claw_free(c) || !is_narrow(c)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Closed labelings and the bipartite initial-ideal graph.

/// A vertex permutation certifying closedness: order[k-1] is the vertex that
/// receives label k (proper-interval order).
struct ClosedLabeling {
  std::vector<int> order;

  /// position (new label) of each original vertex, 1-based.
  std::vector<int> positions() const {
    std::vector<int> pos(order.size() + 1, 0);
    for (std::size_t k = 0; k < order.size(); ++k)
      pos[order[k]] = static_cast<int>(k) + 1;
    return pos;
  }
};

/// Checks the proper-interval condition: for relabeled a < b < c, edges
/// {a,b},{a,c} force {b,c}, and edges {a,c},{b,c} force {a,b}.
inline bool is_valid_closed_labeling(const Graph& g, const ClosedLabeling& l) {
  const int n = g.vertex_count();
  if (static_cast<int>(l.order.size()) != n) return false;
  std::vector<bool> seen(n + 1, false);
  for (int v : l.order) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = true;
  }
  auto edge = [&](int a, int b) { return g.has_edge(l.order[a - 1], l.order[b - 1]); };
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c) {
        if (edge(a, b) && edge(a, c) && !edge(b, c)) return false;
        if (edge(a, c) && edge(b, c) && !edge(a, b)) return false;
      }
  return true;
}

namespace detail {

inline bool closed_labeling_dfs(const Graph& g, std::vector<int>& order,
                                std::uint32_t used) {
  const int n = g.vertex_count();
  const int p = static_cast<int>(order.size());
  if (p == n) return true;
  for (int v = 1; v <= n; ++v) {
    const std::uint32_t bit = 1u << (v - 1);
    if (used & bit) continue;
    order.push_back(v);
    // check the triples whose largest label is the new position p+1
    bool ok = true;
    auto edge = [&](int a, int b) { return g.has_edge(order[a - 1], order[b - 1]); };
    const int c = p + 1;
    for (int a = 1; a < c && ok; ++a)
      for (int b = a + 1; b < c && ok; ++b) {
        if (edge(a, b) && edge(a, c) && !edge(b, c)) ok = false;
        if (edge(a, c) && edge(b, c) && !edge(a, b)) ok = false;
      }
    if (ok && closed_labeling_dfs(g, order, used | bit)) return true;
    order.pop_back();
  }
  return false;
}

}  // namespace detail

/// Exhaustive lowest-index-first search for a proper-interval labeling.
/// Deterministic; returns nullopt iff the graph is not closed.
inline std::optional<ClosedLabeling> find_closed_labeling(const Graph& g) {
  std::vector<int> order;
  order.reserve(g.vertex_count());
  if (!detail::closed_labeling_dfs(g, order, 0)) return std::nullopt;
  return ClosedLabeling{std::move(order)};
}

/// Bipartite graph in_<(G) on X = {x_1..x_n}, Y = {y_1..y_n}: its edge ideal
/// is the lex initial ideal of J_G under a closed labeling. An edge (i,j)
/// with i < j stands for {x_i, y_j}.
struct BipartiteInitialGraph {
  int base_n = 0;
  std::vector<std::pair<int, int>> edges;

  /// Plain graph on 2n vertices: x_i -> i, y_j -> n + j.
  Graph to_graph() const {
    Graph g(2 * base_n);
    for (auto [i, j] : edges) g.add_edge(i, base_n + j);
    return g;
  }
};

inline BipartiteInitialGraph in_graph(const Graph& g, const ClosedLabeling& l) {
  if (!is_valid_closed_labeling(g, l))
    throw std::invalid_argument("in_graph: labeling is not a closed labeling for G");
  const auto pos = l.positions();
  BipartiteInitialGraph h;
  h.base_n = g.vertex_count();
  for (auto [u, v] : g.edges()) {
    const int a = std::min(pos[u], pos[v]);
    const int b = std::max(pos[u], pos[v]);
    h.edges.emplace_back(a, b);
  }
  std::sort(h.edges.begin(), h.edges.end());
  return h;
}

}  // namespace bek
