#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bek {

/// Finite simple graph on labeled vertices 1..n (n <= 32).
/// Adjacency is stored as per-vertex bitmasks; bit v-1 stands for vertex v.
/// Values are immutable in practice: all toolkit operations take graphs by
/// const reference and return new graphs.
class Graph {
 public:
  static constexpr int kMaxVertices = 32;

  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw std::invalid_argument("Graph: vertex count out of range [0,32]");
    adj_.assign(static_cast<std::size_t>(n), 0u);
  }

  int vertex_count() const { return n_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (adj_[u - 1] >> (v - 1)) & 1u;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    adj_[u - 1] |= 1u << (v - 1);
    adj_[v - 1] |= 1u << (u - 1);
  }

  void remove_edge(int u, int v) {
    if (!has_edge(u, v)) throw std::invalid_argument("Graph: no such edge");
    adj_[u - 1] &= ~(1u << (v - 1));
    adj_[v - 1] &= ~(1u << (u - 1));
  }

  /// Neighbor bitmask of v; bit k set means vertex k+1 is adjacent.
  std::uint32_t neighbor_mask(int v) const {
    check_vertex(v);
    return adj_[v - 1];
  }

  int degree(int v) const { return std::popcount(neighbor_mask(v)); }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (std::uint32_t m = neighbor_mask(v); m; m &= m - 1)
      out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  /// Canonical edge list: pairs {u,v} with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 1; u <= n_; ++u)
      for (int v = u + 1; v <= n_; ++v)
        if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
  }

  int edge_count() const {
    int total = 0;
    for (std::uint32_t m : adj_) total += std::popcount(m);
    return total / 2;
  }

  std::uint32_t full_mask() const {
    return n_ == 32 ? ~0u : ((1u << n_) - 1u);
  }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 1 || v > n_)
      throw std::invalid_argument("Graph: vertex " + std::to_string(v) +
                                  " out of range 1.." + std::to_string(n_));
  }

  int n_;
  std::vector<std::uint32_t> adj_;
};

// ---------------------------------------------------------------------------
// Standard constructors (canonical labelings).

inline Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("make_path: need n >= 1");
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("make_cycle: need n >= 3");
  Graph g = make_path(n);
  g.add_edge(n, 1);
  return g;
}

inline Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("make_complete: need n >= 1");
  Graph g(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

/// Complete bipartite graph with parts {1..a} and {a+1..a+b}.
inline Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    throw std::invalid_argument("make_complete_bipartite: need a,b >= 1");
  Graph g(a + b);
  for (int u = 1; u <= a; ++u)
    for (int v = a + 1; v <= a + b; ++v) g.add_edge(u, v);
  return g;
}

/// k-handle lollipop: K_m on vertices 1..m; handle i is a path of t_i new
/// vertices whose first vertex is joined to clique vertex i.
inline Graph make_k_handle_lollipop(int m, const std::vector<int>& handles) {
  if (m < 2) throw std::invalid_argument("lollipop: need m >= 2");
  const int k = static_cast<int>(handles.size());
  if (k < 1 || k > m)
    throw std::invalid_argument("lollipop: need 1 <= k <= m handles");
  int total = m;
  for (int t : handles) {
    if (t < 1) throw std::invalid_argument("lollipop: handle lengths must be >= 1");
    total += t;
  }
  Graph g(total);
  for (int u = 1; u <= m; ++u)
    for (int v = u + 1; v <= m; ++v) g.add_edge(u, v);
  int next = m + 1;
  for (int i = 0; i < k; ++i) {
    g.add_edge(i + 1, next);
    for (int j = 1; j < handles[i]; ++j) {
      g.add_edge(next, next + 1);
      ++next;
    }
    ++next;
  }
  return g;
}

// ---------------------------------------------------------------------------
// Basic graph plumbing.

/// Induced subgraph on W (labels relabeled 1..|W| following ascending order).
inline Graph induced_subgraph(const Graph& g, std::vector<int> w) {
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  for (int v : w)
    if (v < 1 || v > g.vertex_count())
      throw std::invalid_argument("induced_subgraph: unknown vertex");
  Graph h(static_cast<int>(w.size()));
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (g.has_edge(w[a], w[b]))
        h.add_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
  return h;
}

inline Graph induced_subgraph_mask(const Graph& g, std::uint32_t mask) {
  std::vector<int> w;
  for (std::uint32_t m = mask; m; m &= m - 1) w.push_back(std::countr_zero(m) + 1);
  return induced_subgraph(g, w);
}

inline Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  Graph h(n);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

/// Connected component vertex masks, ordered by smallest member.
inline std::vector<std::uint32_t> component_masks(const Graph& g) {
  std::vector<std::uint32_t> comps;
  std::uint32_t seen = 0;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const std::uint32_t bit = 1u << (v - 1);
    if (seen & bit) continue;
    std::uint32_t comp = bit, frontier = bit;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t m = frontier; m; m &= m - 1)
        next |= g.neighbor_mask(std::countr_zero(m) + 1);
      frontier = next & ~comp;
      comp |= frontier;
    }
    comps.push_back(comp);
    seen |= comp;
  }
  return comps;
}

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t comp : component_masks(g)) {
    std::vector<int> verts;
    for (std::uint32_t m = comp; m; m &= m - 1)
      verts.push_back(std::countr_zero(m) + 1);
    out.push_back(std::move(verts));
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  return g.vertex_count() <= 1 || component_masks(g).size() == 1;
}

/// All-pairs distances by BFS; -1 marks unreachable pairs. 1-based indexing,
/// row/column 0 unused.
inline std::vector<std::vector<int>> distances(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, -1));
  for (int s = 1; s <= n; ++s) {
    d[s][s] = 0;
    std::uint32_t seen = 1u << (s - 1), frontier = seen;
    int depth = 0;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t m = frontier; m; m &= m - 1)
        next |= g.neighbor_mask(std::countr_zero(m) + 1);
      frontier = next & ~seen;
      seen |= frontier;
      ++depth;
      for (std::uint32_t m = frontier; m; m &= m - 1)
        d[s][std::countr_zero(m) + 1] = depth;
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Cliques.

namespace detail {

inline void bron_kerbosch(const Graph& g, std::uint32_t r, std::uint32_t p,
                          std::uint32_t x, std::vector<std::uint32_t>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  // pivot: vertex of P|X with most neighbors in P
  int pivot = -1, best = -1;
  for (std::uint32_t m = p | x; m; m &= m - 1) {
    const int v = std::countr_zero(m) + 1;
    const int cnt = std::popcount(p & g.neighbor_mask(v));
    if (cnt > best) best = cnt, pivot = v;
  }
  std::uint32_t cand = p & ~g.neighbor_mask(pivot);
  for (std::uint32_t m = cand; m; m &= m - 1) {
    const int v = std::countr_zero(m) + 1;
    const std::uint32_t bit = 1u << (v - 1);
    bron_kerbosch(g, r | bit, p & g.neighbor_mask(v), x & g.neighbor_mask(v), out);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace detail

inline std::vector<std::uint32_t> maximal_clique_masks(const Graph& g) {
  std::vector<std::uint32_t> out;
  if (g.vertex_count() == 0) return out;
  detail::bron_kerbosch(g, 0, g.full_mask(), 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t c : maximal_clique_masks(g)) {
    std::vector<int> verts;
    for (std::uint32_t m = c; m; m &= m - 1)
      verts.push_back(std::countr_zero(m) + 1);
    out.push_back(std::move(verts));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// counts[i] = k_i(G), the number of complete subgraphs on i vertices
/// (all cliques, not only maximal ones); counts[0] unused.
struct CliqueCensus {
  std::vector<long long> counts;

  long long k(int i) const {
    if (i < 1 || i >= static_cast<int>(counts.size())) return 0;
    return counts[i];
  }
  int clique_number() const {
    for (int i = static_cast<int>(counts.size()) - 1; i >= 1; --i)
      if (counts[i] > 0) return i;
    return 0;
  }
};

inline CliqueCensus clique_census(const Graph& g) {
  CliqueCensus c;
  c.counts.assign(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  // Extend cliques only by higher-indexed vertices so each is seen once.
  std::function<void(int, std::uint32_t)> rec = [&](int size, std::uint32_t cand) {
    if (size > 0) ++c.counts[size];
    for (std::uint32_t m = cand; m; m &= m - 1) {
      const int v = std::countr_zero(m) + 1;
      const std::uint32_t higher = g.full_mask() & ~((2u << (v - 1)) - 1u);
      rec(size + 1, cand & g.neighbor_mask(v) & higher);
    }
  };
  rec(0, g.full_mask());
  return c;
}

// ---------------------------------------------------------------------------
// Cut edges, free vertices, the reduced graph, and edge transformations.

inline bool is_cut_edge(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("is_cut_edge: no such edge");
  Graph h = g;
  h.remove_edge(u, v);
  return component_masks(h).size() > component_masks(g).size();
}

/// Vertices contained in exactly one facet of the clique complex. Isolated
/// vertices are free (their facet is the singleton).
inline std::vector<int> free_vertices(const Graph& g) {
  const auto cliques = maximal_clique_masks(g);
  std::vector<int> out;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    const std::uint32_t bit = 1u << (v - 1);
    int hits = 0;
    for (std::uint32_t c : cliques)
      if (c & bit) ++hits;
    if (hits == 1) out.push_back(v);
  }
  return out;
}

inline bool is_free_vertex(const Graph& g, int v) {
  const auto fv = free_vertices(g);
  return std::find(fv.begin(), fv.end(), v) != fv.end();
}

inline bool is_free_cut_edge(const Graph& g, int u, int v) {
  if (!is_cut_edge(g, u, v)) return false;
  Graph h = g;
  h.remove_edge(u, v);
  return is_free_vertex(h, u) && is_free_vertex(h, v);
}

inline std::vector<std::pair<int, int>> free_cut_edges(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : g.edges())
    if (is_free_cut_edge(g, u, v)) out.emplace_back(u, v);
  return out;
}

/// R(G): G minus all its free cut edges, computed in one simultaneous pass
/// (not iterated to a fixed point).
inline Graph reduced_graph(const Graph& g) {
  Graph h = g;
  for (auto [u, v] : free_cut_edges(g)) h.remove_edge(u, v);
  return h;
}

/// Free-cut-edge switching: G' = (G \ e_remove) + e_add, valid only when
/// e_remove is a free cut edge of G and e_add is a free cut edge of G'.
inline Graph switch_free_cut_edge(const Graph& g, std::pair<int, int> e_remove,
                                  std::pair<int, int> e_add) {
  auto [ru, rv] = e_remove;
  auto [au, av] = e_add;
  if (!g.has_edge(ru, rv))
    throw std::invalid_argument("switch: e_remove is not an edge");
  if (!is_free_cut_edge(g, ru, rv))
    throw std::invalid_argument("switch: e_remove is not a free cut edge");
  if (au == av) throw std::invalid_argument("switch: e_add endpoints coincide");
  Graph h = g;
  h.remove_edge(ru, rv);
  if (h.has_edge(au, av))
    throw std::invalid_argument("switch: e_add already present in G \\ e_remove");
  h.add_edge(au, av);
  if (!is_free_cut_edge(h, au, av))
    throw std::invalid_argument("switch: e_add is not a free cut edge of the result");
  return h;
}

/// G_e completion for a non-edge e = {v,w}: adds every pair inside N(v) and
/// every pair inside N(w).
inline Graph ge_completion(const Graph& g, std::pair<int, int> e) {
  auto [v, w] = e;
  if (v == w) throw std::invalid_argument("ge_completion: endpoints coincide");
  if (g.has_edge(v, w)) throw std::invalid_argument("ge_completion: e is already an edge");
  Graph h = g;
  for (int end : {v, w}) {
    const auto nb = g.neighbors(end);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b)
        if (!h.has_edge(nb[a], nb[b])) h.add_edge(nb[a], nb[b]);
  }
  return h;
}

/// Disjoint union, second operand's labels shifted past the first's.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.vertex_count() + b.vertex_count());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  const int off = a.vertex_count();
  for (auto [u, v] : b.edges()) g.add_edge(u + off, v + off);
  return g;
}

}  // namespace bek
