#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bek/graph.hpp"
#include "bek/strand.hpp"

namespace bek {

// ---------------------------------------------------------------------------
// Structural recognizers.

inline bool is_path_graph(const Graph& g) {
  return is_connected(g) && detail::is_path_component(g);
}

/// Connected complete bipartite graph (parts recovered by 2-coloring).
inline bool is_complete_bipartite_graph(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2 || !is_connected(g)) return false;
  std::vector<int> color(n + 1, -1);
  std::vector<int> stack{1};
  color[1] = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (color[w] == -1) {
        color[w] = 1 - color[v];
        stack.push_back(w);
      } else if (color[w] == color[v]) {
        return false;
      }
    }
  }
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (color[u] != color[v] && !g.has_edge(u, v)) return false;
  return true;
}

inline bool has_isolated_vertex(const Graph& g) {
  for (int v = 1; v <= g.vertex_count(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Induced-pattern search.

namespace detail {

inline bool graphs_isomorphic_small(const Graph& a, const Graph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    bool ok = true;
    for (int u = 1; u <= n && ok; ++u)
      for (int v = u + 1; v <= n && ok; ++v)
        if (a.has_edge(u, v) != b.has_edge(perm[u - 1], perm[v - 1])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline void subsets_of_size(int n, int k,
                            const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> pick(k);
  std::function<bool(int, int)> rec = [&](int start, int depth) -> bool {
    if (depth == k) return visit(pick);
    for (int v = start; v <= n - (k - depth) + 1; ++v) {
      pick[depth] = v;
      if (rec(v + 1, depth + 1)) return true;
    }
    return false;
  };
  rec(1, 0);
}

}  // namespace detail

/// First vertex set (lexicographically) inducing a subgraph isomorphic to the
/// pattern; patterns are tiny (<= 5 vertices), so brute force is fine.
inline std::optional<std::vector<int>> find_induced_pattern(const Graph& g,
                                                            const Graph& pattern) {
  const int k = pattern.vertex_count();
  if (k > g.vertex_count()) return std::nullopt;
  std::optional<std::vector<int>> found;
  detail::subsets_of_size(g.vertex_count(), k, [&](const std::vector<int>& w) {
    if (detail::graphs_isomorphic_small(induced_subgraph(g, w), pattern)) {
      found = w;
      return true;
    }
    return false;
  });
  return found;
}

/// First induced cycle of length >= 5 (a subset inducing a connected
/// 2-regular subgraph), smallest length first.
inline std::optional<std::vector<int>> find_induced_long_cycle(const Graph& g) {
  for (int m = 5; m <= g.vertex_count(); ++m) {
    std::optional<std::vector<int>> found;
    detail::subsets_of_size(g.vertex_count(), m, [&](const std::vector<int>& w) {
      const Graph h = induced_subgraph(g, w);
      if (h.edge_count() != m || !is_connected(h)) return false;
      for (int v = 1; v <= m; ++v)
        if (h.degree(v) != 2) return false;
      found = w;
      return true;
    });
    if (found) return found;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// The pure-resolution trichotomy.

enum class PureVerdict { Complete, CompleteBipartite, DisjointPaths, NotPure };

struct PureClass {
  PureVerdict verdict = PureVerdict::NotPure;
  std::string hint;  // nonempty only for NotPure, and only when catalogued
};

inline const char* to_string(PureVerdict v) {
  switch (v) {
    case PureVerdict::Complete: return "Complete";
    case PureVerdict::CompleteBipartite: return "CompleteBipartite";
    case PureVerdict::DisjointPaths: return "DisjointPaths";
    case PureVerdict::NotPure: return "NotPure";
  }
  return "?";
}

enum class ObstructionKind {
  InducedLongCycle,        // induced C_m, m >= 5
  CyclePlusPendant,        // induced C_4 with one pendant vertex
  SubdividedClaw,          // induced tree containing both P_4 and K_{1,3}
  IncompatibleComponents,  // component pair failing the degree-compatibility test
  TriangleInNonCompleteComponent,
};

struct Obstruction {
  ObstructionKind kind;
  std::vector<int> vertices;

  std::string describe() const {
    switch (kind) {
      case ObstructionKind::InducedLongCycle: return "induced C_m, m>=5";
      case ObstructionKind::CyclePlusPendant: return "induced C_4 plus pendant";
      case ObstructionKind::SubdividedClaw: return "induced P_4 and K_{1,3}";
      case ObstructionKind::IncompatibleComponents: return "incompatible components";
      case ObstructionKind::TriangleInNonCompleteComponent:
        return "triangle in non-complete component";
    }
    return "?";
  }
};

namespace detail {

// C_4 with a pendant vertex attached (the 5-vertex obstruction graph).
inline Graph cycle_plus_pendant_pattern() {
  Graph h = make_cycle(4);
  Graph out(5);
  for (auto [u, v] : h.edges()) out.add_edge(u, v);
  out.add_edge(1, 5);
  return out;
}

// Claw with one edge subdivided: the unique 5-vertex tree containing both an
// induced P_4 and an induced K_{1,3}.
inline Graph subdivided_claw_pattern() {
  Graph out(5);
  out.add_edge(1, 2);
  out.add_edge(1, 3);
  out.add_edge(1, 4);
  out.add_edge(4, 5);
  return out;
}

}  // namespace detail

/// Best-effort concrete witness for a NotPure verdict; nullopt when no
/// catalogued pattern matches (the verdict stands regardless).
inline std::optional<Obstruction> obstruction_scan(const Graph& g) {
  if (auto w = find_induced_long_cycle(g))
    return Obstruction{ObstructionKind::InducedLongCycle, *w};
  if (auto w = find_induced_pattern(g, detail::cycle_plus_pendant_pattern()))
    return Obstruction{ObstructionKind::CyclePlusPendant, *w};
  if (auto w = find_induced_pattern(g, detail::subdivided_claw_pattern()))
    return Obstruction{ObstructionKind::SubdividedClaw, *w};

  const auto comps = component_masks(g);
  if (comps.size() >= 2) {
    // A pure disjoint union forces degree sequences d_i = i*d_1 on every
    // component, which only Koszul (path) tables satisfy. Any pure-class
    // non-path component paired with anything else is a witness.
    for (std::size_t a = 0; a < comps.size(); ++a) {
      const Graph ca = induced_subgraph_mask(g, comps[a]);
      if (detail::is_path_component(ca)) continue;
      if (!is_complete_graph(ca) && !is_complete_bipartite_graph(ca)) continue;
      const std::size_t b = (a == 0) ? 1 : 0;
      std::vector<int> verts;
      for (std::uint32_t m = comps[a] | comps[b]; m; m &= m - 1)
        verts.push_back(std::countr_zero(m) + 1);
      return Obstruction{ObstructionKind::IncompatibleComponents, verts};
    }
  }
  for (std::uint32_t comp : comps) {
    const Graph c = induced_subgraph_mask(g, comp);
    if (is_complete_graph(c) || is_triangle_free(c)) continue;
    // locate one triangle
    for (int u = 1; u <= c.vertex_count(); ++u)
      for (int v = u + 1; v <= c.vertex_count(); ++v)
        for (int w = v + 1; w <= c.vertex_count(); ++w)
          if (c.has_edge(u, v) && c.has_edge(u, w) && c.has_edge(v, w)) {
            std::vector<int> orig;
            for (std::uint32_t m = comp; m; m &= m - 1)
              orig.push_back(std::countr_zero(m) + 1);
            return Obstruction{ObstructionKind::TriangleInNonCompleteComponent,
                               {orig[u - 1], orig[v - 1], orig[w - 1]}};
          }
  }
  return std::nullopt;
}

/// Whether J_G has a linear resolution: exactly the complete graphs.
/// Isolated vertices are rejected (the theorem's hypothesis).
inline bool has_linear_resolution(const Graph& g) {
  if (g.vertex_count() == 0 || has_isolated_vertex(g))
    throw std::invalid_argument("has_linear_resolution: graph has an isolated vertex");
  return is_complete_graph(g) && is_connected(g);
}

/// The pure-resolution trichotomy as a decision procedure. Overlaps resolved
/// by precedence Complete > CompleteBipartite > DisjointPaths.
inline PureClass classify_pure(const Graph& g) {
  if (g.vertex_count() == 0 || has_isolated_vertex(g))
    throw std::invalid_argument("classify_pure: graph has an isolated vertex");
  if (is_connected(g)) {
    if (is_complete_graph(g)) return {PureVerdict::Complete, {}};
    if (is_complete_bipartite_graph(g)) return {PureVerdict::CompleteBipartite, {}};
  }
  bool all_paths = true;
  for (std::uint32_t comp : component_masks(g))
    if (!detail::is_path_component(induced_subgraph_mask(g, comp))) {
      all_paths = false;
      break;
    }
  if (all_paths) return {PureVerdict::DisjointPaths, {}};
  PureClass out{PureVerdict::NotPure, {}};
  if (auto w = obstruction_scan(g)) out.hint = w->describe();
  return out;
}

}  // namespace bek
