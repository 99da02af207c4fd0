#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "bek/graph.hpp"

namespace bek {

namespace detail {

inline int pair_bit(int n, int u, int v) {
  // lex index of pair (u,v), u < v, both 0-based
  return u * n - u * (u + 1) / 2 + (v - u - 1);
}

}  // namespace detail

/// Upper-triangle edge code of the graph under its own labeling.
inline std::uint64_t graph_code(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 11) throw std::invalid_argument("graph_code: n too large for 64-bit code");
  std::uint64_t code = 0;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (g.has_edge(u, v))
        code |= 1ull << detail::pair_bit(n, u - 1, v - 1);
  return code;
}

/// Minimum edge code over all vertex permutations: a canonical form for
/// isomorphism rejection. Brute force; fine at the n <= 8 scale it serves.
inline std::uint64_t canonical_code(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 8) throw std::invalid_argument("canonical_code: n > 8 unsupported");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ull;
  do {
    std::uint64_t code = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.has_edge(u + 1, v + 1)) {
          const int a = std::min(perm[u], perm[v]);
          const int b = std::max(perm[u], perm[v]);
          code |= 1ull << detail::pair_bit(n, a, b);
        }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline Graph graph_from_code(int n, std::uint64_t code) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((code >> detail::pair_bit(n, u, v)) & 1) g.add_edge(u + 1, v + 1);
  return g;
}

/// One representative per isomorphism class of graphs on exactly n vertices,
/// built by extending the (n-1)-vertex classes with every attachment set and
/// deduplicating on canonical codes.
inline std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("nonisomorphic_graphs: need 1 <= n <= 8");
  std::vector<Graph> level{Graph(1)};
  for (int k = 2; k <= n; ++k) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<Graph> next;
    for (const Graph& g : level) {
      for (std::uint32_t attach = 0; attach < (1u << (k - 1)); ++attach) {
        Graph h(k);
        for (auto [u, v] : g.edges()) h.add_edge(u, v);
        for (std::uint32_t m = attach; m; m &= m - 1)
          h.add_edge(std::countr_zero(m) + 1, k);
        const std::uint64_t code = canonical_code(h);
        if (seen.insert(code).second) next.push_back(graph_from_code(k, code));
      }
    }
    level = std::move(next);
  }
  return level;
}

inline std::vector<Graph> nonisomorphic_graphs_up_to(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) {
    auto level = nonisomorphic_graphs(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// Erdos-Renyi sample on n labeled vertices.
inline Graph random_graph(int n, std::mt19937& rng, double p = 0.5) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace bek
