#pragma once

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "bek/betti_table.hpp"
#include "bek/closedness.hpp"
#include "bek/graph.hpp"
#include "bek/simplicial.hpp"
#include "bek/strand.hpp"

namespace bek {

/// Vertex cap for the 2^n subset sum; overridable via BEK_SUBSET_CAP.
inline int hochster_vertex_cap() {
  if (const char* s = std::getenv("BEK_SUBSET_CAP")) {
    const int v = std::atoi(s);
    if (v >= 1) return v;
  }
  return 16;
}

namespace detail {

/// All independent sets of H inside `within`, grouped by cardinality
/// (layers[k] = k-vertex independent sets; layers[0] = {empty set}).
inline std::vector<std::vector<std::uint32_t>> independent_set_layers(
    const Graph& h, std::uint32_t within) {
  std::vector<std::vector<std::uint32_t>> layers(std::popcount(within) + 1);
  std::function<void(std::uint32_t, std::uint32_t)> rec = [&](std::uint32_t cur,
                                                              std::uint32_t rest) {
    layers[std::popcount(cur)].push_back(cur);
    while (rest) {
      const std::uint32_t bit = rest & -rest;
      rest &= rest - 1;
      const int v = std::countr_zero(bit) + 1;
      rec(cur | bit, rest & ~h.neighbor_mask(v));
    }
  };
  rec(0, within);
  while (layers.size() > 1 && layers.back().empty()) layers.pop_back();
  return layers;
}

/// True when some vertex of W is isolated inside H[W]; the restricted
/// independence complex is then a cone and contributes no reduced homology.
inline bool restriction_is_cone(const Graph& h, std::uint32_t w) {
  for (std::uint32_t m = w; m; m &= m - 1) {
    const int v = std::countr_zero(m) + 1;
    if ((h.neighbor_mask(v) & w) == 0) return true;
  }
  return false;
}

}  // namespace detail

/// Full graded Betti table (quotient indexing) of the squarefree monomial
/// edge ideal I(H) over a characteristic-0 field, by Hochster's formula:
/// beta_{i,j}(I) = sum over j-subsets W of dim H~_{j-i-2} of the independence
/// complex restricted to W.
inline BettiTable hochster_betti(const Graph& h, int cap = hochster_vertex_cap()) {
  const int n = h.vertex_count();
  if (n > cap)
    throw std::runtime_error("hochster_betti: vertex count " + std::to_string(n) +
                             " exceeds subset cap " + std::to_string(cap));
  BettiTable out = BettiTable::quotient_unit();
  const std::uint32_t full = h.full_mask();
  for (std::uint32_t w = 1; w <= full; ++w) {
    if (detail::restriction_is_cone(h, w)) continue;
    const int j = std::popcount(w);
    const HomologyRanks ranks =
        detail::homology_from_face_layers(detail::independent_set_layers(h, w));
    for (const auto& [d, r] : ranks) {
      const int i_quotient = j - d - 1;  // ideal degree j-d-2, shifted up
      if (i_quotient >= 1) out.add(i_quotient, j, r);
    }
  }
  return out;
}

/// Linear strand of I(H) only: i -> beta_{i,i+2}(I(H)), each term the rank
/// deficiency of the vertex/edge boundary matrix of the restricted complex
/// (dim H~_0 = |W| - 1 - rank d_1). Cheaper than the full table and still
/// matrix-rank based, independent of the component-counting route below.
inline std::map<int, long long> hochster_strand(const Graph& h,
                                                int cap = hochster_vertex_cap()) {
  const int n = h.vertex_count();
  if (n > cap)
    throw std::runtime_error("hochster_strand: vertex count exceeds subset cap");
  std::map<int, long long> out;
  const std::uint32_t full = h.full_mask();
  for (std::uint32_t w = 1; w <= full; ++w) {
    const int j = std::popcount(w);
    if (j < 2) continue;
    if (detail::restriction_is_cone(h, w)) continue;
    std::vector<std::uint32_t> vertices, edges;
    for (std::uint32_t m = w; m; m &= m - 1) vertices.push_back(m & -m);
    for (std::size_t a = 0; a < vertices.size(); ++a)
      for (std::size_t b = a + 1; b < vertices.size(); ++b) {
        const int u = std::countr_zero(vertices[a]) + 1;
        const int v = std::countr_zero(vertices[b]) + 1;
        if (!h.has_edge(u, v)) edges.push_back(vertices[a] | vertices[b]);
      }
    const long long h0 = j - 1 - detail::boundary_rank(vertices, edges);
    if (h0 > 0) out[j - 2] += h0;
  }
  return out;
}

/// Roth-Van Tuyl linear strand of I(H): beta_{i,i+2}(I(H)) =
/// sum over (i+2)-subsets W of (#components of the complement induced on W) - 1.
inline long long roth_van_tuyl(const Graph& h, int i) {
  if (i < 0) throw std::invalid_argument("roth_van_tuyl: need i >= 0");
  const int size = i + 2;
  const int n = h.vertex_count();
  if (size > n) return 0;
  const Graph hc = complement(h);
  long long total = 0;
  const std::uint32_t full = h.full_mask();
  for (std::uint32_t w = 1; w <= full; ++w) {
    if (std::popcount(w) != size) continue;
    // count components of hc restricted to w
    int comps = 0;
    std::uint32_t left = w;
    while (left) {
      ++comps;
      std::uint32_t comp = left & -left, frontier = comp;
      while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t m = frontier; m; m &= m - 1)
          next |= hc.neighbor_mask(std::countr_zero(m) + 1) & w;
        frontier = next & ~comp;
        comp |= frontier;
      }
      left &= ~comp;
    }
    total += comps - 1;
  }
  return total;
}

/// Per-i comparison of the three routes to the linear strand of a closed
/// graph: Roth-Van Tuyl on in_<(G), the Hochster homology strand of in_<(G),
/// and the graphical prediction (i+1) * k_{i+2}(G).
struct ClosedStrandReport {
  struct Row {
    int i;
    long long roth_van_tuyl;
    long long hochster;
    long long predicted;
  };
  std::vector<Row> rows;
  bool consistent = true;
  BipartiteInitialGraph initial_graph;
};

inline ClosedStrandReport closed_strand_check(const Graph& g) {
  const auto labeling = find_closed_labeling(g);
  if (!labeling) throw std::invalid_argument("closed_strand_check: graph is not closed");
  ClosedStrandReport report;
  report.initial_graph = in_graph(g, *labeling);
  const Graph h = report.initial_graph.to_graph();
  const auto strand = hochster_strand(h);
  const CliqueCensus census = clique_census(g);
  int i_max = std::max(1, census.clique_number() - 2);
  for (const auto& [i, v] : strand) i_max = std::max(i_max, i);
  for (int i = 1; i <= i_max; ++i) {
    ClosedStrandReport::Row row;
    row.i = i;
    row.roth_van_tuyl = roth_van_tuyl(h, i);
    auto it = strand.find(i);
    row.hochster = it == strand.end() ? 0 : it->second;
    row.predicted = static_cast<long long>(i + 1) * census.k(i + 2);
    if (row.roth_van_tuyl != row.hochster || row.hochster != row.predicted)
      report.consistent = false;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace bek
