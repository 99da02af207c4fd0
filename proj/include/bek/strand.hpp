#pragma once

#include <map>
#include <optional>

#include "bek/betti_table.hpp"
#include "bek/graph.hpp"

namespace bek {

/// Predicted linear strand of J_G in graphical terms: values[i] =
/// (i+1) * k_{i+2}(G) for i >= 1 and values[0] = k_2(G). TheoremBacked when
/// every component of R(G) is triangle-free or a clique, else Conjectural.
struct StrandPrediction {
  enum class Status { TheoremBacked, Conjectural };

  std::map<int, long long> values;
  Status status = Status::Conjectural;

  long long value(int i) const {
    auto it = values.find(i);
    return it == values.end() ? 0 : it->second;
  }
};

inline bool is_triangle_free(const Graph& g) {
  return clique_census(g).k(3) == 0;
}

inline bool is_complete_graph(const Graph& g) {
  const int n = g.vertex_count();
  return g.edge_count() == n * (n - 1) / 2;
}

inline StrandPrediction strand_prediction(const Graph& g) {
  const CliqueCensus census = clique_census(g);
  StrandPrediction out;
  out.values[0] = census.k(2);
  for (int i = 1; census.k(i + 2) > 0; ++i)
    out.values[i] = static_cast<long long>(i + 1) * census.k(i + 2);
  bool backed = true;
  const Graph r = reduced_graph(g);
  for (std::uint32_t comp : component_masks(r)) {
    const Graph c = induced_subgraph_mask(r, comp);
    if (!is_triangle_free(c) && !is_complete_graph(c)) {
      backed = false;
      break;
    }
  }
  out.status = backed ? StrandPrediction::Status::TheoremBacked
                      : StrandPrediction::Status::Conjectural;
  return out;
}

namespace detail {

inline bool is_path_component(const Graph& c) {
  const int n = c.vertex_count();
  if (n == 1) return true;
  if (c.edge_count() != n - 1) return false;
  for (int v = 1; v <= n; ++v)
    if (c.degree(v) > 2) return false;
  return true;  // connected with n-1 edges and max degree 2
}

}  // namespace detail

/// Exact quotient table of S/J_G when the graph is reachable by the known
/// closed forms: tensor over components, peel free cut edges, and bottom out
/// at complete graphs, paths and isolated vertices. Returns nullopt when no
/// closed form applies.
inline std::optional<BettiTable> formula_table(const Graph& g) {
  const auto comps = component_masks(g);
  if (comps.size() != 1) {
    BettiTable acc = BettiTable::quotient_unit();
    for (std::uint32_t comp : comps) {
      const auto part = formula_table(induced_subgraph_mask(g, comp));
      if (!part) return std::nullopt;
      acc = tensor_product(acc, *part);
    }
    return acc;
  }
  const int n = g.vertex_count();
  if (n == 1) return BettiTable::quotient_unit();
  if (is_complete_graph(g)) return betti_complete(n);
  if (detail::is_path_component(g)) return betti_path(n);
  const auto fce = free_cut_edges(g);
  if (!fce.empty()) {
    Graph h = g;
    h.remove_edge(fce.front().first, fce.front().second);
    const auto rest = formula_table(h);
    if (!rest) return std::nullopt;
    return attach_free_cut_edge(*rest);
  }
  return std::nullopt;
}

}  // namespace bek
