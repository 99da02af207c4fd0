#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <gmpxx.h>

#include "bek/graph.hpp"

namespace bek {

/// Face-listed simplicial complex on ambient vertices 1..n, represented by
/// its facets (vertex bitmasks). A facet mask of 0 encodes the complex {∅};
/// an empty facet list is the void complex.
struct SimplicialComplex {
  int n = 0;
  std::vector<std::uint32_t> facets;
};

/// Independence complex of H: faces are the independent vertex sets, i.e.
/// facets are the maximal cliques of the complement.
inline SimplicialComplex independence_complex(const Graph& h) {
  SimplicialComplex c;
  c.n = h.vertex_count();
  c.facets = maximal_clique_masks(complement(h));
  return c;
}

/// dimension d >= -1 -> rank of reduced homology over Q; zero ranks omitted.
using HomologyRanks = std::map<int, long long>;

inline long long homology_rank_at(const HomologyRanks& r, int d) {
  auto it = r.find(d);
  return it == r.end() ? 0 : it->second;
}

/// Rank over Q by fraction-free (Bareiss) elimination on exact integers.
inline long long integer_matrix_rank(std::vector<std::vector<mpz_class>> m) {
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  long long rank = 0;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
    ++rank;
  }
  return rank;
}

/// Rank over the prime field F_p by ordinary Gaussian elimination.
inline long long matrix_rank_mod_p(std::vector<std::vector<long long>> m,
                                   long long p) {
  if (p < 2) throw std::invalid_argument("matrix_rank_mod_p: need a prime p >= 2");
  const std::size_t rows = m.size();
  if (rows == 0) return 0;
  const std::size_t cols = m[0].size();
  for (auto& row : m)
    for (auto& x : row) x = ((x % p) + p) % p;
  long long rank = 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      // eliminate without inverses: row_i <- pivot*row_i - m[i][c]*row_r
      const long long f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = ((m[r][c] * m[i][j] - f * m[r][j]) % p + p) % p;
    }
    ++r;
    ++rank;
  }
  return rank;
}

namespace detail {

/// Boundary-matrix rank between consecutive face layers. Rows are (d-1)-faces,
/// columns d-faces; removing the t-th smallest vertex carries sign (-1)^t.
/// prime = 0 means rationals; a prime p means ranks over F_p.
inline long long boundary_rank(const std::vector<std::uint32_t>& lower,
                               const std::vector<std::uint32_t>& upper,
                               long long prime = 0) {
  if (lower.empty() || upper.empty()) return 0;
  std::unordered_map<std::uint32_t, std::size_t> row_of;
  row_of.reserve(lower.size() * 2);
  for (std::size_t i = 0; i < lower.size(); ++i) row_of[lower[i]] = i;
  std::vector<std::vector<mpz_class>> mat(
      lower.size(), std::vector<mpz_class>(upper.size(), 0));
  for (std::size_t col = 0; col < upper.size(); ++col) {
    int t = 0;
    for (std::uint32_t m = upper[col]; m; m &= m - 1, ++t) {
      const std::uint32_t face = upper[col] & ~(m & -m);
      mat[row_of.at(face)][col] = (t % 2 == 0) ? 1 : -1;
    }
  }
  if (prime != 0) {
    std::vector<std::vector<long long>> small(mat.size());
    for (std::size_t i = 0; i < mat.size(); ++i)
      for (const mpz_class& x : mat[i]) small[i].push_back(x.get_si());
    return matrix_rank_mod_p(std::move(small), prime);
  }
  return integer_matrix_rank(std::move(mat));
}

/// Reduced homology ranks from the full face list (masks, including 0 for the
/// empty face). faces_by_card[k] holds the k-vertex faces.
inline HomologyRanks homology_from_face_layers(
    const std::vector<std::vector<std::uint32_t>>& faces_by_card,
    long long prime = 0) {
  HomologyRanks out;
  if (faces_by_card.empty() || faces_by_card[0].empty()) return out;  // void
  const int top = static_cast<int>(faces_by_card.size()) - 1;
  // rank of boundary map C_d -> C_{d-1}; layer index k = d+1
  std::vector<long long> brank(top + 2, 0);
  for (int k = 1; k <= top; ++k)
    brank[k] = boundary_rank(faces_by_card[k - 1], faces_by_card[k], prime);
  for (int k = 0; k <= top; ++k) {
    const long long dim_c = static_cast<long long>(faces_by_card[k].size());
    const long long h = dim_c - brank[k] - (k + 1 <= top ? brank[k + 1] : 0);
    if (h != 0) out[k - 1] = h;
  }
  return out;
}

}  // namespace detail

/// Reduced simplicial homology ranks via exact boundary-matrix ranks.
/// Default (prime = 0) works over Q; pass a prime p for F_p coefficients.
/// The prime-field mode exists for torsion experiments only; every built-in
/// formula and cross-check runs over Q.
inline HomologyRanks reduced_homology_ranks(const SimplicialComplex& c,
                                            long long prime = 0) {
  if (c.facets.empty()) return {};
  std::unordered_set<std::uint32_t> seen;
  int top = 0;
  for (std::uint32_t facet : c.facets) {
    // enumerate all subsets of the facet
    std::uint32_t sub = facet;
    while (true) {
      seen.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & facet;
    }
    top = std::max(top, std::popcount(facet));
  }
  std::vector<std::vector<std::uint32_t>> layers(top + 1);
  for (std::uint32_t f : seen) layers[std::popcount(f)].push_back(f);
  return detail::homology_from_face_layers(layers, prime);
}

/// Alternating sum of homology ranks equals the reduced Euler characteristic;
/// handy as a cross-check against face counts.
inline long long reduced_euler_characteristic(const SimplicialComplex& c) {
  std::unordered_set<std::uint32_t> seen;
  for (std::uint32_t facet : c.facets) {
    std::uint32_t sub = facet;
    while (true) {
      seen.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & facet;
    }
  }
  long long chi = 0;
  for (std::uint32_t f : seen)
    chi += (std::popcount(f) % 2 == 0) ? -1 : 1;  // face of dim d contributes (-1)^d
  return chi;
}

}  // namespace bek
