#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bek {

/// C(n,k), zero outside 0 <= k <= n. Keeps the closed-form Betti formulas
/// total without special-casing.
inline long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Sparse graded Betti table: (homological degree i, internal degree j) ->
/// count. The toolkit's canonical convention is the table of a quotient S/I,
/// with entry (0,0) = 1; ideal-indexed tables (one homological shift down)
/// use the same type via the explicit shift operations below.
class BettiTable {
 public:
  using Key = std::pair<int, int>;

  BettiTable() = default;

  /// Table of S itself: the tensor identity {(0,0): 1}.
  static BettiTable quotient_unit() {
    BettiTable t;
    t.set(0, 0, 1);
    return t;
  }

  long long at(int i, int j) const {
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
  }

  void set(int i, int j, long long count) {
    if (count < 0) throw std::invalid_argument("BettiTable: negative count");
    if (count == 0)
      entries_.erase({i, j});
    else
      entries_[{i, j}] = count;
  }

  void add(int i, int j, long long count) { set(i, j, at(i, j) + count); }

  const std::map<Key, long long>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Max homological degree with a nonzero entry; -1 for the empty table.
  int pd() const {
    int m = -1;
    for (const auto& [k, c] : entries_) m = std::max(m, k.first);
    return m;
  }

  /// Max j - i over nonzero entries; -1 for the empty table.
  int reg() const {
    int m = -1;
    for (const auto& [k, c] : entries_)
      m = std::max(m, k.second - k.first);
    return m;
  }

  bool operator==(const BettiTable&) const = default;

 private:
  std::map<Key, long long> entries_;
};

/// beta_{i,j}(I) = beta_{i+1,j}(S/I): drop (0,0), shift i down by one.
inline BettiTable ideal_table_from_quotient(const BettiTable& t) {
  BettiTable out;
  for (const auto& [k, c] : t.entries()) {
    if (k.first == 0) continue;
    out.set(k.first - 1, k.second, c);
  }
  return out;
}

inline BettiTable quotient_table_from_ideal(const BettiTable& t) {
  BettiTable out = BettiTable::quotient_unit();
  for (const auto& [k, c] : t.entries()) out.set(k.first + 1, k.second, c);
  return out;
}

/// Convolution of two quotient tables (the Betti table of a tensor product
/// of resolutions); pd and reg are additive under it.
inline BettiTable tensor_product(const BettiTable& a, const BettiTable& b) {
  BettiTable out;
  for (const auto& [ka, ca] : a.entries())
    for (const auto& [kb, cb] : b.entries())
      out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

/// Eagon-Northcott table of S/J_{K_m}: (i, i+1) = i*C(m, i+1) for i >= 1.
inline BettiTable betti_complete(int m) {
  if (m < 1) throw std::invalid_argument("betti_complete: need m >= 1");
  BettiTable t = BettiTable::quotient_unit();
  for (int i = 1; i <= m - 1; ++i) t.set(i, i + 1, i * binomial(m, i + 1));
  return t;
}

/// Koszul table of S/J_{P_n}: (i, 2i) = C(n-1, i).
inline BettiTable betti_path(int n) {
  if (n < 1) throw std::invalid_argument("betti_path: need n >= 1");
  BettiTable t;
  for (int i = 0; i <= n - 1; ++i) t.set(i, 2 * i, binomial(n - 1, i));
  return t;
}

/// One free-cut-edge attachment: multiplies the Betti polynomial by 1 + p q^2,
/// i.e. tensoring with the table of S/J_{K_2}. pd and reg each grow by one.
inline BettiTable attach_free_cut_edge(const BettiTable& t) {
  return tensor_product(t, betti_path(2));
}

/// Closed-form table of S/J for the k-handle lollipop L_{m,t_1..t_k}; depends
/// only on m and t = sum t_i. pd = m+t-1, reg = t+1.
inline BettiTable betti_lollipop(int m, const std::vector<int>& handles) {
  if (m < 2) throw std::invalid_argument("betti_lollipop: need m >= 2");
  const int k = static_cast<int>(handles.size());
  if (k < 1 || k > m)
    throw std::invalid_argument("betti_lollipop: need 1 <= k <= m handles");
  long long t = 0;
  for (int h : handles) {
    if (h < 1) throw std::invalid_argument("betti_lollipop: handle lengths must be >= 1");
    t += h;
  }
  BettiTable out = BettiTable::quotient_unit();
  for (int i = 1; i <= m - 1 + t; ++i) {
    for (int j = 1; j <= i - 1; ++j)
      out.add(i, i + j, (i - j + 1) * binomial(m, i - j + 2) * binomial(t, j - 1));
    out.add(i, 2 * i, binomial(t, i - 1) * binomial(m, 2) + binomial(t, i));
  }
  return out;
}

/// Entrywise upper bound on the ideal table of J_G for a cut edge e,
/// bound(i,j) = beta_{i,j}(J_{G\e}) + beta_{i-1,j-2}(J_{(G\e)_e}) for i >= 1,
/// together with the pd/reg bounds. Inputs are quotient tables; the bound
/// table is ideal-indexed.
struct CutEdgeBound {
  BettiTable ideal_bound;
  int pd_bound;
  int reg_bound;
};

inline CutEdgeBound cut_edge_upper_bound(const BettiTable& quotient_g_minus_e,
                                         const BettiTable& quotient_ge) {
  const BettiTable a = ideal_table_from_quotient(quotient_g_minus_e);
  const BettiTable b = ideal_table_from_quotient(quotient_ge);
  CutEdgeBound out;
  for (const auto& [k, c] : a.entries())
    if (k.first >= 1) out.ideal_bound.add(k.first, k.second, c);
  for (const auto& [k, c] : b.entries())
    out.ideal_bound.add(k.first + 1, k.second + 2, c);
  out.pd_bound = std::max(a.pd(), b.pd() + 1);
  out.reg_bound = std::max(a.reg(), b.reg() + 1);
  return out;
}

/// Witness of impurity: a homological degree carrying two internal degrees.
struct ImpurityWitness {
  int i;
  int j_low;
  int j_high;
};

/// Pure <=> every homological degree carries at most one internal degree.
inline std::optional<ImpurityWitness> purity_witness(const BettiTable& t) {
  int cur_i = -1, cur_j = 0;
  for (const auto& [k, c] : t.entries()) {
    if (k.first == cur_i) return ImpurityWitness{cur_i, cur_j, k.second};
    cur_i = k.first;
    cur_j = k.second;
  }
  return std::nullopt;
}

inline bool is_pure(const BettiTable& t) { return !purity_witness(t).has_value(); }

}  // namespace bek
