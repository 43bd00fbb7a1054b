#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "common.hpp"

namespace mcop {

enum class Kind { A, C };

inline std::string kind_name(Kind k) { return k == Kind::A ? "A" : "C"; }

// Poset element (i, j). For kind C the column j may be negative.
struct Elem {
  int i = 0;
  int j = 0;
  friend bool operator==(const Elem&, const Elem&) = default;
};

// The Gelfand-Tsetlin poset of rank n.
//   kind A: elements (i,j) with 1 <= i <= j <= n, (i1,j1) <= (i2,j2) iff
//           i1 <= i2 and j1 <= j2.
//   kind C: elements (i,j) with i in [1,n], j in [i,n] u [-n,-i]; columns are
//           totally ordered 1 < 2 < ... < n < -n < ... < -1 and the poset
//           order compares (i, col rank) componentwise.
// The canonical element order (row, then column rank) is a linear extension;
// every bitmask below indexes elements in this order.
class Poset {
public:
  static Poset build(Kind kind, int n) { return Poset(kind, n); }

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(elems_.size()); }
  const std::vector<Elem>& elements() const { return elems_; }
  const Elem& element(int idx) const { return elems_[idx]; }

  // Rank of a column value in the column order, 1-based.
  int col_rank(int j) const {
    if (kind_ == Kind::A) return j;
    return j > 0 ? j : 2 * n_ + 1 + j;
  }
  // Inverse of col_rank.
  int col_value(int rank) const {
    if (kind_ == Kind::A) return rank;
    return rank <= n_ ? rank : rank - (2 * n_ + 1);
  }

  bool contains(int i, int j) const { return index_.count({i, j}) > 0; }
  int index(int i, int j) const {
    auto it = index_.find({i, j});
    if (it == index_.end())
      throw std::invalid_argument("Poset::index: (" + std::to_string(i) + "," +
                                  std::to_string(j) + ") is not an element");
    return it->second;
  }

  bool less_eq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * size() + b]; }
  bool less_eq(const Elem& a, const Elem& b) const {
    return less_eq(index(a.i, a.j), index(b.i, b.j));
  }

  const std::vector<int>& lower_covers(int idx) const { return lower_covers_[idx]; }
  const std::vector<int>& upper_covers(int idx) const { return upper_covers_[idx]; }

  // Diagonal elements (1,1), ..., (n,n) by index.
  const std::vector<int>& diagonal() const { return diag_; }
  std::uint64_t diagonal_mask() const { return diag_mask_; }
  std::uint64_t full_mask() const { return size() == 64 ? ~0ull : (1ull << size()) - 1; }

  // Domain acted on by pipe-dream permutations: [1..n] for kind A, the signed
  // set N for kind C, in column order.
  std::vector<int> domain_values() const {
    std::vector<int> vals;
    const int m = kind_ == Kind::A ? n_ : 2 * n_;
    for (int r = 1; r <= m; ++r) vals.push_back(col_value(r));
    return vals;
  }
  int domain_size() const { return kind_ == Kind::A ? n_ : 2 * n_; }

  // Number of elements in a longest chain.
  int chain_length() const { return kind_ == Kind::A ? 2 * n_ - 1 : 2 * n_; }

  // Number of strata: |J n A| ranges over 0..n.
  int strata() const { return n_; }

private:
  Poset(Kind kind, int n) : kind_(kind), n_(n) {
    if (n < 2) throw std::invalid_argument("Poset: rank must be at least 2");
    for (int i = 1; i <= n; ++i) {
      for (int j = i; j <= n; ++j) elems_.push_back({i, j});
      if (kind == Kind::C)
        for (int j = -n; j <= -i; ++j) elems_.push_back({i, j});
    }
    // Row blocks are emitted in column-rank order already for kind A; kind C
    // rows list positive columns then negatives, which matches the rank.
    if (size() > 64) throw std::invalid_argument("Poset: more than 64 elements unsupported");
    for (int idx = 0; idx < size(); ++idx) index_[{elems_[idx].i, elems_[idx].j}] = idx;

    leq_.assign(static_cast<std::size_t>(size()) * size(), false);
    for (int a = 0; a < size(); ++a)
      for (int b = 0; b < size(); ++b)
        leq_[static_cast<std::size_t>(a) * size() + b] =
            elems_[a].i <= elems_[b].i && col_rank(elems_[a].j) <= col_rank(elems_[b].j);

    lower_covers_.resize(size());
    upper_covers_.resize(size());
    for (int a = 0; a < size(); ++a)
      for (int b = 0; b < size(); ++b) {
        if (a == b || !less_eq(a, b)) continue;
        bool cover = true;
        for (int c = 0; c < size() && cover; ++c)
          if (c != a && c != b && less_eq(a, c) && less_eq(c, b)) cover = false;
        if (cover) {
          lower_covers_[b].push_back(a);
          upper_covers_[a].push_back(b);
        }
      }
    for (int i = 1; i <= n; ++i) diag_.push_back(index(i, i));
    for (int idx : diag_) diag_mask_ |= 1ull << idx;
  }

  Kind kind_;
  int n_;
  std::vector<Elem> elems_;
  std::map<std::pair<int, int>, int> index_;
  std::vector<bool> leq_;
  std::vector<std::vector<int>> lower_covers_;
  std::vector<std::vector<int>> upper_covers_;
  std::vector<int> diag_;
  std::uint64_t diag_mask_ = 0;
};

inline Poset build_poset(Kind kind, int n) { return Poset::build(kind, n); }

// Order ideal (downward closed subset), stored as a bitmask in canonical
// element order. The stratum is |J n A|.
struct Ideal {
  std::uint64_t mask = 0;
  int stratum = 0;
  bool contains(int idx) const { return (mask >> idx) & 1; }
  friend bool operator==(const Ideal&, const Ideal&) = default;
};

inline int stratum_of(const Poset& p, std::uint64_t mask) {
  return std::popcount(mask & p.diagonal_mask());
}

inline bool is_down_closed(const Poset& p, std::uint64_t mask) {
  for (int b = 0; b < p.size(); ++b) {
    if (!((mask >> b) & 1)) continue;
    for (int a : p.lower_covers(b))
      if (!((mask >> a) & 1)) return false;
  }
  return true;
}

// All order ideals grouped by stratum; result[k] lists J with |J n A| = k in
// increasing mask order. Walks the lattice of ideals along the canonical
// linear extension, so the work is proportional to the output.
inline std::vector<std::vector<Ideal>> enumerate_ideals(const Poset& p) {
  std::vector<std::vector<Ideal>> out(p.n() + 1);
  std::vector<std::pair<int, std::uint64_t>> stack;
  stack.push_back({0, 0});
  while (!stack.empty()) {
    auto [t, mask] = stack.back();
    stack.pop_back();
    if (t == p.size()) {
      out[stratum_of(p, mask)].push_back({mask, stratum_of(p, mask)});
      continue;
    }
    bool can_take = true;
    for (int a : p.lower_covers(t))
      if (!((mask >> a) & 1)) {
        can_take = false;
        break;
      }
    if (can_take) stack.push_back({t + 1, mask | (1ull << t)});
    stack.push_back({t + 1, mask});
  }
  for (auto& level : out)
    std::sort(level.begin(), level.end(),
              [](const Ideal& a, const Ideal& b) { return a.mask < b.mask; });
  return out;
}

// Indices of the maximal elements of the subset.
inline std::vector<int> max_elements(const Poset& p, std::uint64_t mask) {
  std::vector<int> out;
  for (int a = 0; a < p.size(); ++a) {
    if (!((mask >> a) & 1)) continue;
    bool maximal = true;
    for (int b = 0; b < p.size() && maximal; ++b)
      if (b != a && ((mask >> b) & 1) && p.less_eq(a, b)) maximal = false;
    if (maximal) out.push_back(a);
  }
  return out;
}

// A marking set O must contain the diagonal A.
inline bool is_marking(const Poset& p, std::uint64_t o_mask) {
  return (o_mask & p.diagonal_mask()) == p.diagonal_mask() && (o_mask & ~p.full_mask()) == 0;
}

inline void require_marking(const Poset& p, std::uint64_t o_mask) {
  if (!is_marking(p, o_mask))
    throw std::invalid_argument("marking set must satisfy A <= O <= P");
}

// M_O(J) = (J n O) u max(J).
inline std::uint64_t marked_set(const Poset& p, std::uint64_t o_mask, const Ideal& j) {
  require_marking(p, o_mask);
  std::uint64_t m = j.mask & o_mask;
  for (int idx : max_elements(p, j.mask)) m |= 1ull << idx;
  return m;
}

}  // namespace mcop
