#pragma once

#include <cstdint>
#include <map>

#include "polytope.hpp"

namespace mcop {

// Dimension of the irreducible module with the given fundamental-weight
// coordinates, by the product formula over positive roots.
inline Int weyl_dim(Kind kind, int n, const Weight& lambda) {
  int len = kind == Kind::A ? n - 1 : n;
  if (static_cast<int>(lambda.size()) != len)
    throw std::invalid_argument("weyl_dim: weight length does not match the rank");
  for (int a : lambda)
    if (a < 0) throw std::invalid_argument("weyl_dim: weight entries must be nonnegative");
  // Coordinates along the standard basis: suffix sums of lambda.
  std::vector<long> l(n, 0);
  for (int i = n; i >= 1; --i)
    l[i - 1] = (i <= len ? lambda[i - 1] : 0) + (i < n ? l[i] : 0);
  Rat dim(1);
  if (kind == Kind::A) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) dim *= Rat(l[i - 1] - l[j - 1] + j - i, j - i);
  } else {
    std::vector<long> m(n);
    for (int i = 1; i <= n; ++i) m[i - 1] = l[i - 1] + n - i + 1;
    for (int i = 1; i <= n; ++i) {
      dim *= Rat(m[i - 1], n - i + 1);
      for (int j = i + 1; j <= n; ++j) {
        dim *= Rat(m[i - 1] - m[j - 1], j - i);
        dim *= Rat(m[i - 1] + m[j - 1], 2 * n + 2 - i - j);
      }
    }
  }
  dim.canonicalize();
  if (dim.get_den() != 1) throw invariant_error("weyl_dim: product is not an integer");
  return dim.get_num();
}

// Tensor product of wedge powers of the vector representation. A basis label
// holds one bitmask per tensor slot; bit t-1 set means e_t is a factor.
using TensorLabel = std::vector<std::uint32_t>;

struct TensorVector {
  std::map<TensorLabel, Int> coeff;

  void add(const TensorLabel& label, const Int& c) {
    if (c == 0) return;
    Int& slot = coeff[label];
    slot += c;
    if (slot == 0) coeff.erase(label);
  }
  bool is_zero() const { return coeff.empty(); }
};

// Wedge factor sizes, one entry per tensor slot: k repeated lambda[k-1] times.
inline std::vector<int> module_slots(const Weight& lambda) {
  std::vector<int> slots;
  for (std::size_t k = 0; k < lambda.size(); ++k)
    for (int rep = 0; rep < lambda[k]; ++rep) slots.push_back(static_cast<int>(k) + 1);
  return slots;
}

inline TensorVector highest_vector(const std::vector<int>& slots) {
  TensorLabel label;
  for (int k : slots) label.push_back((std::uint32_t{1} << k) - 1);
  TensorVector v;
  v.add(label, Int(1));
  return v;
}

// Action of the matrix unit sending e_i to e_j (i < j) as a derivation of the
// tensor product; on a wedge, the sign counts basis factors strictly between.
inline TensorVector negative_root_action(int i, int j, const TensorVector& v) {
  if (!(1 <= i && i < j)) throw std::invalid_argument("negative_root_action: need 1 <= i < j");
  TensorVector out;
  std::uint32_t bit_i = std::uint32_t{1} << (i - 1);
  std::uint32_t bit_j = std::uint32_t{1} << (j - 1);
  std::uint32_t between = (bit_j - 1) & ~((bit_i << 1) - 1);
  for (const auto& [label, c] : v.coeff)
    for (std::size_t s = 0; s < label.size(); ++s) {
      std::uint32_t mask = label[s];
      if (!(mask & bit_i) || (mask & bit_j)) continue;
      TensorLabel moved(label);
      moved[s] = (mask ^ bit_i) | bit_j;
      int sign = __builtin_popcount(mask & between) % 2 == 0 ? 1 : -1;
      out.add(moved, c * sign);
    }
  return out;
}

// Applies the ordered product of root vector powers given by the exponent
// point: factors run over the off-diagonal elements in canonical order, the
// rightmost factor acting first.
inline TensorVector pbw_apply(const Poset& p, const Point& x, TensorVector v) {
  if (p.kind() != Kind::A) throw std::invalid_argument("pbw_apply: defined for kind A only");
  for (int idx = p.size() - 1; idx >= 0; --idx) {
    const Elem& e = p.element(idx);
    if (e.i == e.j) continue;
    if (x[idx] < 0) throw std::invalid_argument("pbw_apply: negative exponent");
    for (int rep = 0; rep < x[idx]; ++rep) v = negative_root_action(e.i, e.j, v);
  }
  return v;
}

struct BasisReport {
  std::size_t points = 0;
  std::size_t rank = 0;
  Int dim;
  bool ok = false;
};

// Spanning check: the monomials of the transformed polytope, applied to the
// highest vector, must generate a space of the full module dimension.
inline BasisReport basis_check(const Poset& p, std::uint64_t o_mask, const Weight& lambda,
                               const std::vector<std::vector<Ideal>>& strata) {
  require_weight(p, lambda);
  Int ambient(1);
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    Int binom(1);
    for (int t = 0; t < static_cast<int>(k) + 1; ++t)
      binom = binom * (p.n() - t) / (t + 1);
    for (int rep = 0; rep < lambda[k]; ++rep) ambient *= binom;
  }
  if (ambient > 20000)
    throw resource_error("basis_check: ambient tensor space exceeds 20000 monomials");

  BasisReport rep;
  rep.dim = weyl_dim(p.kind(), p.n(), lambda);
  std::vector<Point> points = pi_polytope_points(p, o_mask, lambda, strata);
  rep.points = points.size();

  std::vector<int> slots = module_slots(lambda);
  TensorVector top = highest_vector(slots);
  std::vector<TensorVector> images;
  std::map<TensorLabel, int> columns;
  for (const Point& x : points) {
    TensorVector w = pbw_apply(p, x, top);
    for (const auto& [label, c] : w.coeff) columns.emplace(label, 0);
    images.push_back(std::move(w));
  }
  int col = 0;
  for (auto& [label, idx] : columns) idx = col++;
  Mat m(static_cast<int>(images.size()), col == 0 ? 1 : col);
  for (std::size_t r = 0; r < images.size(); ++r)
    for (const auto& [label, c] : images[r].coeff) m.at(static_cast<int>(r), columns[label]) = c;
  rep.rank = static_cast<std::size_t>(rank_rational(m));
  rep.ok = rep.rank == rep.points && Int(static_cast<long>(rep.points)) == rep.dim;
  return rep;
}

}  // namespace mcop
