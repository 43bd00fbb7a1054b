#pragma once

#include <functional>
#include <optional>
#include <set>

#include "rep.hpp"

namespace mcop {

// Polynomials in the poset variables z_e, exponent vectors in canonical
// element order, exact integer coefficients.
using Exponent = std::vector<int>;

struct Poly {
  std::map<Exponent, Int> terms;

  void add(const Exponent& e, const Int& c) {
    if (c == 0) return;
    Int& slot = terms[e];
    slot += c;
    if (slot == 0) terms.erase(e);
  }
  bool is_zero() const { return terms.empty(); }

  Poly operator*(const Poly& o) const {
    Poly out;
    for (const auto& [e1, c1] : terms)
      for (const auto& [e2, c2] : o.terms) {
        Exponent e(e1);
        for (std::size_t t = 0; t < e.size(); ++t) e[t] += e2[t];
        out.add(e, c1 * c2);
      }
    return out;
  }

  static Poly one(int nvars) {
    Poly p;
    p.add(Exponent(nvars, 0), Int(1));
    return p;
  }
};

// Determinant of the submatrix on rows 1..k and the given column values of
// the variable matrix whose support is the poset: entry (t, v) is z_{t,v}
// when (t, v) is an element and zero otherwise. Expanded over permutations.
inline Poly minor(const Poset& p, const std::vector<int>& cols) {
  int k = static_cast<int>(cols.size());
  if (k < 1 || k > p.n()) throw std::invalid_argument("minor: need between 1 and n columns");
  Poly det;
  std::vector<int> perm(k);
  for (int t = 0; t < k; ++t) perm[t] = t;
  do {
    int inversions = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Exponent e(p.size(), 0);
    bool zero = false;
    for (int t = 1; t <= k && !zero; ++t) {
      int v = cols[perm[t - 1]];
      if (!p.contains(t, v))
        zero = true;
      else
        e[p.index(t, v)] += 1;
    }
    if (!zero) det.add(e, Int(inversions % 2 == 0 ? 1 : -1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// Highest term under a weight vector; refuses ties and the zero polynomial.
inline std::pair<Exponent, Int> initial_term(const Poly& poly, const std::vector<Int>& w) {
  if (poly.is_zero()) throw std::invalid_argument("initial_term: zero polynomial");
  const Exponent* best = nullptr;
  Int best_val;
  bool tie = false;
  for (const auto& [e, c] : poly.terms) {
    Int val;
    for (std::size_t t = 0; t < e.size(); ++t)
      if (e[t] != 0) val += Int(e[t]) * w[t];
    if (!best || val > best_val) {
      best = &e;
      best_val = val;
      tie = false;
    } else if (val == best_val) {
      tie = true;
    }
  }
  if (tie) throw invariant_error("initial_term: weight does not separate the terms");
  return {*best, poly.terms.at(*best)};
}

// The distinguished monomial that the degeneration selects in each minor:
// one variable z_{t, w^J(t)} per row.
inline Exponent target_exponent(const Poset& p, const std::vector<int>& tuple) {
  Exponent e(p.size(), 0);
  for (std::size_t t = 0; t < tuple.size(); ++t)
    e[p.index(static_cast<int>(t) + 1, tuple[t])] += 1;
  return e;
}

struct WeightOrderReport {
  std::optional<std::vector<Int>> weights;
  std::size_t minors = 0;
  std::size_t constraints = 0;
};

// Searches for a weight vector making the distinguished monomial strictly
// dominant in every ideal minor, over all strata.
inline WeightOrderReport find_weight_order(const Poset& p, std::uint64_t o_mask,
                                           const std::vector<std::vector<Ideal>>& strata) {
  WeightOrderReport rep;
  std::set<std::vector<Int>> rows;
  for (int k = 1; k <= p.n(); ++k)
    for (const Ideal& j : strata[k]) {
      std::vector<int> tuple = ideal_tuple(p, o_mask, j);
      Poly d = minor(p, tuple);
      Exponent target = target_exponent(p, tuple);
      if (!d.terms.count(target))
        throw invariant_error("find_weight_order: distinguished monomial missing from its minor");
      ++rep.minors;
      for (const auto& [e, c] : d.terms) {
        if (e == target) continue;
        std::vector<Int> row(p.size());
        for (int t = 0; t < p.size(); ++t) row[t] = Int(target[t] - e[t]);
        rows.insert(std::move(row));
      }
    }
  rep.constraints = rows.size();
  rep.weights = strict_lp_feasible({rows.begin(), rows.end()});
  // A constraint-free system (every minor a single monomial) admits any
  // weight vector; report one of the right length.
  if (rep.weights && rep.weights->empty()) rep.weights->assign(p.size(), Int(0));
  return rep;
}

// Re-verification: under the found weights, every ideal minor's initial term
// is exactly the distinguished monomial.
inline bool weight_order_certifies(const Poset& p, std::uint64_t o_mask,
                                   const std::vector<std::vector<Ideal>>& strata,
                                   const std::vector<Int>& w) {
  for (int k = 1; k <= p.n(); ++k)
    for (const Ideal& j : strata[k]) {
      std::vector<int> tuple = ideal_tuple(p, o_mask, j);
      Poly d = minor(p, tuple);
      if (initial_term(d, w).first != target_exponent(p, tuple)) return false;
    }
  return true;
}

// Vertex columns against tuple-indicator columns over the weight strata.
struct KernelEqReport {
  bool kernels_equal = false;
  bool xi_ok = false;
  Mat a, b;
  std::optional<Mat> xi;
  std::string note;
};

inline KernelEqReport kernel_equality_check(const Poset& p, std::uint64_t o_mask,
                                            const std::vector<std::vector<Ideal>>& strata) {
  KernelEqReport rep;
  std::vector<Point> a_cols, b_cols;
  for (int k = 1; k <= weight_length(p); ++k)
    for (const Ideal& j : strata[k]) {
      a_cols.push_back(mcop_vertex(p, o_mask, j));
      b_cols.push_back(tuple_indicator(p, ideal_tuple(p, o_mask, j)));
    }
  int cols = static_cast<int>(a_cols.size());
  rep.a = Mat(p.size(), cols);
  rep.b = Mat(p.size(), cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < p.size(); ++r) {
      rep.a.at(r, c) = a_cols[c][r];
      rep.b.at(r, c) = b_cols[c][r];
    }
  rep.kernels_equal = lattice_equal(integer_kernel(rep.a), integer_kernel(rep.b));
  UnimodularResult uni = find_unimodular_map(rep.a, rep.b);
  rep.note = uni.note;
  if (uni.xi) {
    Mat& xi = *uni.xi;
    Int d = det(xi);
    if (xi * rep.a == rep.b && (d == 1 || d == -1)) {
      rep.xi = xi;
      rep.xi_ok = true;
    } else {
      rep.note = "candidate map failed verification";
    }
  }
  return rep;
}

// Monomials in the stratum variables, as sorted lists of global variable ids.
using XMonomial = std::vector<int>;

// Groups of distinct equal-multidegree monomials with the same image under
// the given exponent assignment; each group spells out binomial relations.
inline std::vector<std::vector<XMonomial>> toric_kernel_binomials(
    const std::vector<Point>& var_image, const std::vector<int>& var_stratum, int max_degree) {
  if (max_degree < 1 || max_degree > 3)
    throw std::invalid_argument("toric_kernel_binomials: degree must be 1, 2 or 3");
  int nvars = static_cast<int>(var_image.size());
  int max_stratum = 0;
  for (int s : var_stratum) max_stratum = std::max(max_stratum, s);
  std::map<std::pair<std::vector<int>, Point>, std::vector<XMonomial>> groups;
  XMonomial mono;
  auto recurse = [&](auto&& self, int first) -> void {
    if (!mono.empty()) {
      std::vector<int> multidegree(max_stratum + 1, 0);
      Point image;
      for (int v : mono) {
        multidegree[var_stratum[v]] += 1;
        if (image.empty()) image = var_image[v];
        else
          for (std::size_t t = 0; t < image.size(); ++t) image[t] += var_image[v][t];
      }
      groups[{multidegree, image}].push_back(mono);
    }
    if (static_cast<int>(mono.size()) == max_degree) return;
    for (int v = first; v < nvars; ++v) {
      mono.push_back(v);
      self(self, v);
      mono.pop_back();
    }
  };
  recurse(recurse, 0);
  std::vector<std::vector<XMonomial>> out;
  for (auto& [key, members] : groups)
    if (members.size() >= 2) out.push_back(members);
  // Canonical order, independent of the image values the grouping used.
  std::sort(out.begin(), out.end());
  return out;
}

// The binomial relations of the vertex map and of the tuple-indicator map
// must coincide as partitions of the monomials.
inline bool toric_relations_match(const Poset& p, std::uint64_t o_mask,
                                  const std::vector<std::vector<Ideal>>& strata, int max_degree) {
  std::vector<Point> a_image, b_image;
  std::vector<int> stratum;
  for (int k = 1; k <= weight_length(p); ++k)
    for (const Ideal& j : strata[k]) {
      a_image.push_back(mcop_vertex(p, o_mask, j));
      b_image.push_back(tuple_indicator(p, ideal_tuple(p, o_mask, j)));
      stratum.push_back(k);
    }
  return toric_kernel_binomials(a_image, stratum, max_degree) ==
         toric_kernel_binomials(b_image, stratum, max_degree);
}

namespace detail {

// Calls fn for every way of picking a multiset of lambda[k-1] ideals from
// each stratum k; choice[k-1] holds indices into strata[k].
inline void for_each_multidegree_choice(const std::vector<std::vector<Ideal>>& strata,
                                        const Weight& lambda,
                                        const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
  std::vector<std::vector<int>> choice(lambda.size());
  auto stratum_level = [&](auto&& self, std::size_t k) -> void {
    if (k == lambda.size()) {
      fn(choice);
      return;
    }
    auto pick = [&](auto&& inner, int count, int first) -> void {
      if (count == 0) {
        self(self, k + 1);
        return;
      }
      for (int idx = first; idx < static_cast<int>(strata[k + 1].size()); ++idx) {
        choice[k].push_back(idx);
        inner(inner, count - 1, idx);
        choice[k].pop_back();
      }
    };
    pick(pick, lambda[k], 0);
  };
  stratum_level(stratum_level, 0);
}

inline std::size_t exact_rank(const std::vector<Poly>& rows) {
  std::set<Exponent> universe;
  for (const Poly& r : rows)
    for (const auto& [e, c] : r.terms) universe.insert(e);
  std::map<Exponent, int> col;
  int c = 0;
  for (const Exponent& e : universe) col[e] = c++;
  Mat m(static_cast<int>(rows.size()), c == 0 ? 1 : c);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [e, coef] : rows[r].terms) m.at(static_cast<int>(r), col[e]) = coef;
  return static_cast<std::size_t>(rank_rational(m));
}

}  // namespace detail

struct SagbiReport {
  std::size_t products = 0;
  std::size_t initial_count = 0;  // distinct leading exponents
  std::size_t span_rank = 0;      // dimension of the span of the products
  Int dim;                        // module dimension
  bool ok = false;
};

// Hilbert comparison for the ideal-minor subalgebra in one multidegree: the
// count of distinct leading monomials, the exact rank of the products, and
// the module dimension must agree.
inline SagbiReport sagbi_hilbert_check(const Poset& p, std::uint64_t o_mask, const Weight& lambda,
                                       const std::vector<std::vector<Ideal>>& strata) {
  if (p.kind() != Kind::A)
    throw std::invalid_argument("sagbi_hilbert_check: stated for kind A only");
  require_weight(p, lambda);
  WeightOrderReport order = find_weight_order(p, o_mask, strata);
  if (!order.weights) throw invariant_error("sagbi_hilbert_check: no separating weight found");
  const std::vector<Int>& w = *order.weights;

  SagbiReport rep;
  rep.dim = weyl_dim(p.kind(), p.n(), lambda);
  std::vector<Poly> products;
  std::set<Exponent> leading;
  detail::for_each_multidegree_choice(strata, lambda, [&](const std::vector<std::vector<int>>& choice) {
    Poly prod = Poly::one(p.size());
    for (std::size_t k = 0; k < choice.size(); ++k)
      for (int idx : choice[k])
        prod = prod * minor(p, ideal_tuple(p, o_mask, strata[k + 1][idx]));
    leading.insert(initial_term(prod, w).first);
    products.push_back(std::move(prod));
  });
  rep.products = products.size();
  rep.initial_count = leading.size();
  rep.span_rank = detail::exact_rank(products);
  rep.ok = Int(static_cast<long>(rep.initial_count)) == rep.dim &&
           Int(static_cast<long>(rep.span_rank)) == rep.dim;
  return rep;
}

struct RankReport {
  std::size_t products = 0;
  std::size_t span_rank = 0;
  Int dim;
  bool ok = false;
};

// Hilbert comparison for the admissible-tuple minors of the kind C matrix:
// the span of the multidegree-lambda products must have the full module
// dimension.
inline RankReport intermediate_hilbert_check(const Poset& p, const Weight& lambda) {
  if (p.kind() != Kind::C)
    throw std::invalid_argument("intermediate_hilbert_check: stated for kind C only");
  require_weight(p, lambda);
  RankReport rep;
  rep.dim = weyl_dim(p.kind(), p.n(), lambda);
  std::vector<std::vector<std::vector<int>>> tuples(p.n() + 1);
  for (int k = 1; k <= p.n(); ++k) tuples[k] = expected_tuples(p, k);

  std::vector<Poly> products;
  std::vector<std::vector<int>> choice(lambda.size());
  auto stratum_level = [&](auto&& self, std::size_t k) -> void {
    if (k == lambda.size()) {
      Poly prod = Poly::one(p.size());
      for (std::size_t kk = 0; kk < choice.size(); ++kk)
        for (int idx : choice[kk]) prod = prod * minor(p, tuples[kk + 1][idx]);
      products.push_back(std::move(prod));
      return;
    }
    auto pick = [&](auto&& inner, int count, int first) -> void {
      if (count == 0) {
        self(self, k + 1);
        return;
      }
      for (int idx = first; idx < static_cast<int>(tuples[k + 1].size()); ++idx) {
        choice[k].push_back(idx);
        inner(inner, count - 1, idx);
        choice[k].pop_back();
      }
    };
    pick(pick, lambda[k], 0);
  };
  stratum_level(stratum_level, 0);
  rep.products = products.size();
  rep.span_rank = detail::exact_rank(products);
  rep.ok = Int(static_cast<long>(rep.span_rank)) == rep.dim;
  return rep;
}

// Sorted-column form of an ideal's tuple together with the sorting sign.
inline CanonicalTuple psi(const Poset& p, std::uint64_t o_mask, const Ideal& j) {
  return canonical_tuple(p, ideal_tuple(p, o_mask, j));
}

// Sorted tuple -> (stratum, index into the stratum). Collisions would break
// the inverse lookup and are reported as invariant violations.
inline std::map<std::vector<int>, std::pair<int, int>> tuple_ideal_map(
    const Poset& p, std::uint64_t o_mask, const std::vector<std::vector<Ideal>>& strata) {
  std::map<std::vector<int>, std::pair<int, int>> out;
  for (int k = 1; k <= weight_length(p); ++k)
    for (std::size_t idx = 0; idx < strata[k].size(); ++idx) {
      CanonicalTuple c = psi(p, o_mask, strata[k][idx]);
      if (c.sign == 0) throw invariant_error("tuple_ideal_map: tuple with repeated entries");
      if (!out.emplace(c.sorted, std::pair{k, static_cast<int>(idx)}).second)
        throw invariant_error("tuple_ideal_map: two ideals share a tuple");
    }
  return out;
}

// Valuation of a monomial in the tuple variables: the sum of the vertices of
// the ideals the tuples come from.
inline Point valuation_nu(const Poset& p, std::uint64_t o_mask,
                          const std::vector<std::vector<Ideal>>& strata,
                          const std::map<std::vector<int>, std::pair<int, int>>& lookup,
                          const std::vector<std::vector<int>>& monomial) {
  Point total(p.size(), 0);
  for (const std::vector<int>& raw : monomial) {
    CanonicalTuple c = canonical_tuple(p, raw);
    auto it = lookup.find(c.sorted);
    if (it == lookup.end())
      throw std::invalid_argument("valuation_nu: tuple does not name an ideal variable");
    Point v = mcop_vertex(p, o_mask, strata[it->second.first][it->second.second]);
    for (int t = 0; t < p.size(); ++t) total[t] += v[t];
  }
  return total;
}

struct NuImageReport {
  std::size_t monomials = 0;
  std::size_t points = 0;
  bool image_matches = false;
  bool base_matches = false;  // kind C: the distinguished monomial hits x_lambda
  bool ok = false;
};

// The valuation image of the multidegree-lambda monomials must be exactly the
// lattice point set of the polytope.
inline NuImageReport nu_image_check(const Poset& p, std::uint64_t o_mask, const Weight& lambda,
                                    const std::vector<std::vector<Ideal>>& strata) {
  require_weight(p, lambda);
  NuImageReport rep;
  auto lookup = tuple_ideal_map(p, o_mask, strata);
  std::set<Point> image;
  detail::for_each_multidegree_choice(strata, lambda, [&](const std::vector<std::vector<int>>& choice) {
    std::vector<std::vector<int>> monomial;
    for (std::size_t k = 0; k < choice.size(); ++k)
      for (int idx : choice[k]) monomial.push_back(ideal_tuple(p, o_mask, strata[k + 1][idx]));
    image.insert(valuation_nu(p, o_mask, strata, lookup, monomial));
    ++rep.monomials;
  });
  std::vector<Point> pts = lattice_points(p, o_mask, lambda, strata);
  rep.points = pts.size();
  rep.image_matches = image == std::set<Point>(pts.begin(), pts.end());
  if (p.kind() == Kind::C) {
    std::vector<std::vector<int>> tau;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
      std::vector<int> increasing;
      for (int t = 1; t <= static_cast<int>(k) + 1; ++t) increasing.push_back(t);
      for (int rep2 = 0; rep2 < lambda[k]; ++rep2) tau.push_back(increasing);
    }
    rep.base_matches =
        valuation_nu(p, o_mask, strata, lookup, tau) == x_lambda(p, o_mask, lambda, strata);
  } else {
    rep.base_matches = true;
  }
  rep.ok = rep.image_matches && rep.base_matches;
  return rep;
}

}  // namespace mcop
