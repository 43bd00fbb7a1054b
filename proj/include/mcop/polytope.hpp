#pragma once

#include <optional>
#include <set>
#include <thread>

#include "linalg.hpp"
#include "pipedream.hpp"

namespace mcop {

// Lattice point in Z^P, indexed by canonical element order.
using Point = std::vector<int>;

inline int weight_length(const Poset& p) { return p.kind() == Kind::A ? p.n() - 1 : p.n(); }

inline void require_weight(const Poset& p, const Weight& lambda) {
  if (static_cast<int>(lambda.size()) != weight_length(p))
    throw std::invalid_argument("weight length does not match the poset rank");
  for (int a : lambda)
    if (a < 0) throw std::invalid_argument("weight entries must be nonnegative");
}

inline Point point_of_mask(const Poset& p, std::uint64_t mask) {
  Point x(p.size(), 0);
  for (int idx = 0; idx < p.size(); ++idx) x[idx] = (mask >> idx) & 1;
  return x;
}

// x_O(J), the indicator vector of the marked set.
inline Point mcop_vertex(const Poset& p, std::uint64_t o_mask, const Ideal& j) {
  return point_of_mask(p, marked_set(p, o_mask, j));
}

// Vertices of the fundamental polytope for stratum k. A 0/1 polytope's integer
// points are exactly its vertices, so this list is also the lattice-point set.
inline std::vector<Point> fundamental_polytope(const Poset& p, std::uint64_t o_mask, int k,
                                               const std::vector<std::vector<Ideal>>& strata) {
  if (k < 1 || k > weight_length(p))
    throw std::invalid_argument("fundamental_polytope: stratum out of range");
  std::set<Point> verts;
  for (const Ideal& j : strata[k]) verts.insert(mcop_vertex(p, o_mask, j));
  return {verts.begin(), verts.end()};
}

namespace detail {

inline std::set<Point> sum_step(const std::set<Point>& acc, const std::vector<Point>& verts,
                                int jobs) {
  guard_bytes(acc.size() * verts.size() * (verts.empty() ? 1 : verts[0].size()) * sizeof(int) / 4,
              "lattice point summation");
  std::vector<const Point*> base;
  base.reserve(acc.size());
  for (const Point& s : acc) base.push_back(&s);
  int threads = std::max(1, jobs);
  if (threads == 1 || base.size() < 64) {
    std::set<Point> next;
    for (const Point* s : base)
      for (const Point& v : verts) {
        Point sum(*s);
        for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += v[t];
        next.insert(std::move(sum));
      }
    return next;
  }
  std::vector<std::set<Point>> parts(threads);
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t b = w; b < base.size(); b += threads)
        for (const Point& v : verts) {
          Point sum(*base[b]);
          for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += v[t];
          parts[w].insert(std::move(sum));
        }
    });
  for (auto& th : pool) th.join();
  std::set<Point> next;
  for (auto& part : parts) next.merge(part);
  return next;
}

// All sums picking one vertex list value per Minkowski factor (a_k copies of
// factor k), deduplicated.
inline std::vector<Point> minkowski_points(const Poset& p, const Weight& lambda,
                                           const std::vector<std::vector<Point>>& factor_verts,
                                           int jobs) {
  std::set<Point> acc;
  acc.insert(Point(p.size(), 0));
  for (std::size_t k = 0; k < lambda.size(); ++k)
    for (int rep = 0; rep < lambda[k]; ++rep) acc = sum_step(acc, factor_verts[k], jobs);
  return {acc.begin(), acc.end()};
}

}  // namespace detail

// Lattice points of the Minkowski sum a_1 Q_O(w_1) + ... computed as sums of
// factor vertices. That this exhausts the integer points of the sum is
// validated independently by the bounding-box sweep below.
inline std::vector<Point> lattice_points(const Poset& p, std::uint64_t o_mask,
                                         const Weight& lambda,
                                         const std::vector<std::vector<Ideal>>& strata,
                                         int jobs = 1) {
  require_weight(p, lambda);
  std::vector<std::vector<Point>> factor_verts;
  for (int k = 1; k <= weight_length(p); ++k)
    factor_verts.push_back(lambda[k - 1] > 0 ? fundamental_polytope(p, o_mask, k, strata)
                                             : std::vector<Point>{});
  return detail::minkowski_points(p, lambda, factor_verts, jobs);
}

// Diagonal coordinates of any point of Q_O(lambda) are the weight suffix sums.
inline bool diagonal_check(const Poset& p, const Weight& lambda, const Point& x) {
  require_weight(p, lambda);
  for (int i = 1; i <= p.n(); ++i) {
    int suffix = 0;
    for (int t = i; t <= weight_length(p); ++t) suffix += lambda[t - 1];
    if (x[p.diagonal()[i - 1]] != suffix) return false;
  }
  return true;
}

// Exact convex-hull membership test against a vertex list.
inline bool hull_membership(const std::vector<Rat>& point, const std::vector<Point>& vertices) {
  std::vector<std::vector<Rat>> gens;
  for (const Point& v : vertices) {
    if (v.size() != point.size()) throw std::invalid_argument("hull_membership: dimension mismatch");
    gens.emplace_back(v.begin(), v.end());
  }
  return convex_combination_exists(gens, point);
}

inline std::vector<Rat> to_rat(const Point& x) { return {x.begin(), x.end()}; }

// Vertices of conv(points): the points that are not convex combinations of the
// others. Intended for small point sets.
inline std::vector<Point> vertices_of(const std::vector<Point>& points) {
  std::vector<Point> verts;
  for (std::size_t t = 0; t < points.size(); ++t) {
    std::vector<Point> others;
    for (std::size_t s = 0; s < points.size(); ++s)
      if (s != t) others.push_back(points[s]);
    if (others.empty() || !hull_membership(to_rat(points[t]), others)) verts.push_back(points[t]);
  }
  return verts;
}

// Independent oracle for the summation decision: sweep the integer bounding
// box and keep exactly the points inside the hull of the summed vertex set.
struct SweepReport {
  bool ok = true;
  long box_size = 0;
  std::vector<Point> extra;    // in the hull but not produced by summation
  std::vector<Point> missing;  // produced by summation but outside the hull
};

inline SweepReport minkowski_sweep_check(const Poset& p, std::uint64_t o_mask,
                                         const Weight& lambda,
                                         const std::vector<std::vector<Ideal>>& strata) {
  std::vector<Point> pts = lattice_points(p, o_mask, lambda, strata);
  std::set<Point> produced(pts.begin(), pts.end());
  // Membership against all points equals membership against the vertices.
  const std::vector<Point>& hull_gens = pts;
  SweepReport rep;
  Point lo(p.size(), 0), hi(p.size(), 0);
  for (int c = 0; c < p.size(); ++c) {
    lo[c] = hi[c] = pts[0][c];
    for (const Point& x : pts) {
      lo[c] = std::min(lo[c], x[c]);
      hi[c] = std::max(hi[c], x[c]);
    }
  }
  long box = 1;
  for (int c = 0; c < p.size(); ++c) {
    box *= hi[c] - lo[c] + 1;
    guard_bytes(static_cast<std::size_t>(box) * sizeof(int), "bounding box sweep");
  }
  rep.box_size = box;
  Point cur(lo);
  for (;;) {
    if (hull_membership(to_rat(cur), hull_gens)) {
      if (!produced.count(cur)) {
        rep.ok = false;
        rep.extra.push_back(cur);
      }
    } else if (produced.count(cur)) {
      rep.ok = false;
      rep.missing.push_back(cur);
    }
    int c = 0;
    while (c < p.size() && cur[c] == hi[c]) cur[c] = lo[c], ++c;
    if (c == p.size()) break;
    ++cur[c];
  }
  return rep;
}

// Inequality systems stated for the two distinguished markings, kind A only.
// Full marking: diagonal suffix sums plus coordinatewise monotonicity along
// the order. Diagonal marking: nonnegativity plus bounded sums along maximal
// chains avoiding the diagonal.
struct InequalityReport {
  bool ok = true;
  std::vector<std::string> problems;
};

namespace detail {

inline void saturated_offdiag_chains(const Poset& p, int l, int r, Point& chain_idx,
                                     std::vector<std::vector<int>>& out, int i, int j) {
  chain_idx.push_back(p.index(i, j));
  if (i == r && j == r + 1) {
    out.push_back(chain_idx);
  } else {
    if (p.contains(i, j + 1) && j + 1 > i) saturated_offdiag_chains(p, l, r, chain_idx, out, i, j + 1);
    if (p.contains(i + 1, j) && j > i + 1) saturated_offdiag_chains(p, l, r, chain_idx, out, i + 1, j);
  }
  chain_idx.pop_back();
}

}  // namespace detail

inline InequalityReport defining_inequalities_check(const Poset& p, bool full_marking,
                                                    const Weight& lambda,
                                                    const std::vector<Point>& points) {
  if (p.kind() != Kind::A)
    throw std::invalid_argument("defining_inequalities_check: only kind A systems are stated");
  require_weight(p, lambda);
  InequalityReport rep;
  auto fail = [&](const std::string& msg) {
    rep.ok = false;
    rep.problems.push_back(msg);
  };

  std::vector<std::vector<int>> chains;  // diagonal marking only
  if (!full_marking)
    for (int l = 1; l < p.n(); ++l)
      for (int r = l; r < p.n(); ++r) {
        Point scratch;
        detail::saturated_offdiag_chains(p, l, r, scratch, chains, l, l + 1);
      }

  auto satisfies = [&](const Point& x) -> bool {
    if (!diagonal_check(p, lambda, x)) return false;
    if (full_marking) {
      for (int b = 0; b < p.size(); ++b)
        for (int a : p.lower_covers(b))
          if (x[a] < x[b]) return false;
    } else {
      for (int c = 0; c < p.size(); ++c)
        if (x[c] < 0) return false;
      for (const auto& chain : chains) {
        int bound = 0;
        const Elem& first = p.element(chain.front());
        const Elem& last = p.element(chain.back());
        for (int t = first.i; t <= last.i; ++t) bound += lambda[t - 1];
        int sum = 0;
        for (int idx : chain) sum += x[idx];
        if (sum > bound) return false;
      }
    }
    return true;
  };

  std::set<Point> produced(points.begin(), points.end());
  for (const Point& x : points)
    if (!satisfies(x)) fail("enumerated point violates the system");

  // Reverse containment: every integer solution of the system within the
  // bounding box of the point set must be an enumerated point.
  if (points.empty()) return rep;
  Point lo(p.size()), hi(p.size());
  for (int c = 0; c < p.size(); ++c) {
    lo[c] = hi[c] = points[0][c];
    for (const Point& x : points) {
      lo[c] = std::min(lo[c], x[c]);
      hi[c] = std::max(hi[c], x[c]);
    }
  }
  long box = 1;
  for (int c = 0; c < p.size(); ++c) {
    box *= hi[c] - lo[c] + 1;
    guard_bytes(static_cast<std::size_t>(box) * sizeof(int), "inequality box sweep");
  }
  Point cur(lo);
  for (;;) {
    if (satisfies(cur) && !produced.count(cur)) fail("integer solution missed by enumeration");
    int c = 0;
    while (c < p.size() && cur[c] == hi[c]) cur[c] = lo[c], ++c;
    if (c == p.size()) break;
    ++cur[c];
  }
  return rep;
}

// Indicator vector of {(t, tuple[t])}: legal poset coordinates because every
// entry satisfies the bound |tuple[t]| >= t+1 (0-based t).
inline Point tuple_indicator(const Poset& p, const std::vector<int>& tuple) {
  Point x(p.size(), 0);
  for (std::size_t t = 0; t < tuple.size(); ++t)
    x[p.index(static_cast<int>(t) + 1, tuple[t])] += 1;
  return x;
}

// The transformed polytope: vertices are tuple indicators, lattice points come
// from the same Minkowski summation. Kind A only.
inline std::vector<Point> pi_fundamental(const Poset& p, std::uint64_t o_mask, int k,
                                         const std::vector<std::vector<Ideal>>& strata) {
  if (p.kind() != Kind::A)
    throw std::invalid_argument("pi_fundamental: defined for kind A only");
  if (k < 1 || k > weight_length(p))
    throw std::invalid_argument("pi_fundamental: stratum out of range");
  std::set<Point> verts;
  for (const Ideal& j : strata[k]) verts.insert(tuple_indicator(p, ideal_tuple(p, o_mask, j)));
  return {verts.begin(), verts.end()};
}

inline std::vector<Point> pi_polytope_points(const Poset& p, std::uint64_t o_mask,
                                             const Weight& lambda,
                                             const std::vector<std::vector<Ideal>>& strata,
                                             int jobs = 1) {
  require_weight(p, lambda);
  std::vector<std::vector<Point>> factor_verts;
  for (int k = 1; k <= weight_length(p); ++k)
    factor_verts.push_back(lambda[k - 1] > 0 ? pi_fundamental(p, o_mask, k, strata)
                                             : std::vector<Point>{});
  return detail::minkowski_points(p, lambda, factor_verts, jobs);
}

// The distinguished vertex x_k comes from the unique ideal in stratum k whose
// tuple is a permutation of {1..k}; x_lambda is the weighted sum. Kind C.
inline Point x_lambda(const Poset& p, std::uint64_t o_mask, const Weight& lambda,
                      const std::vector<std::vector<Ideal>>& strata) {
  if (p.kind() != Kind::C) throw std::invalid_argument("x_lambda: defined for kind C only");
  require_weight(p, lambda);
  Point total(p.size(), 0);
  for (int k = 1; k <= p.n(); ++k) {
    std::optional<Point> xk;
    for (const Ideal& j : strata[k]) {
      std::vector<int> tuple = ideal_tuple(p, o_mask, j);
      std::vector<int> sorted(tuple);
      std::sort(sorted.begin(), sorted.end());
      bool initial = true;
      for (int t = 0; t < k; ++t) initial = initial && sorted[t] == t + 1;
      if (!initial) continue;
      if (xk) throw invariant_error("x_lambda: tuple {1..k} hit by two ideals in stratum " +
                                    std::to_string(k));
      xk = mcop_vertex(p, o_mask, j);
    }
    if (!xk)
      throw invariant_error("x_lambda: no ideal in stratum " + std::to_string(k) +
                            " has tuple {1..k}");
    for (int c = 0; c < p.size(); ++c) total[c] += lambda[k - 1] * (*xk)[c];
  }
  return total;
}

// Newton-Okounkov body: the polytope translated so that x_lambda sits at the
// origin. Returned as its lattice-point set.
struct NoBody {
  Point base;                 // x_lambda
  std::vector<Point> points;  // translated lattice points
};

inline NoBody newton_okounkov_body(const Poset& p, std::uint64_t o_mask, const Weight& lambda,
                                   const std::vector<std::vector<Ideal>>& strata, int jobs = 1) {
  NoBody body;
  body.base = x_lambda(p, o_mask, lambda, strata);
  for (Point x : lattice_points(p, o_mask, lambda, strata, jobs)) {
    for (int c = 0; c < p.size(); ++c) x[c] -= body.base[c];
    body.points.push_back(std::move(x));
  }
  return body;
}

}  // namespace mcop
