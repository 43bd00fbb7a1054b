#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace mcop {

// Dense matrix over arbitrary-precision integers, row major.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  Int& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  bool operator==(const Mat&) const = default;

  Mat operator*(const Mat& o) const {
    if (cols != o.rows) throw std::invalid_argument("Mat::operator*: shape mismatch");
    Mat res(rows, o.cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k) {
        const Int& x = at(i, k);
        if (x == 0) continue;
        for (int j = 0; j < o.cols; ++j) res.at(i, j) += x * o.at(k, j);
      }
    return res;
  }

  bool is_zero() const {
    for (const Int& x : a)
      if (x != 0) return false;
    return true;
  }

  std::vector<Int> column(int c) const {
    std::vector<Int> v(rows);
    for (int r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
  }
};

// Fraction-free (Bareiss) determinant. Input is copied.
inline Int det(Mat m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: matrix not square");
  const int n = m.rows;
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int r = k; r < n; ++r)
      if (m.at(r, k) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      for (int c = k; c < n; ++c) std::swap(m.at(piv, c), m.at(k, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

// Smith normal form U*M*V = D with unimodular U, V and their exact inverses.
// D is diagonal, nonnegative, with d_1 | d_2 | ... | d_rank.
struct SnfResult {
  Mat d, u, uinv, v, vinv;
  int rank = 0;

  std::vector<Int> invariant_factors() const {
    std::vector<Int> f;
    for (int t = 0; t < rank; ++t) f.push_back(d.at(t, t));
    return f;
  }
};

namespace detail {

// Row/column operation helpers that keep the transform pairs in sync.
// Invariants maintained throughout: u*m0*v = d, u*uinv = I, v*vinv = I.
struct SnfOps {
  Mat& d;
  Mat& u;
  Mat& uinv;
  Mat& v;
  Mat& vinv;

  void row_swap(int r1, int r2) {
    if (r1 == r2) return;
    for (int c = 0; c < d.cols; ++c) std::swap(d.at(r1, c), d.at(r2, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(r1, c), u.at(r2, c));
    for (int r = 0; r < uinv.rows; ++r) std::swap(uinv.at(r, r1), uinv.at(r, r2));
  }
  void col_swap(int c1, int c2) {
    if (c1 == c2) return;
    for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, c1), d.at(r, c2));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, c1), v.at(r, c2));
    for (int c = 0; c < vinv.cols; ++c) std::swap(vinv.at(c1, c), vinv.at(c2, c));
  }
  // row r -= q * row s
  void row_sub(int r, int s, const Int& q) {
    if (q == 0) return;
    for (int c = 0; c < d.cols; ++c) d.at(r, c) -= q * d.at(s, c);
    for (int c = 0; c < u.cols; ++c) u.at(r, c) -= q * u.at(s, c);
    for (int i = 0; i < uinv.rows; ++i) uinv.at(i, s) += q * uinv.at(i, r);
  }
  // col c -= q * col s
  void col_sub(int c, int s, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < d.rows; ++r) d.at(r, c) -= q * d.at(r, s);
    for (int r = 0; r < v.rows; ++r) v.at(r, c) -= q * v.at(r, s);
    for (int j = 0; j < vinv.cols; ++j) vinv.at(s, j) += q * vinv.at(c, j);
  }
  void row_negate(int r) {
    for (int c = 0; c < d.cols; ++c) d.at(r, c) = -d.at(r, c);
    for (int c = 0; c < u.cols; ++c) u.at(r, c) = -u.at(r, c);
    for (int i = 0; i < uinv.rows; ++i) uinv.at(i, r) = -uinv.at(i, r);
  }
};

}  // namespace detail

inline SnfResult smith_normal_form(const Mat& m0) {
  SnfResult res;
  res.d = m0;
  res.u = Mat::identity(m0.rows);
  res.uinv = Mat::identity(m0.rows);
  res.v = Mat::identity(m0.cols);
  res.vinv = Mat::identity(m0.cols);
  Mat& d = res.d;
  detail::SnfOps ops{res.d, res.u, res.uinv, res.v, res.vinv};

  const int lim = std::min(m0.rows, m0.cols);
  int t = 0;
  for (; t < lim; ++t) {
    // Pivot: absolutely smallest nonzero entry of the trailing submatrix.
    int pr = -1, pc = -1;
    for (int r = t; r < d.rows; ++r)
      for (int c = t; c < d.cols; ++c) {
        if (d.at(r, c) == 0) continue;
        if (pr < 0 || mpz_cmpabs(d.at(r, c).get_mpz_t(), d.at(pr, pc).get_mpz_t()) < 0) {
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;
    ops.row_swap(t, pr);
    ops.col_swap(t, pc);

    for (bool settled = false; !settled;) {
      settled = true;
      // Clear column t; a nonzero remainder becomes the new, smaller pivot.
      for (int r = t + 1; r < d.rows; ++r) {
        if (d.at(r, t) == 0) continue;
        Int q = d.at(r, t) / d.at(t, t);
        ops.row_sub(r, t, q);
        if (d.at(r, t) != 0) {
          ops.row_swap(t, r);
          settled = false;
        }
      }
      for (int c = t + 1; c < d.cols; ++c) {
        if (d.at(t, c) == 0) continue;
        Int q = d.at(t, c) / d.at(t, t);
        ops.col_sub(c, t, q);
        if (d.at(t, c) != 0) {
          ops.col_swap(t, c);
          settled = false;
        }
      }
      if (!settled) continue;
      // Pivot must divide the whole trailing submatrix for the divisor chain.
      for (int r = t + 1; r < d.rows && settled; ++r)
        for (int c = t + 1; c < d.cols && settled; ++c)
          if (d.at(r, c) % d.at(t, t) != 0) {
            ops.row_sub(t, r, Int(-1));  // pulls the offending row into row t
            settled = false;
          }
    }
    if (d.at(t, t) < 0) ops.row_negate(t);
  }
  res.rank = t;
  return res;
}

// Basis of the saturated lattice { x : M x = 0 }, one vector per column.
// Columns of V beyond the SNF rank extend to a basis of Z^cols, so the
// returned lattice is a direct summand (saturation comes for free).
inline std::vector<std::vector<Int>> integer_kernel(const Mat& m) {
  SnfResult s = smith_normal_form(m);
  std::vector<std::vector<Int>> basis;
  for (int c = s.rank; c < m.cols; ++c) basis.push_back(s.v.column(c));
  return basis;
}

// Solves K x = b over the rationals; nullopt if inconsistent.
inline std::optional<std::vector<Rat>> solve_rational(const Mat& k, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != k.rows) throw std::invalid_argument("solve_rational: shape");
  const int rows = k.rows, cols = k.cols;
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m[r][c] = Rat(k.at(r, c));
    m[r][cols] = Rat(b[r]);
  }
  std::vector<int> pivot_col(rows, -1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    Rat inv = 1 / m[rank][c];
    for (int j = c; j <= cols; ++j) m[rank][j] *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rat f = m[r][c];
      for (int j = c; j <= cols; ++j) m[r][j] -= f * m[rank][j];
    }
    pivot_col[rank] = c;
    ++rank;
  }
  for (int r = rank; r < rows; ++r)
    if (m[r][cols] != 0) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (int r = 0; r < rank; ++r) x[pivot_col[r]] = m[r][cols];
  return x;
}

// Exact rank over the rationals.
inline int rank_rational(const Mat& k) {
  const int rows = k.rows, cols = k.cols;
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m[r][c] = Rat(k.at(r, c));
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c] / m[rank][c];
      for (int j = c; j < cols; ++j) m[r][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

// True iff the two integer lattices (given by basis vectors) coincide.
inline bool lattice_equal(const std::vector<std::vector<Int>>& ba,
                          const std::vector<std::vector<Int>>& bb) {
  if (ba.size() != bb.size()) return false;
  if (ba.empty()) return true;
  auto contains = [](const std::vector<std::vector<Int>>& basis,
                     const std::vector<std::vector<Int>>& vecs) {
    const int dim = static_cast<int>(basis[0].size());
    Mat k(dim, static_cast<int>(basis.size()));
    for (int c = 0; c < k.cols; ++c)
      for (int r = 0; r < dim; ++r) k.at(r, c) = basis[c][r];
    for (const auto& v : vecs) {
      if (static_cast<int>(v.size()) != dim) return false;
      auto x = solve_rational(k, v);
      if (!x) return false;
      for (const Rat& xi : *x)
        if (xi.get_den() != 1) return false;
    }
    return true;
  };
  return contains(ba, bb) && contains(bb, ba);
}

// Searches for an integer matrix xi with xi*A = B and |det xi| = 1.
// When no such map exists the note records the obstruction.
struct UnimodularResult {
  std::optional<Mat> xi;
  std::string note;
};

inline UnimodularResult find_unimodular_map(const Mat& a, const Mat& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("find_unimodular_map: shape mismatch");
  const int s = a.rows;
  SnfResult sa = smith_normal_form(a);
  const int r = sa.rank;
  Mat bv = b * sa.v;
  for (int c = r; c < bv.cols; ++c)
    for (int i = 0; i < s; ++i)
      if (bv.at(i, c) != 0) return {std::nullopt, "kernel of A is not contained in kernel of B"};
  // xi is pinned on the first r columns of Uinv: xi * uinv_col(i) = bv_col(i)/d_i.
  Mat eta(s, s);
  for (int c = 0; c < r; ++c) {
    const Int& dc = sa.d.at(c, c);
    for (int i = 0; i < s; ++i) {
      if (bv.at(i, c) % dc != 0)
        return {std::nullopt, "forced image is not integral (invariant factor " + dc.get_str() + ")"};
      eta.at(i, c) = bv.at(i, c) / dc;
    }
  }
  if (r < s) {
    Mat eta_r(s, r);
    for (int c = 0; c < r; ++c)
      for (int i = 0; i < s; ++i) eta_r.at(i, c) = eta.at(i, c);
    SnfResult se = smith_normal_form(eta_r);
    if (se.rank < r) return {std::nullopt, "forced columns are linearly dependent"};
    for (const Int& f : se.invariant_factors())
      if (f != 1)
        return {std::nullopt, "forced column lattice is not a direct summand (invariant factor " +
                                  f.get_str() + ")"};
    // Complete with preimages of the missing unit vectors.
    for (int c = r; c < s; ++c)
      for (int i = 0; i < s; ++i) eta.at(i, c) = se.uinv.at(i, c);
  }
  Mat xi = eta * sa.u;
  Int dx = det(xi);
  if (dx != 1 && dx != -1) {
    if (r == s)
      return {std::nullopt, "map is fully determined with determinant " + dx.get_str()};
    throw invariant_error("find_unimodular_map: completion lost unimodularity");
  }
  if (!(xi * a == b)) throw invariant_error("find_unimodular_map: verification xi*A = B failed");
  return {xi, ""};
}

// Strict homogeneous feasibility: find integer w with row . w > 0 for every
// row, by Fourier-Motzkin elimination. Returns nullopt when infeasible.
inline std::optional<std::vector<Int>> strict_lp_feasible(
    const std::vector<std::vector<Int>>& rows_in) {
  if (rows_in.empty()) return std::vector<Int>{};
  const int d = static_cast<int>(rows_in[0].size());

  auto normalized = [](std::vector<Int> row) -> std::optional<std::vector<Int>> {
    Int g = 0;
    for (const Int& x : row) g = gcd(g, x);
    if (g == 0) return std::nullopt;  // 0 > 0, infeasible row
    if (g > 1)
      for (Int& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return row;
  };

  std::set<std::vector<Int>> cur;
  for (const auto& row : rows_in) {
    if (static_cast<int>(row.size()) != d) throw std::invalid_argument("strict_lp_feasible: width");
    auto nr = normalized(row);
    if (!nr) return std::nullopt;
    cur.insert(*nr);
  }

  struct Level {
    int var;
    std::vector<std::vector<Int>> rows;
  };
  std::vector<Level> levels;
  std::vector<int> remaining(d);
  for (int i = 0; i < d; ++i) remaining[i] = i;

  while (!remaining.empty()) {
    // Eliminate the variable with the fewest sign-pair combinations.
    int best = -1;
    long long best_cost = -1;
    for (int v : remaining) {
      long long pos = 0, neg = 0;
      for (const auto& row : cur) {
        if (row[v] > 0) ++pos;
        if (row[v] < 0) ++neg;
      }
      long long cost = pos * neg;
      if (best < 0 || cost < best_cost) {
        best = v;
        best_cost = cost;
      }
    }
    const int v = best;
    levels.push_back({v, {cur.begin(), cur.end()}});

    std::set<std::vector<Int>> next;
    std::vector<const std::vector<Int>*> pos, neg;
    for (const auto& row : cur) {
      if (row[v] > 0)
        pos.push_back(&row);
      else if (row[v] < 0)
        neg.push_back(&row);
      else
        next.insert(row);
    }
    for (const auto* p : pos)
      for (const auto* q : neg) {
        std::vector<Int> comb(d);
        const Int& ap = (*p)[v];
        Int aq = -(*q)[v];
        for (int i = 0; i < d; ++i) comb[i] = aq * (*p)[i] + ap * (*q)[i];
        auto nr = normalized(std::move(comb));
        if (!nr) return std::nullopt;
        next.insert(*nr);
      }
    guard_bytes(next.size() * static_cast<std::size_t>(d) * 16, "Fourier-Motzkin system");
    cur = std::move(next);
    remaining.erase(std::find(remaining.begin(), remaining.end(), v));
  }
  if (!cur.empty()) return std::nullopt;  // leftover rows are 0 > 0

  // Back substitution; each level admits an open rational interval.
  std::vector<Rat> x(d, Rat(0));
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    const int v = it->var;
    bool has_lo = false, has_hi = false;
    Rat lo, hi;
    for (const auto& row : it->rows) {
      if (row[v] == 0) continue;
      Rat rest(0);
      for (int i = 0; i < d; ++i)
        if (i != v && row[i] != 0) rest += Rat(row[i]) * x[i];
      Rat bound = -rest / Rat(row[v]);
      if (row[v] > 0) {
        if (!has_lo || bound > lo) lo = bound;
        has_lo = true;
      } else {
        if (!has_hi || bound < hi) hi = bound;
        has_hi = true;
      }
    }
    if (has_lo && has_hi) {
      if (!(lo < hi)) throw invariant_error("strict_lp_feasible: empty interval after elimination");
      x[v] = (lo + hi) / 2;
    } else if (has_lo) {
      x[v] = lo + 1;
    } else if (has_hi) {
      x[v] = hi - 1;
    }
  }
  Int scale = 1;
  for (const Rat& xi : x) scale = lcm(scale, Int(xi.get_den()));
  std::vector<Int> w(d);
  for (int i = 0; i < d; ++i) {
    Rat scaled = x[i] * Rat(scale);
    w[i] = scaled.get_num();
  }
  for (const auto& row : rows_in) {
    Int dot = 0;
    for (int i = 0; i < d; ++i) dot += row[i] * w[i];
    if (dot <= 0) throw invariant_error("strict_lp_feasible: witness failed re-verification");
  }
  return w;
}

// Phase-1 simplex feasibility for: is rhs a nonnegative combination of the
// columns of g with coefficients summing to 1? Exact over the rationals,
// Bland's rule on both pivots, so termination is guaranteed.
inline bool convex_combination_exists(const std::vector<std::vector<Rat>>& gens,
                                      const std::vector<Rat>& point) {
  const int m = static_cast<int>(gens.size());
  const int dim = static_cast<int>(point.size());
  if (m == 0) return false;
  const int rows = dim + 1;
  const int cols = m + rows;  // lambda columns then artificial columns
  std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(cols + 1, Rat(0)));
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < m; ++c) t[r][c] = gens[c][r];
    t[r][cols] = point[r];
  }
  for (int c = 0; c < m; ++c) t[dim][c] = 1;
  t[dim][cols] = 1;
  for (int r = 0; r < rows; ++r) {
    if (t[r][cols] < 0)
      for (int c = 0; c <= cols; ++c) t[r][c] = -t[r][c];
    t[r][m + r] = 1;
  }
  std::vector<int> basis(rows);
  for (int r = 0; r < rows; ++r) basis[r] = m + r;

  auto cost = [&](int col) { return col >= m ? Rat(1) : Rat(0); };
  while (true) {
    // Reduced costs via the simplex multipliers of the artificial objective.
    int enter = -1;
    for (int c = 0; c < cols && enter < 0; ++c) {
      Rat z(0);
      for (int r = 0; r < rows; ++r)
        if (basis[r] >= m) z += t[r][c];
      if (z - cost(c) > 0) enter = c;  // Bland: first eligible index
    }
    if (enter < 0) break;
    int leave = -1;
    Rat best_ratio(0);
    for (int r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      Rat ratio = t[r][cols] / t[r][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave < 0) throw invariant_error("convex_combination_exists: unbounded phase-1");
    Rat piv = t[leave][enter];
    for (int c = 0; c <= cols; ++c) t[leave][c] /= piv;
    for (int r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      Rat f = t[r][enter];
      for (int c = 0; c <= cols; ++c) t[r][c] -= f * t[leave][c];
    }
    basis[leave] = enter;
  }
  for (int r = 0; r < rows; ++r)
    if (basis[r] >= m && t[r][cols] != 0) return false;
  return true;
}

}  // namespace mcop
