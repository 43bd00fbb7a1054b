#pragma once

#include <array>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "poset.hpp"

namespace mcop {

// Permutation of the pipe domain: [1..n] for kind A, N for kind C. images[r-1]
// is the image of the domain value with column rank r, stored as a value.
using Perm = std::vector<int>;

inline Perm identity_perm(const Poset& p) {
  Perm w(p.domain_size());
  for (int r = 1; r <= p.domain_size(); ++r) w[r - 1] = p.col_value(r);
  return w;
}

inline int perm_apply(const Poset& p, const Perm& w, int value) {
  int r = p.col_rank(value);
  if (r < 1 || r > p.domain_size())
    throw std::invalid_argument("perm_apply: value outside domain");
  return w[r - 1];
}

// (f o g): g acts first.
inline Perm perm_compose(const Poset& p, const Perm& f, const Perm& g) {
  Perm w(p.domain_size());
  for (int r = 1; r <= p.domain_size(); ++r) w[r - 1] = perm_apply(p, f, g[r - 1]);
  return w;
}

inline Perm perm_inverse(const Poset& p, const Perm& w) {
  Perm inv(p.domain_size());
  for (int r = 1; r <= p.domain_size(); ++r) inv[p.col_rank(w[r - 1]) - 1] = p.col_value(r);
  return inv;
}

inline std::string one_line(const Perm& w) {
  std::ostringstream out;
  out << "(";
  for (std::size_t t = 0; t < w.size(); ++t) out << (t ? "," : "") << w[t];
  out << ")";
  return out.str();
}

// w_M: product of the transpositions s_{i,j} over (i,j) in M, read in the
// canonical element order, with the rightmost factor acting first. Both
// conventions were tried against the reference values (4,3,1,2) and
// (-2,1,-3,2,3,-1); only rightmost-first reproduces them.
inline Perm perm_from_set(const Poset& p, std::uint64_t m_mask) {
  if ((m_mask & ~p.full_mask()) != 0)
    throw std::invalid_argument("perm_from_set: mask has bits outside the poset");
  Perm w = identity_perm(p);
  for (int idx = 0; idx < p.size(); ++idx) {
    if (!((m_mask >> idx) & 1)) continue;
    const Elem& e = p.element(idx);
    // Appending s_{i,j} on the right swaps the one-line entries at the two
    // column ranks.
    std::swap(w[p.col_rank(e.i) - 1], w[p.col_rank(e.j) - 1]);
  }
  return w;
}

// w^O_M = w_O^{-1} o w_M.
inline Perm twisted_perm(const Poset& p, std::uint64_t o_mask, std::uint64_t m_mask) {
  return perm_compose(p, perm_inverse(p, perm_from_set(p, o_mask)), perm_from_set(p, m_mask));
}

// Diagrammatic form: one pipe per domain value. A pipe moves either leftward
// along its row (toward smaller column rank) or upward along its column
// (toward smaller i); it changes direction at every element of M u A. Pipe v>0
// enters at the right end of row v moving leftward; for kind C pipe -v enters
// the same element (v,-v) moving upward. The pipe leaves the grid above row 1
// and the column where this happens is w_M(v).
struct PipePath {
  int start_value = 0;
  int end_value = 0;
  std::vector<Elem> cells;
};

namespace detail {

inline PipePath trace_one(const Poset& p, std::uint64_t turn_mask, int start_value, Elem cur,
                          bool row_phase) {
  PipePath path;
  path.start_value = start_value;
  for (;;) {
    path.cells.push_back(cur);
    if ((turn_mask >> p.index(cur.i, cur.j)) & 1) row_phase = !row_phase;
    if (row_phase) {
      cur.j = p.col_value(p.col_rank(cur.j) - 1);  // (i,i) always turns, so rank > i here
    } else {
      if (cur.i == 1) {
        path.end_value = cur.j;
        return path;
      }
      cur.i -= 1;
    }
  }
}

}  // namespace detail

// Paths in domain order.
inline std::vector<PipePath> trace_pipes(const Poset& p, std::uint64_t m_mask) {
  if ((m_mask & ~p.full_mask()) != 0)
    throw std::invalid_argument("trace_pipes: mask has bits outside the poset");
  const std::uint64_t turn_mask = m_mask | p.diagonal_mask();
  std::vector<PipePath> paths;
  for (int v : p.domain_values()) {
    const int row = std::abs(v);
    const int right = p.kind() == Kind::A ? p.n() : -row;
    paths.push_back(detail::trace_one(p, turn_mask, v, {row, right}, v > 0));
  }
  return paths;
}

inline Perm trace_perm(const Poset& p, std::uint64_t m_mask) {
  Perm w(p.domain_size());
  for (const PipePath& path : trace_pipes(p, m_mask))
    w[p.col_rank(path.start_value) - 1] = path.end_value;
  return w;
}

// (w^J(1),...,w^J(k)) for J in the k-th stratum, where w^J is the twisted
// permutation of M_O(J).
inline std::vector<int> ideal_tuple(const Poset& p, std::uint64_t o_mask, const Ideal& j) {
  Perm w = twisted_perm(p, o_mask, marked_set(p, o_mask, j));
  std::vector<int> tuple(j.stratum);
  for (int t = 1; t <= j.stratum; ++t) tuple[t - 1] = w[t - 1];  // values 1..k have ranks 1..k
  return tuple;
}

// Sort a tuple into column order, tracking the sign of the sorting
// permutation. Returns sign 0 if two entries coincide.
struct CanonicalTuple {
  std::vector<int> sorted;
  int sign = 1;
};

inline CanonicalTuple canonical_tuple(const Poset& p, std::vector<int> tuple) {
  CanonicalTuple out;
  for (std::size_t t = 0; t < tuple.size(); ++t) {
    std::size_t s = t;
    while (s > 0 && p.col_rank(tuple[s]) < p.col_rank(tuple[s - 1])) {
      std::swap(tuple[s], tuple[s - 1]);
      out.sign = -out.sign;
      --s;
    }
    if (s > 0 && tuple[s] == tuple[s - 1]) {
      out.sign = 0;
      break;
    }
  }
  out.sorted = std::move(tuple);
  return out;
}

// A tuple of distinct values of N is admissible if for every l in [1,n] at
// most l entries have absolute value <= l.
inline bool is_admissible(int n, const std::vector<int>& tuple) {
  for (int v : tuple)
    if (v == 0 || std::abs(v) > n) throw std::invalid_argument("is_admissible: entry outside N");
  for (int l = 1; l <= n; ++l) {
    int cnt = 0;
    for (int v : tuple)
      if (std::abs(v) <= l) ++cnt;
    if (cnt > l) return false;
  }
  return true;
}

// Sorted k-tuples expected to be hit by ideal_tuple over the k-th stratum:
// all increasing k-tuples from [1,n] for kind A, the admissible sorted tuples
// (Theta_k) for kind C.
inline std::vector<std::vector<int>> expected_tuples(const Poset& p, int k) {
  std::vector<std::vector<int>> out;
  const std::vector<int> vals = p.domain_values();
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(pick.size()) == k) {
      if (p.kind() == Kind::A || is_admissible(p.n(), pick)) out.push_back(pick);
      return;
    }
    for (std::size_t t = from; t < vals.size(); ++t) {
      pick.push_back(vals[t]);
      self(self, t + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

struct TupleBijectionReport {
  bool ok = true;
  int ideal_count = 0;
  int expected_count = 0;
  std::vector<std::string> problems;
};

// Checks that J -> sorted ideal_tuple(O, J) is a bijection from the k-th
// stratum onto the expected tuple set, and that every entry satisfies the
// entry bound w^J(i) >= i (|w^J(i)| >= i for kind C).
inline TupleBijectionReport tuple_bijection_check(const Poset& p, std::uint64_t o_mask, int k,
                                                  const std::vector<Ideal>& stratum) {
  TupleBijectionReport rep;
  rep.ideal_count = static_cast<int>(stratum.size());
  std::vector<std::vector<int>> seen;
  for (const Ideal& j : stratum) {
    std::vector<int> tuple = ideal_tuple(p, o_mask, j);
    for (int t = 1; t <= k; ++t)
      if (std::abs(tuple[t - 1]) < t) {
        rep.ok = false;
        rep.problems.push_back("entry bound fails at position " + std::to_string(t) +
                               " of tuple " + one_line(tuple));
      }
    CanonicalTuple canon = canonical_tuple(p, tuple);
    if (canon.sign == 0) {
      rep.ok = false;
      rep.problems.push_back("repeated entry in tuple " + one_line(tuple));
      continue;
    }
    if (p.kind() == Kind::C && !is_admissible(p.n(), canon.sorted)) {
      rep.ok = false;
      rep.problems.push_back("inadmissible tuple " + one_line(tuple));
    }
    seen.push_back(canon.sorted);
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t t = 1; t < seen.size(); ++t)
    if (seen[t] == seen[t - 1]) {
      rep.ok = false;
      rep.problems.push_back("tuple hit twice: " + one_line(seen[t]));
    }
  std::vector<std::vector<int>> expect = expected_tuples(p, k);
  rep.expected_count = static_cast<int>(expect.size());
  std::sort(expect.begin(), expect.end());
  if (seen != expect) {
    rep.ok = false;
    for (const auto& tuple : expect)
      if (!std::binary_search(seen.begin(), seen.end(), tuple))
        rep.problems.push_back("tuple never hit: " + one_line(tuple));
  }
  return rep;
}

// Kind C sits inside kind A of doubled rank: element (i,j) maps to (i,j) for
// j>0 and to (i,2n+1+j) for j<0, domain value -m maps to 2n+1-m. The pipes of
// the doubled-rank dream end with the pipes of the original dream under this
// identification.
inline Elem c_elem_in_a(int n, const Elem& e) {
  return {e.i, e.j > 0 ? e.j : 2 * n + 1 + e.j};
}
inline int c_value_in_a(int n, int v) { return v > 0 ? v : 2 * n + 1 + v; }
inline int a_value_in_c(int n, int v) { return v <= n ? v : v - (2 * n + 1); }

inline bool embedding_check_C_in_A(int n, std::uint64_t m_mask) {
  const Poset pc = build_poset(Kind::C, n);
  const Poset pa = build_poset(Kind::A, 2 * n);
  std::uint64_t a_mask = 0;
  for (int idx = 0; idx < pc.size(); ++idx)
    if ((m_mask >> idx) & 1) {
      Elem e = c_elem_in_a(n, pc.element(idx));
      a_mask |= 1ull << pa.index(e.i, e.j);
    }
  std::vector<PipePath> cpaths = trace_pipes(pc, m_mask);
  std::vector<PipePath> apaths = trace_pipes(pa, a_mask);
  Perm walg = perm_from_set(pc, m_mask);
  for (const PipePath& cp : cpaths) {
    const PipePath& ap = apaths[c_value_in_a(n, cp.start_value) - 1];
    if (a_value_in_c(n, ap.end_value) != cp.end_value) return false;
    if (perm_apply(pc, walg, cp.start_value) != cp.end_value) return false;
    // the original path must be the tail of the doubled-rank path
    if (ap.cells.size() < cp.cells.size()) return false;
    std::size_t off = ap.cells.size() - cp.cells.size();
    for (std::size_t t = 0; t < cp.cells.size(); ++t)
      if (!(c_elem_in_a(n, cp.cells[t]) == ap.cells[off + t])) return false;
  }
  return true;
}

// Rendering. Row-major grid, one character cell per element:
//   'o' element of M u A where some pipe changes direction
//   '+' crossing (one pipe passes horizontally, one vertically)
//   '-' / '|' a single pipe passes
//   'x' element of M no pipe touches, 'a' untouched diagonal, '.' otherwise
// Colors and geometry are deterministic functions of the input.
enum class RenderFormat { Ascii, Svg };

namespace detail {

struct CellUse {
  bool horiz = false;
  bool vert = false;
  bool turn = false;
};

inline std::vector<CellUse> cell_uses(const Poset& p, std::uint64_t m_mask,
                                      const std::vector<PipePath>& paths) {
  const std::uint64_t turn_mask = m_mask | p.diagonal_mask();
  std::vector<CellUse> use(p.size());
  for (const PipePath& path : paths) {
    bool row_phase = path.start_value > 0;
    for (const Elem& e : path.cells) {
      int idx = p.index(e.i, e.j);
      bool turn = (turn_mask >> idx) & 1;
      if (turn) {
        use[idx].turn = true;
        row_phase = !row_phase;
      } else {
        (row_phase ? use[idx].horiz : use[idx].vert) = true;
      }
    }
  }
  return use;
}

inline const std::array<const char*, 12>& pipe_palette() {
  static const std::array<const char*, 12> palette = {
      "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
      "#17becf", "#e377c2", "#7f7f7f", "#bcbd22", "#00441b", "#4a1486"};
  return palette;
}

}  // namespace detail

inline std::string render_ascii(const Poset& p, std::uint64_t m_mask) {
  std::vector<PipePath> paths = trace_pipes(p, m_mask);
  std::vector<detail::CellUse> use = detail::cell_uses(p, m_mask, paths);
  const int width = p.kind() == Kind::A ? 3 : 4;
  std::ostringstream out;
  auto pad = [&](std::string s) {
    while (static_cast<int>(s.size()) < width) s += ' ';
    return s;
  };
  out << pad("");
  for (int r = 1; r <= p.domain_size(); ++r) out << pad(std::to_string(p.col_value(r)));
  out << "\n";
  for (int i = 1; i <= p.n(); ++i) {
    out << pad(std::to_string(i));
    for (int r = 1; r <= p.domain_size(); ++r) {
      int j = p.col_value(r);
      if (!p.contains(i, j)) {
        out << pad("");
        continue;
      }
      int idx = p.index(i, j);
      char c = '.';
      if (use[idx].turn)
        c = 'o';
      else if (use[idx].horiz && use[idx].vert)
        c = '+';
      else if (use[idx].horiz)
        c = '-';
      else if (use[idx].vert)
        c = '|';
      else if ((m_mask >> idx) & 1)
        c = 'x';
      else if (i == j)
        c = 'a';
      out << pad(std::string(1, c));
    }
    out << "\n";
  }
  out << "w = " << one_line(trace_perm(p, m_mask)) << "\n";
  return out.str();
}

inline std::string render_svg(const Poset& p, std::uint64_t m_mask) {
  std::vector<PipePath> paths = trace_pipes(p, m_mask);
  const int cell = 48, margin = 56;
  const int w = margin * 2 + cell * p.domain_size();
  const int h = margin * 2 + cell * p.n();
  auto cx = [&](int j) { return margin + cell * (p.col_rank(j) - 1) + cell / 2; };
  auto cy = [&](int i) { return margin + cell * (i - 1) + cell / 2; };
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  out << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  for (int idx = 0; idx < p.size(); ++idx) {
    const Elem& e = p.element(idx);
    bool marked = (m_mask >> idx) & 1;
    bool diag = e.i == e.j;
    out << "<circle cx=\"" << cx(e.j) << "\" cy=\"" << cy(e.i) << "\" r=\""
        << (marked ? 7 : 4) << "\" fill=\"" << (marked ? "#222222" : (diag ? "#999999" : "#dddddd"))
        << "\"/>\n";
  }
  for (std::size_t t = 0; t < paths.size(); ++t) {
    const PipePath& path = paths[t];
    const char* color = detail::pipe_palette()[t % detail::pipe_palette().size()];
    std::ostringstream pts;
    const Elem& first = path.cells.front();
    if (path.start_value > 0)
      pts << (cx(first.j) + cell / 2) << "," << cy(first.i) << " ";
    else
      pts << cx(first.j) << "," << (cy(first.i) + cell / 2) << " ";
    for (const Elem& e : path.cells) pts << cx(e.j) << "," << cy(e.i) << " ";
    const Elem& last = path.cells.back();
    pts << cx(last.j) << "," << (cy(last.i) - cell / 2);
    out << "<polyline points=\"" << pts.str() << "\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"3\" stroke-linejoin=\"round\" opacity=\"0.85\"/>\n";
    out << "<text x=\"" << (cx(last.j) + 4) << "\" y=\"" << (cy(last.i) - cell / 2 - 4)
        << "\" font-size=\"14\" font-family=\"monospace\" fill=\"" << color << "\">"
        << path.start_value << "</text>\n";
    int sx = path.start_value > 0 ? cx(first.j) + cell / 2 + 4 : cx(first.j) + 6;
    int sy = path.start_value > 0 ? cy(first.i) - 6 : cy(first.i) + cell / 2;
    out << "<text x=\"" << sx << "\" y=\"" << sy
        << "\" font-size=\"14\" font-family=\"monospace\" fill=\"" << color << "\">"
        << path.start_value << "</text>\n";
  }
  for (int r = 1; r <= p.domain_size(); ++r)
    out << "<text x=\"" << (margin + cell * (r - 1) + cell / 2 - 6) << "\" y=\"" << (margin - 28)
        << "\" font-size=\"15\" font-family=\"monospace\" fill=\"#333333\">" << p.col_value(r)
        << "</text>\n";
  for (int i = 1; i <= p.n(); ++i)
    out << "<text x=\"12\" y=\"" << (cy(i) + 5)
        << "\" font-size=\"15\" font-family=\"monospace\" fill=\"#333333\">" << i << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

inline std::string render_pipe_dream(const Poset& p, std::uint64_t m_mask, RenderFormat format) {
  return format == RenderFormat::Ascii ? render_ascii(p, m_mask) : render_svg(p, m_mask);
}

}  // namespace mcop
