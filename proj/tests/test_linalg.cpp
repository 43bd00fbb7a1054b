#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mcop/linalg.hpp"

using namespace mcop;

namespace {

Mat make(int rows, int cols, std::initializer_list<long> vals) {
  Mat m(rows, cols);
  auto it = vals.begin();
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = Int(*it++);
  return m;
}

Mat random_mat(std::mt19937& gen, int rows, int cols) {
  std::uniform_int_distribution<int> dist(-5, 5);
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = Int(dist(gen));
  return m;
}

void check_snf_contract(const Mat& m) {
  SnfResult se = smith_normal_form(m);
  REQUIRE(se.u * m * se.v == se.d);
  REQUIRE(se.u * se.uinv == Mat::identity(m.rows));
  REQUIRE(se.v * se.vinv == Mat::identity(m.cols));
  Int du = det(se.u), dv = det(se.v);
  REQUIRE((du == 1 || du == -1));
  REQUIRE((dv == 1 || dv == -1));
  std::vector<Int> inv = se.invariant_factors();
  for (std::size_t t = 0; t + 1 < inv.size(); ++t) {
    if (inv[t] == 0)
      REQUIRE(inv[t + 1] == 0);
    else
      REQUIRE(inv[t + 1] % inv[t] == 0);
  }
  for (const Int& f : inv) REQUIRE(f >= 0);
  REQUIRE(se.rank == rank_rational(m));
}

}  // namespace

TEST_CASE("determinant, fraction-free") {
  REQUIRE(det(Mat::identity(3)) == 1);
  REQUIRE(det(make(2, 2, {1, 2, 3, 4})) == -2);
  REQUIRE(det(make(2, 2, {2, 4, 1, 2})) == 0);
  REQUIRE(det(make(3, 3, {2, 0, 1, 1, 1, 0, 0, 3, 1})) == 5);
}

TEST_CASE("smith normal form on pinned inputs") {
  SnfResult se = smith_normal_form(make(2, 2, {2, 0, 0, 3}));
  REQUIRE(se.d == make(2, 2, {1, 0, 0, 6}));
  se = smith_normal_form(Mat::identity(3));
  REQUIRE(se.d == Mat::identity(3));
  se = smith_normal_form(Mat(2, 3));
  REQUIRE(se.d.is_zero());
  REQUIRE(se.rank == 0);
}

TEST_CASE("smith normal form contract on random matrices") {
  std::mt19937 gen(7);
  for (auto [r, c] : {std::pair{3, 3}, {3, 5}, {5, 3}, {4, 4}, {1, 6}, {6, 1}})
    for (int rep = 0; rep < 4; ++rep) check_snf_contract(random_mat(gen, r, c));
}

TEST_CASE("integer kernel is correct and saturated") {
  REQUIRE(integer_kernel(Mat::identity(4)).empty());

  auto k1 = integer_kernel(make(1, 2, {1, 1}));
  REQUIRE(k1.size() == 1);
  REQUIRE((k1[0] == std::vector<Int>{Int(1), Int(-1)} ||
           k1[0] == std::vector<Int>{Int(-1), Int(1)}));

  // saturated: (2,-1), not a proper multiple like (4,-2)
  auto k2 = integer_kernel(make(2, 2, {2, 4, 1, 2}));
  REQUIRE(k2.size() == 1);
  REQUIRE((k2[0] == std::vector<Int>{Int(2), Int(-1)} ||
           k2[0] == std::vector<Int>{Int(-2), Int(1)}));

  std::mt19937 gen(11);
  for (int rep = 0; rep < 8; ++rep) {
    Mat m = random_mat(gen, 3, 6);
    auto ker = integer_kernel(m);
    REQUIRE(static_cast<int>(ker.size()) == 6 - rank_rational(m));
    Mat kb(6, static_cast<int>(ker.size()));
    for (int c = 0; c < kb.cols; ++c)
      for (int r = 0; r < 6; ++r) kb.at(r, c) = ker[c][r];
    for (const auto& v : ker)
      for (int r = 0; r < 3; ++r) {
        Int acc = 0;
        for (int c = 0; c < 6; ++c) acc += m.at(r, c) * v[c];
        REQUIRE(acc == 0);
      }
    // basis is primitive: all invariant factors 1
    if (!ker.empty())
      for (const Int& f : smith_normal_form(kb).invariant_factors()) REQUIRE(f == 1);
  }
}

TEST_CASE("rational solve and lattice comparison") {
  auto x = solve_rational(make(2, 2, {1, 1, 0, 1}), {Int(3), Int(1)});
  REQUIRE(x.has_value());
  REQUIRE((*x)[0] == Rat(2));
  REQUIRE((*x)[1] == Rat(1));
  REQUIRE_FALSE(solve_rational(make(2, 1, {1, 1}), {Int(1), Int(2)}).has_value());

  std::vector<std::vector<Int>> a = {{Int(1), Int(-1)}};
  std::vector<std::vector<Int>> b = {{Int(-1), Int(1)}};
  std::vector<std::vector<Int>> c = {{Int(2), Int(-2)}};
  REQUIRE(lattice_equal(a, b));
  REQUIRE_FALSE(lattice_equal(a, c));
}

TEST_CASE("unimodular map solving") {
  // already equal: identity works
  Mat a = Mat::identity(3);
  UnimodularResult res = find_unimodular_map(a, a);
  REQUIRE(res.xi.has_value());
  REQUIRE(*res.xi * a == a);

  // 2x = 1 has no integer solution
  res = find_unimodular_map(make(1, 1, {2}), make(1, 1, {1}));
  REQUIRE_FALSE(res.xi.has_value());

  // single column (1,1) -> (1,0): completable
  res = find_unimodular_map(make(2, 1, {1, 1}), make(2, 1, {1, 0}));
  REQUIRE(res.xi.has_value());
  REQUIRE(*res.xi * make(2, 1, {1, 1}) == make(2, 1, {1, 0}));
  Int d = det(*res.xi);
  REQUIRE((d == 1 || d == -1));

  // kernel of A not inside kernel of B: impossible
  res = find_unimodular_map(make(1, 2, {1, 1}), make(1, 2, {1, 2}));
  REQUIRE_FALSE(res.xi.has_value());
}

TEST_CASE("strict homogeneous feasibility") {
  auto w = strict_lp_feasible({{Int(1)}});
  REQUIRE(w.has_value());
  REQUIRE((*w)[0] > 0);

  REQUIRE_FALSE(strict_lp_feasible({{Int(1), Int(-1)}, {Int(-1), Int(1)}}).has_value());

  // x1 > x2 > x3 > 0
  auto w3 = strict_lp_feasible(
      {{Int(1), Int(-1), Int(0)}, {Int(0), Int(1), Int(-1)}, {Int(0), Int(0), Int(1)}});
  REQUIRE(w3.has_value());
  REQUIRE((*w3)[0] > (*w3)[1]);
  REQUIRE((*w3)[1] > (*w3)[2]);
  REQUIRE((*w3)[2] > 0);

  REQUIRE(strict_lp_feasible({}).has_value());
}

TEST_CASE("convex hull membership by exact LP") {
  std::vector<std::vector<Rat>> gens = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  REQUIRE(convex_combination_exists(gens, {Rat(1), Rat(0)}));
  REQUIRE(convex_combination_exists(gens, {Rat(1, 2), Rat(1, 4)}));
  REQUIRE(convex_combination_exists(gens, {Rat(1, 2), Rat(1, 2)}));
  REQUIRE_FALSE(convex_combination_exists(gens, {Rat(3, 5), Rat(3, 5)}));
  REQUIRE_FALSE(convex_combination_exists(gens, {Rat(-1, 10), Rat(0)}));
}
