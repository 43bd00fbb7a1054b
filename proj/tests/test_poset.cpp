#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "mcop/poset.hpp"

using namespace mcop;

namespace {

std::uint64_t mask_of(const Poset& p, std::initializer_list<std::pair<int, int>> elems) {
  std::uint64_t m = 0;
  for (auto [i, j] : elems) m |= 1ull << p.index(i, j);
  return m;
}

long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

int longest_chain(const Poset& p) {
  std::vector<int> depth(p.size(), 1);
  // canonical order is a linear extension, so one forward pass suffices
  for (int b = 0; b < p.size(); ++b)
    for (int a : p.lower_covers(b)) depth[b] = std::max(depth[b], depth[a] + 1);
  return *std::max_element(depth.begin(), depth.end());
}

}  // namespace

TEST_CASE("poset construction") {
  Poset a2 = build_poset(Kind::A, 2);
  REQUIRE(a2.size() == 3);
  REQUIRE(a2.elements() == std::vector<Elem>{{1, 1}, {1, 2}, {2, 2}});

  Poset a4 = build_poset(Kind::A, 4);
  REQUIRE(a4.size() == 10);

  Poset c2 = build_poset(Kind::C, 2);
  REQUIRE(c2.size() == 6);
  REQUIRE(c2.elements() ==
          std::vector<Elem>{{1, 1}, {1, 2}, {1, -2}, {1, -1}, {2, 2}, {2, -2}});

  Poset c3 = build_poset(Kind::C, 3);
  REQUIRE(c3.size() == 12);

  REQUIRE_THROWS_AS(build_poset(Kind::A, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(build_poset(Kind::C, 0), std::invalid_argument);
}

TEST_CASE("order relation and covers") {
  Poset c2 = build_poset(Kind::C, 2);
  REQUIRE(c2.less_eq(Elem{2, 2}, Elem{2, -2}));
  REQUIRE_FALSE(c2.less_eq(Elem{2, 2}, Elem{1, -2}));
  for (int idx = 0; idx < c2.size(); ++idx) REQUIRE(c2.less_eq(idx, idx));

  std::set<std::pair<int, int>> edges;
  for (int b = 0; b < c2.size(); ++b)
    for (int a : c2.lower_covers(b)) edges.insert({a, b});
  std::set<std::pair<int, int>> expect;
  auto edge = [&](int i1, int j1, int i2, int j2) {
    expect.insert({c2.index(i1, j1), c2.index(i2, j2)});
  };
  edge(1, 1, 1, 2);
  edge(1, 2, 2, 2);
  edge(1, 2, 1, -2);
  edge(2, 2, 2, -2);
  edge(1, -2, 2, -2);
  edge(1, -2, 1, -1);
  REQUIRE(edges == expect);

  // transitivity on all triples, antisymmetry on all pairs
  for (Kind kind : {Kind::A, Kind::C}) {
    Poset p = build_poset(kind, 3);
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y) {
        if (x != y && p.less_eq(x, y)) REQUIRE_FALSE(p.less_eq(y, x));
        for (int z = 0; z < p.size(); ++z)
          if (p.less_eq(x, y) && p.less_eq(y, z)) REQUIRE(p.less_eq(x, z));
      }
  }
}

TEST_CASE("longest chains") {
  for (int n = 2; n <= 4; ++n) {
    REQUIRE(longest_chain(build_poset(Kind::A, n)) == 2 * n - 1);
    REQUIRE(longest_chain(build_poset(Kind::C, n)) == 2 * n);
    REQUIRE(build_poset(Kind::A, n).chain_length() == 2 * n - 1);
    REQUIRE(build_poset(Kind::C, n).chain_length() == 2 * n);
  }
}

TEST_CASE("ideal enumeration, type A binomial counts") {
  for (int n = 2; n <= 6; ++n) {
    Poset p = build_poset(Kind::A, n);
    auto strata = enumerate_ideals(p);
    REQUIRE(static_cast<int>(strata.size()) == n + 1);
    long total = 0;
    for (int k = 0; k <= n; ++k) {
      REQUIRE(static_cast<long>(strata[k].size()) == binom(n, k));
      total += static_cast<long>(strata[k].size());
    }
    REQUIRE(total == (1l << n));
  }
}

TEST_CASE("ideal enumeration, type C counts and exhaustive cross-check") {
  Poset c2 = build_poset(Kind::C, 2);
  auto s2 = enumerate_ideals(c2);
  REQUIRE(s2[0].size() == 1);
  REQUIRE(s2[1].size() == 4);
  REQUIRE(s2[2].size() == 5);

  std::set<std::uint64_t> brute;
  for (std::uint64_t m = 0; m < 64; ++m)
    if (is_down_closed(c2, m)) brute.insert(m);
  std::set<std::uint64_t> enumerated;
  for (const auto& level : s2)
    for (const Ideal& j : level) enumerated.insert(j.mask);
  REQUIRE(brute == enumerated);

  auto s3 = enumerate_ideals(build_poset(Kind::C, 3));
  REQUIRE(s3[0].size() == 1);
  REQUIRE(s3[1].size() == 6);
  REQUIRE(s3[2].size() == 14);
  REQUIRE(s3[3].size() == 14);
}

TEST_CASE("ideal invariants") {
  for (Kind kind : {Kind::A, Kind::C}) {
    Poset p = build_poset(kind, 3);
    auto strata = enumerate_ideals(p);
    for (int k = 0; k < static_cast<int>(strata.size()); ++k)
      for (const Ideal& j : strata[k]) {
        REQUIRE(is_down_closed(p, j.mask));
        REQUIRE(j.stratum == k);
        // stratum k means the first k diagonal elements exactly
        for (int t = 0; t < p.n(); ++t)
          REQUIRE(j.contains(p.diagonal()[t]) == (t < k));
      }
  }
}

TEST_CASE("maximal elements") {
  Poset a2 = build_poset(Kind::A, 2);
  REQUIRE(max_elements(a2, 0).empty());
  REQUIRE(max_elements(a2, mask_of(a2, {{1, 1}, {1, 2}})) ==
          std::vector<int>{a2.index(1, 2)});

  Poset c2 = build_poset(Kind::C, 2);
  auto mx = max_elements(c2, mask_of(c2, {{1, 1}, {1, 2}, {2, 2}, {1, -2}}));
  std::set<int> got(mx.begin(), mx.end());
  REQUIRE(got == std::set<int>{c2.index(2, 2), c2.index(1, -2)});

  // antichain property across all ideals
  Poset c3 = build_poset(Kind::C, 3);
  for (const auto& level : enumerate_ideals(c3))
    for (const Ideal& j : level) {
      auto m = max_elements(c3, j.mask);
      for (int a : m)
        for (int b : m)
          if (a != b) REQUIRE_FALSE(c3.less_eq(a, b));
    }
}

TEST_CASE("marked sets") {
  Poset a3 = build_poset(Kind::A, 3);
  std::uint64_t full = a3.full_mask();
  std::uint64_t diag = a3.diagonal_mask();
  REQUIRE_THROWS_AS(marked_set(a3, diag & ~1ull, Ideal{0, 0}), std::invalid_argument);
  for (const auto& level : enumerate_ideals(a3))
    for (const Ideal& j : level) {
      REQUIRE(marked_set(a3, full, j) == j.mask);
      std::uint64_t ma = marked_set(a3, diag, j);
      std::uint64_t expect = j.mask & diag;
      for (int idx : max_elements(a3, j.mask)) expect |= 1ull << idx;
      REQUIRE(ma == expect);
      // any marking: subset of J containing max(J)
      std::uint64_t o = diag | mask_of(a3, {{1, 2}, {2, 3}});
      std::uint64_t mo = marked_set(a3, o, j);
      REQUIRE((mo & ~j.mask) == 0);
      for (int idx : max_elements(a3, j.mask)) REQUIRE(((mo >> idx) & 1) == 1);
    }
}
