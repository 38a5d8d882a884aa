#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "gcmlab/errors.hpp"
#include "gcmlab/patterns.hpp"

using namespace gcm;

TEST_CASE("frozen counts for small triangular patterns") {
  CHECK(count_gl_patterns({0}) == 1);
  CHECK(count_gl_patterns({1, 0}) == 2);
  CHECK(count_gl_patterns({2, 0}) == 3);
  CHECK(count_gl_patterns({2, 1, 0}) == 8);
  CHECK(count_gl_patterns({1, 1, 0}) == 3);
  CHECK(count_gl_patterns({3, 1}) == 3);
  // Constant rows admit exactly one pattern.
  CHECK(count_gl_patterns({2, 2, 2}) == 1);
}

TEST_CASE("frozen counts for two-step patterns with the pinned corner") {
  CHECK(count_sp_patterns({0}) == 1);
  CHECK(count_sp_patterns({-1}) == 2);
  CHECK(count_sp_patterns({-2}) == 3);
  CHECK(count_sp_patterns({0, 0}) == 1);
  CHECK(count_sp_patterns({0, -1}) == 4);
  CHECK(count_sp_patterns({-1, -1}) == 5);
}

TEST_CASE("explicit two-step pattern list for top (0,-1)") {
  std::vector<Pattern> pats = list_sp_patterns({0, -1});
  REQUIRE(pats.size() == 4);
  // Rows: a1 (len 2), p1 (len 2), a2 (len 1), p2 (len 1); constraints
  // 0 >= p1_1 >= a1_1 >= p1_2 >= a1_2 and p1_1 >= a2 >= p1_2, 0 >= p2 >= a2.
  std::set<std::vector<long long>> flat;
  for (const Pattern& p : pats) {
    REQUIRE(p.size() == 4);
    CHECK(p[0] == PatternRow{0, -1});
    REQUIRE(p[1].size() == 2);
    REQUIRE(p[2].size() == 1);
    REQUIRE(p[3].size() == 1);
    flat.insert({p[1][0], p[1][1], p[2][0], p[3][0]});
  }
  std::set<std::vector<long long>> expected{
      {0, 0, 0, 0}, {0, -1, 0, 0}, {0, -1, -1, 0}, {0, -1, -1, -1}};
  CHECK(flat == expected);
}

TEST_CASE("gl lists are valid interleavings and have no duplicates") {
  PatternRow top{3, 1, 0};
  std::vector<Pattern> pats = list_gl_patterns(top);
  CHECK(pats.size() == count_gl_patterns(top));
  std::set<Pattern> distinct(pats.begin(), pats.end());
  CHECK(distinct.size() == pats.size());
  for (const Pattern& p : pats) {
    REQUIRE(p.size() == top.size());
    CHECK(p[0] == top);
    for (std::size_t r = 0; r + 1 < p.size(); ++r) {
      REQUIRE(p[r + 1].size() == p[r].size() - 1);
      for (std::size_t i = 0; i < p[r + 1].size(); ++i) {
        CHECK(p[r][i] >= p[r + 1][i]);
        CHECK(p[r + 1][i] >= p[r][i + 1]);
      }
    }
  }
}

TEST_CASE("counts match the classical dimension formulas on windows") {
  // Triangular counts against the product formula, all tops of length <= 3
  // with entries in [0, 3].
  for (long long a = 0; a <= 3; ++a)
    for (long long b = 0; b <= a; ++b) {
      CHECK(count_gl_patterns({a, b}) == weyl_dim_gl({a, b}));
      for (long long c = 0; c <= b; ++c)
        CHECK(count_gl_patterns({a, b, c}) == weyl_dim_gl({a, b, c}));
    }
  // Two-step counts against the symplectic formula, nonpositive tops of
  // length <= 2 with entries in [-3, 0].
  for (long long a = -3; a <= 0; ++a) {
    CHECK(count_sp_patterns({a}) == weyl_dim_sp({a}));
    for (long long b = a; b >= -3; --b)
      CHECK(count_sp_patterns({a, b}) == weyl_dim_sp({a, b}));
  }
}

TEST_CASE("dimension formulas on pinned values") {
  CHECK(weyl_dim_gl({1, 0, 0}) == 3);        // vector of gl(3)
  CHECK(weyl_dim_gl({1, 1, 0}) == 3);        // its exterior square
  CHECK(weyl_dim_gl({2, 1, 0}) == 8);        // adjoint of sl(3)
  CHECK(weyl_dim_sp({-1}) == 2);             // defining rep of sp(2)
  CHECK(weyl_dim_sp({0, -1}) == 4);          // defining rep of sp(4)
  CHECK(weyl_dim_sp({-1, -1}) == 5);         // its traceless exterior square
  CHECK(weyl_dim_sp({-2}) == 3);             // adjoint of sp(2)
  CHECK(weyl_dim_sp({-1, -2}) == 16);
}

TEST_CASE("specification validation") {
  CHECK_THROWS_AS((PatternSpec{"gl", {}}.validate()), InvalidArgument);
  CHECK_THROWS_AS((PatternSpec{"gl", {0, 1}}.validate()), InvalidArgument);
  CHECK_THROWS_AS((PatternSpec{"sp", {1, 0}}.validate()), InvalidArgument);
  CHECK_THROWS_AS((PatternSpec{"sp", {0, 1}}.validate()), InvalidArgument);
  CHECK_THROWS_AS((PatternSpec{"xx", {1, 0}}.validate()), InvalidArgument);
  CHECK_NOTHROW((PatternSpec{"gl", {3, 1, 0}}.validate()));
  CHECK_NOTHROW((PatternSpec{"gl", {0, -2}}.validate()));  // negative tops allowed for gl
  CHECK_NOTHROW((PatternSpec{"sp", {0, -2}}.validate()));
  // Dispatchers agree with the direct calls.
  CHECK(count_patterns({"gl", {2, 1, 0}}) == 8);
  CHECK(count_patterns({"sp", {0, -1}}) == 4);
  CHECK(weyl_dim({"gl", {2, 1, 0}}) == 8);
  CHECK(weyl_dim({"sp", {0, -1}}) == 4);
  CHECK(list_patterns({"gl", {1, 0}}).size() == 2);
}

TEST_CASE("sp lists satisfy both interleaving stages") {
  PatternRow top{-1, -2};
  std::vector<Pattern> pats = list_sp_patterns(top);
  CHECK(pats.size() == count_sp_patterns(top));
  CHECK(pats.size() == weyl_dim_sp(top));
  for (const Pattern& p : pats) {
    REQUIRE(p.size() == 4);  // a1, p1, a2, p2
    CHECK(p[0] == top);
    // Primed row interleaves (0, a_1, ..., a_L) with the pinned zero corner.
    for (std::size_t stage = 0; stage < 2; ++stage) {
      const PatternRow& a = p[2 * stage];
      const PatternRow& pr = p[2 * stage + 1];
      REQUIRE(pr.size() == a.size());
      long long prev = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(pr[i] <= prev);
        CHECK(pr[i] >= a[i]);
        prev = a[i];
      }
      // Next unprimed row interleaves the primed row.
      if (2 * stage + 2 < p.size()) {
        const PatternRow& nxt = p[2 * stage + 2];
        REQUIRE(nxt.size() == pr.size() - 1);
        for (std::size_t i = 0; i < nxt.size(); ++i) {
          CHECK(pr[i] >= nxt[i]);
          CHECK(nxt[i] >= pr[i + 1]);
        }
      }
    }
  }
}
