#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "mr2/staircase.hpp"
#include "mr2/suites.hpp"

using namespace mr2;

TEST_CASE("construction normalizes and validates") {
  CHECK(Staircase({5, 2}).stairs() == std::vector<long long>{5, 2});
  CHECK(Staircase({3, 3, 0, 0}).stairs() == std::vector<long long>{3, 3});
  CHECK_THROWS_AS(Staircase({2, 5}), std::invalid_argument);
  CHECK_THROWS_AS(Staircase({-1}), std::invalid_argument);
  CHECK(Staircase{}.empty());
  CHECK(Staircase({5, 2}).str() == "(5,2)");
}

TEST_CASE("heights") {
  CHECK(heights(Staircase({5, 2})) == std::vector<long long>{2, 2, 1, 1, 1});
  CHECK(heights(Staircase({3, 3})) == std::vector<long long>{2, 2, 2});
  CHECK(heights(Staircase{}).empty());
}

TEST_CASE("sigma deletes one slice") {
  CHECK(sigma(Staircase({5, 2}), 1) == Staircase({4, 1}));
  CHECK(sigma(Staircase({5, 2}), 4) == Staircase({4, 2}));
  CHECK(sigma(Staircase({1}), 1) == Staircase{});
  CHECK_THROWS_AS(sigma(Staircase({5, 2}), 6), std::invalid_argument);
  CHECK_THROWS_AS(sigma(Staircase({5, 2}), 0), std::invalid_argument);
}

TEST_CASE("complement, corners, m0") {
  CHECK(complement_size(Staircase({17, 6})) == 23);
  CHECK(m0(Staircase({17, 6}), 5) == 10);
  auto g = min_generators(Staircase({3, 1}));
  CHECK(g == std::vector<std::pair<long long, long long>>{{3, 0}, {1, 1}, {0, 2}});
  CHECK_THROWS_AS(m0(Staircase{}, 1), std::invalid_argument);
}

TEST_CASE("scheme_length") {
  CHECK(scheme_length(10, Staircase({17, 6})) == 78);
  CHECK(scheme_length(8, Staircase({17, 8})) == 61);
  CHECK(scheme_length(0, Staircase{}) == 0);
}

TEST_CASE("wins_check") {
  CHECK(wins_check(Staircase({5, 2}), 4, 2));
  CHECK_FALSE(wins_check(Staircase({17, 6}), 10, 5));
  CHECK(wins_check(Staircase({3}), 2, 1));
}

TEST_CASE("mainthm_check exact integer form") {
  CHECK(mainthm_check(100, 60));   // 19^2 = 361 >= 360
  CHECK_FALSE(mainthm_check(78, 47));  // 15^2 = 225 < 279
  CHECK(mainthm_check(5, 5));
}

TEST_CASE("mainthm_check agrees with the float inequality away from ties") {
  for (long long N = 0; N <= 300; ++N) {
    for (long long ell = 0; ell <= N; ++ell) {
      double lhs = static_cast<double>(N);
      double rhs = 2.0 * ell - 1.0 - 3.0 * std::sqrt(static_cast<double>(N - ell));
      if (std::abs(lhs - rhs) < 1e-6) continue;
      CHECK(mainthm_check(N, ell) == (lhs <= rhs));
    }
  }
}

TEST_CASE("corollary_staircase") {
  CHECK(corollary_staircase(78, 47, 5) == Staircase({17, 6}));
  CHECK(corollary_staircase(61, 37, 4) == Staircase({17, 8}));
  CHECK(corollary_staircase(10, 7, 1) == Staircase({5, 2}));
  CHECK_THROWS_AS(corollary_staircase(10, 6, 1), std::invalid_argument);  // 2l-N = 2, not > 2k
}

TEST_CASE("espbloc_step branches") {
  {
    auto st = espbloc_step(Staircase({17, 6}), 5);
    CHECK(st.branch == 1);
    CHECK(st.m == 11);
    CHECK(st.E == Staircase({11, 1}));
    CHECK(st.s == 6);
  }
  {
    auto st = espbloc_step(Staircase({17, 8}), 3);
    CHECK(st.branch == 2);
    CHECK(st.m == 8);
    CHECK(st.E == Staircase({9, 1}));
    CHECK(st.s == 4);
  }
  {
    // smallest staircase meeting both hypotheses at s = 1
    auto st = espbloc_step(Staircase({4, 1}), 1);
    CHECK(st.branch == 1);
    CHECK(st.m == 3);
    CHECK(st.E == Staircase({2}));
    CHECK(st.s == 2);
  }
  CHECK_THROWS_AS(espbloc_step(Staircase({4, 3}), 1), std::invalid_argument);  // drop 1 < s+2
  CHECK_THROWS_AS(espbloc_step(Staircase({5, 1}), 2), std::invalid_argument);  // l(1) < s
}

TEST_CASE("specialization_chain") {
  {
    auto c = specialization_chain(100, 60);
    CHECK(c.k == 6);
    CHECK(c.terminal_m == 12);
    CHECK(c.terminal_E == Staircase({18, 4}));
    CHECK(c.terminal_s == 6);
    CHECK(c.certified);
    CHECK_FALSE(c.needs_direct);
  }
  {
    auto c = specialization_chain(78, 47);
    CHECK(c.k == 5);
    CHECK_FALSE(c.certified);
    CHECK(c.needs_direct);
    CHECK(c.terminal_m == 10);
    CHECK(c.terminal_E == Staircase({17, 6}));
  }
  {
    auto c = specialization_chain(61, 37);
    CHECK(c.k == 4);
    CHECK_FALSE(c.certified);
    CHECK(c.needs_direct);
    CHECK(c.terminal_m == 8);
    CHECK(c.terminal_E == Staircase({17, 8}));
    CHECK(c.terminal_s == 4);
  }
}

TEST_CASE("chain is certified whenever the integer inequality holds (N <= 120)") {
  for (long long N = 2; N <= 120; ++N) {
    for (long long ell = 2; ell <= N; ++ell) {
      if (!mainthm_check(N, ell) || N - ell < 2) continue;
      auto c = specialization_chain(N, ell);
      CHECK(c.certified);
      CHECK_FALSE(c.needs_direct);
    }
  }
}

TEST_CASE("conservation and slicing laws, exhaustive complement <= 12") {
  for (const auto& E : enumerate_staircases(12)) {
    auto h = heights(E);
    CHECK(staircase_from_heights(h) == E);
    for (int p = 1; p <= E.stair(0); ++p) {
      Staircase S = sigma(E, p);
      CHECK(complement_size(E) == complement_size(S) + h[p - 1]);
      CHECK(scheme_length(7, E) - scheme_length(7, S) == h[p - 1]);
    }
  }
}

TEST_CASE("heights and stairs are inverse encodings up to complement 50") {
  long long count = 0;
  for (const auto& E : enumerate_staircases(50)) {
    if (complement_size(E) > 50) continue;
    ++count;
    CHECK(staircase_from_heights(heights(E)) == E);
  }
  CHECK(count > 100000);  // genuinely exhaustive
}

TEST_CASE("binom2") {
  CHECK(binom2(0) == 0);
  CHECK(binom2(1) == 0);
  CHECK(binom2(11) == 55);
}
