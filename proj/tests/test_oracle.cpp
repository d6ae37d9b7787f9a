#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "mr2/oracle.hpp"

using namespace mr2;

namespace {
const PrimeField F(kDefaultPrime);
}

TEST_CASE("flatstairs hypothesis and default truncation") {
  CHECK(flatstairs_hypothesis(Staircase({5, 2})));
  CHECK(flatstairs_hypothesis(Staircase({1})));
  CHECK_FALSE(flatstairs_hypothesis(Staircase({3, 3})));
  CHECK(default_trunc(Staircase({5, 2}), 1) == 9);
}

TEST_CASE("trace colength equals the height") {
  CHECK(trace_dim(Staircase({5, 2}), 1, 0, F) == 2);
  CHECK(trace_dim(Staircase({5, 2}), 4, 0, F) == 1);
  CHECK(trace_dim(Staircase({5, 2}), 7, 0, F) == 0);
}

TEST_CASE("trace + residual conservation") {
  for (auto E : {Staircase({5, 2}), Staircase({4, 2}), Staircase({6, 1}), Staircase({3})}) {
    auto h = heights(E);
    for (int p = 1; p <= E.stair(0); ++p) {
      int c = trace_dim(E, p, 0, F);
      CHECK(c == h[p - 1]);
      CHECK(complement_size(E) == c + complement_size(sigma(E, p)));
    }
  }
}

TEST_CASE("verify_flatstairs") {
  CHECK(verify_flatstairs(Staircase({5, 2}), 1, 10, F));
  CHECK(verify_flatstairs(Staircase({4, 2}), 3, 10, F));
  CHECK(verify_flatstairs(Staircase({5, 2}), 5, 0, F));
  CHECK_THROWS_AS(verify_flatstairs(Staircase({3, 3}), 1, 10, F), std::invalid_argument);
}

TEST_CASE("verify_finideterm") {
  Poly2 x = {{1, 0, 1}};
  Poly2 y = {{0, 1, 1}};
  {
    // g' = y + x y lies in (x,y)^2; height drops of (3,1) are all <= 2
    Poly2 g2 = {{0, 1, 1}, {1, 1, 1}};
    auto r = verify_finideterm(Staircase({3, 1}), 2, 2, x, y, x, g2, 10, F);
    CHECK(r.checked);
    CHECK(r.ok);
  }
  {
    auto r = verify_finideterm(Staircase({3, 1}), 5, 5, x, y, x, y, 10, F);
    CHECK(r.checked);
    CHECK(r.ok);
  }
  {
    // perturbation of f outside (f,g)^alpha: not a valid instance
    Poly2 f2 = {{1, 0, 1}, {0, 1, 1}};  // x + y, difference y only in (f,g)^1
    auto r = verify_finideterm(Staircase({3, 1}), 2, 2, x, y, f2, y, 10, F);
    CHECK_FALSE(r.checked);
  }
}

TEST_CASE("verify_codimform") {
  CHECK(verify_codimform(Staircase({2, 1}), 1, 2, 0, F, 1));
  CHECK(verify_codimform(Staircase({1}), 1, 0, 0, F, 2));
  CHECK(verify_codimform(Staircase({17, 6}), 5, 10, 0, F, 3));
  CHECK_THROWS_AS(verify_codimform(Staircase({17, 6}), 5, 3, 0, F, 4), std::invalid_argument);
}

TEST_CASE("fiber_lengths_constant") {
  CHECK(fiber_lengths_constant(Staircase({5, 2}), 0, {0, 1, 2, 3}, F));
  CHECK(fiber_lengths_constant(Staircase({1}), 0, {0, 17}, F));
  CHECK(fiber_lengths_constant(Staircase({4, 2}), 0, {0, 5}, F));
}

TEST_CASE("verify_espbloc_limit") {
  CHECK(verify_espbloc_limit(Staircase({5, 2}), 1, 0, 0, F));   // branch 1 -> H_{3,(3,1),2}
  CHECK(verify_espbloc_limit(Staircase({6, 3}), 1, 0, 0, F));   // branch 2 -> H_{4,(2,),2}
  CHECK(verify_espbloc_limit(Staircase({4, 1}), 1, 0, 0, F));   // branch 1 -> H_{3,(2,),2}
  CHECK_THROWS_AS(verify_espbloc_limit(Staircase({4, 3}), 1, 0, 0, F), std::invalid_argument);
}

TEST_CASE("verify_diff_horace") {
  {
    auto r = verify_diff_horace(Staircase({5, 2}), 3, {}, 0, 0, F);
    CHECK(r.checked);
    CHECK(r.ok);
  }
  {
    // x^5 is in I_E but not in (y): level-3 injectivity fails, instance skipped
    Poly2 x5 = {{5, 0, 1}};
    auto r = verify_diff_horace(Staircase({5, 2}), 3, {x5}, 0, 0, F);
    CHECK_FALSE(r.checked);
  }
  {
    // 1 and x stay independent modulo (y) + trace ideal (x^2) at level 1
    Poly2 one = {{0, 0, 1}};
    Poly2 x = {{1, 0, 1}};
    auto r = verify_diff_horace(Staircase({5, 2}), 1, {one, x}, 0, 0, F);
    CHECK(r.checked);
    CHECK(r.ok);
  }
  {
    // y has zero image modulo (y) yet V cap U = V cap (y), so not skipped
    Poly2 yg = {{0, 1, 1}};
    Poly2 one = {{0, 0, 1}};
    auto r = verify_diff_horace(Staircase({4, 2}), 2, {one, yg}, 0, 0, F);
    CHECK(r.checked);
    CHECK(r.ok);
  }
}
