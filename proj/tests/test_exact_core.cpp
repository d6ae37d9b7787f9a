#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "mr2/jet.hpp"
#include "mr2/matrix.hpp"
#include "mr2/subspace.hpp"

using namespace mr2;

namespace {
const PrimeField F(kDefaultPrime);
}

TEST_CASE("field arithmetic") {
  CHECK(F.add(F.p - 1, 1) == 0);
  CHECK(F.sub(0, 1) == F.p - 1);
  CHECK(F.mul(F.inv(7), 7) == 1);
  CHECK(F.pow(2, 31) % F.p == F.reduce(1LL << 31));
  CHECK(F.reduce(-3) == F.p - 3);
  CHECK(is_prime_u64(kDefaultPrime));
  CHECK(is_prime_u64(101));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(561));  // Carmichael
}

TEST_CASE("rank basics") {
  Matrix id(F, 3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  CHECK(rank(id) == 3);
  Matrix z(F, 4, 7);
  CHECK(rank(z) == 0);
}

TEST_CASE("rank(A) == rank(A^T), shuffle-invariant, serial == parallel") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    int r = 20 + static_cast<int>(rng() % 30), c = 20 + static_cast<int>(rng() % 30);
    Matrix a(F, r, c);
    // low-rank structure so the check is not trivially full rank
    int k = 5 + static_cast<int>(rng() % 10);
    std::vector<std::vector<std::uint64_t>> u(k), v(k);
    for (int t = 0; t < k; ++t) {
      u[t].resize(r);
      v[t].resize(c);
      for (auto& x : u[t]) x = rng() % F.p;
      for (auto& x : v[t]) x = rng() % F.p;
    }
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        std::uint64_t s = 0;
        for (int t = 0; t < k; ++t) s = F.add(s, F.mul(u[t][i], v[t][j]));
        a.at(i, j) = s;
      }
    Matrix at(F, c, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) at.at(j, i) = a.at(i, j);
    Matrix sh = a;
    std::vector<int> perm(r);
    for (int i = 0; i < r; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) sh.at(i, j) = a.at(perm[i], j);
    Matrix a2 = a;
    int ra = rank(a2);
    Matrix a3 = a;
    CHECK(ra <= k);
    CHECK(rank_serial(a3) == ra);
    CHECK(rank(at) == ra);
    CHECK(rank(sh) == ra);
  }
}

TEST_CASE("two double points in degree 2 give rank 5") {
  // conditions: kill value and both first derivatives at (0,0) and (1,0)
  // against the conic coefficient space 1, x, y, x^2, xy, y^2
  Matrix m(F, 6, 6);
  auto row = [&](int r, std::initializer_list<std::uint64_t> v) {
    int j = 0;
    for (auto x : v) m.at(r, j++) = x;
  };
  row(0, {1, 0, 0, 0, 0, 0});  // value at (0,0)
  row(1, {0, 1, 0, 0, 0, 0});  // d/dx at (0,0)
  row(2, {0, 0, 1, 0, 0, 0});  // d/dy at (0,0)
  row(3, {1, 1, 0, 1, 0, 0});  // value at (1,0)
  row(4, {0, 1, 0, 2, 0, 0});  // d/dx at (1,0)
  row(5, {0, 0, 1, 0, 1, 0});  // d/dy at (1,0)
  CHECK(rank(m) == 5);  // the doubled line (y=0 twice) survives: deficiency 1
  CHECK(rank_serial(m) == 5);
}

TEST_CASE("jet spaces and boxes") {
  SpacePtr sp = make_space(F, 2, 4);
  CHECK(sp->dim() == 10);
  CHECK(sp->index(1, 1) >= 0);
  CHECK(sp->index(4, 0) == -1);
  SpacePtr box = make_space(F, 3, 100, {3, 2, 2});
  CHECK(box->dim() == 12);
  CHECK(box->index(2, 1, 1) >= 0);
  CHECK(box->index(3, 0, 0) == -1);
}

TEST_CASE("jet multiplication truncates") {
  SpacePtr sp = make_space(F, 1, 2);
  Jet a(sp), b(sp);
  a.set(0, 0, 0, 1);
  a.set(1, 0, 0, 1);  // 1 + x
  b.set(0, 0, 0, 1);
  b.set(1, 0, 0, F.p - 1);  // 1 - x
  Jet c = jet_mul(a, b);
  CHECK(c.coeff(0) == 1);
  CHECK(c.coeff(1) == 0);  // x^2 dropped by the truncation
}

TEST_CASE("jet_compose on parametrizations") {
  {
    SpacePtr sp = make_space(F, 1, 8);
    Poly2 Fp = {{0, 2, 1}, {3, 0, F.p - 1}};  // y^2 - x^3
    Jet xs = Jet::monomial(sp, 2), ys = Jet::monomial(sp, 3);
    CHECK(jet_compose(Fp, xs, ys).is_zero());
  }
  for (int s = 1; s <= 4; ++s) {
    SpacePtr sp = make_space(F, 1, s + 2);
    Poly2 Fp = {{0, 1, 1}};  // y
    Jet xs = Jet::monomial(sp, 1);
    Jet ys = Jet::monomial(sp, s, 0, 0, F.p - 1);  // -x^s
    Jet r = jet_compose(Fp, xs, ys);
    CHECK(r.coeff(s) == F.p - 1);
  }
}

TEST_CASE("jet_compose is a ring homomorphism") {
  std::mt19937_64 rng(3);
  SpacePtr sp = make_space(F, 2, 7);
  auto rand_poly = [&](int terms) {
    Poly2 P;
    for (int i = 0; i < terms; ++i)
      P.push_back({static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), rng() % F.p});
    return P;
  };
  auto poly_mul = [&](const Poly2& A, const Poly2& B) {
    Poly2 C;
    for (const auto& a : A)
      for (const auto& b : B) C.push_back({a.ex + b.ex, a.ey + b.ey, F.mul(a.c, b.c)});
    return C;
  };
  for (int trial = 0; trial < 5; ++trial) {
    Poly2 A = rand_poly(3), B = rand_poly(3);
    Jet xs(sp), ys(sp);
    for (int i = 0; i < sp->dim(); ++i) {
      xs.coeffs()[i] = rng() % F.p;
      ys.coeffs()[i] = rng() % F.p;
    }
    Jet lhs = jet_compose(poly_mul(A, B), xs, ys);
    Jet rhs = jet_mul(jet_compose(A, xs, ys), jet_compose(B, xs, ys));
    rhs -= lhs;
    CHECK(rhs.is_zero());
  }
}

TEST_CASE("poly_partial") {
  Poly2 P = {{2, 1, 3}};  // 3 x^2 y
  Poly2 dx = poly_partial(P, 0, F);
  REQUIRE(dx.size() == 1);
  CHECK(dx[0].ex == 1);
  CHECK(dx[0].ey == 1);
  CHECK(dx[0].c == 6);
  CHECK(poly_partial(Poly2{{0, 0, 5}}, 1, F).empty());
}

TEST_CASE("ideal_span examples") {
  SpacePtr sp = make_space(F, 2, 3);
  Jet x2 = Jet::monomial(sp, 2, 0), y = Jet::monomial(sp, 0, 1);
  Subspace S = ideal_span({x2, y}, sp);
  CHECK(S.dim() == 4);  // x^2, y, xy, y^2
  CHECK(S.contains(Jet::monomial(sp, 1, 1)));
  CHECK_FALSE(S.contains(Jet::monomial(sp, 1, 0)));
  Subspace full = ideal_span({Jet::constant(sp, 1)}, sp);
  CHECK(full.dim() == sp->dim());
}

TEST_CASE("colon and set_var_zero") {
  SpacePtr sp = make_space(F, 1, 6);
  Subspace S = ideal_span({Jet::monomial(sp, 2)}, sp);
  SpacePtr out = make_space(F, 1, 5);
  Subspace C = colon(S, Jet::monomial(sp, 1), out);
  Subspace X = ideal_span({Jet::monomial(out, 1)}, out);
  CHECK(C.equals(X));

  SpacePtr sp2 = make_space(F, 2, 5, {5, 2});
  Jet g(sp2);
  g.set(1, 0, 0, 1);
  g.set(0, 1, 0, 1);  // x + t
  Subspace T = ideal_span({g}, sp2);
  SpacePtr sp1 = make_space(F, 1, 5);
  Subspace T0 = set_var_zero(T, 1, sp1);
  CHECK(T0.equals(ideal_span({Jet::monomial(sp1, 1)}, sp1)));
}

TEST_CASE("quotient_dim of a staircase ideal equals the complement") {
  // E = (3,1) realized with g = x, f = x + y: generators x^3, x(x+y), (x+y)^2
  for (int M : {6, 8}) {
    SpacePtr sp = make_space(F, 2, M);
    Jet x = Jet::monomial(sp, 1, 0);
    Jet f(sp);
    f.set(1, 0, 0, 1);
    f.set(0, 1, 0, 1);
    Subspace S = ideal_span({jet_pow(x, 3), jet_mul(x, f), jet_mul(f, f)}, sp);
    CHECK(S.quotient_dim() == 4);
  }
}

TEST_CASE("colon of monomial ideals matches the symbolic colon") {
  SpacePtr sp = make_space(F, 2, 8);
  // (x^3 y, x y^2) : x y = (x^2, y)
  Subspace S = ideal_span({Jet::monomial(sp, 3, 1), Jet::monomial(sp, 1, 2)}, sp);
  SpacePtr out = make_space(F, 2, 6);
  Subspace C = colon(S, Jet::monomial(sp, 1, 1), out);
  Subspace want = ideal_span({Jet::monomial(out, 2, 0), Jet::monomial(out, 0, 1)}, out);
  CHECK(C.equals(want));
}

TEST_CASE("intersect") {
  SpacePtr sp = make_space(F, 2, 3);
  Subspace A = ideal_span({Jet::monomial(sp, 1, 0)}, sp);  // (x)
  Subspace B = ideal_span({Jet::monomial(sp, 0, 1)}, sp);  // (y)
  Subspace I = intersect(A, B);
  Subspace want = ideal_span({Jet::monomial(sp, 1, 1)}, sp);  // (xy)
  CHECK(I.equals(want));
}

TEST_CASE("stabilization of truncated colengths") {
  // I = (x^2, xy^2, y^4): colength 1+2+2+... complement of stairs (2,2,1,1)
  for (int M : {8, 10}) {
    SpacePtr sp = make_space(F, 2, M);
    Subspace S = ideal_span(
        {Jet::monomial(sp, 2, 0), Jet::monomial(sp, 1, 2), Jet::monomial(sp, 0, 4)}, sp);
    CHECK(S.quotient_dim() == 6);
  }
}
