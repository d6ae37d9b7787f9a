#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "mr2/schemes.hpp"
#include "mr2/suites.hpp"

using namespace mr2;

namespace {
const PrimeField F(kDefaultPrime);

Placement origin_flat(const SingularityComponent& c) {
  Placement pl;
  pl.a = pl.b = 0;
  pl.germ.assign(static_cast<std::size_t>(c.ell + 3), 0);  // germ y = 0
  return pl;
}
}  // namespace

TEST_CASE("component invariants and names") {
  auto t1 = SingularityComponent::tacnode(1);
  CHECK(t1.N == 3);
  CHECK(t1.ell == 2);
  CHECK(t1.str() == "A1");
  auto c2 = SingularityComponent::cusp(2);
  CHECK(c2.N == 5);
  CHECK(c2.ell == 3);
  CHECK(c2.str() == "A2");
  CHECK(SingularityComponent::tacnode(3).str() == "A5");
  CHECK(SingularityComponent::simple_point().N == 1);
  CHECK_THROWS_AS(SingularityComponent::cusp(1), std::invalid_argument);
  CHECK_THROWS_AS(SingularityComponent::tacnode(0), std::invalid_argument);
  CHECK_THROWS_AS(SingularityComponent::two_curvilinear(5, 2), std::invalid_argument);
  auto tc = SingularityComponent::two_curvilinear(7, 5);
  CHECK(tc.N == 7);
  CHECK(component_length(Component{tc}) == 7);
  CHECK(component_length(Component{HmesComponent{10, Staircase({17, 6}), 5}}) == 78);
}

TEST_CASE("degree basis") {
  auto b = degree_basis(2);
  REQUIRE(b.size() == 6);
  // graded-lex: 1, x, y, x^2, xy, y^2
  CHECK((b[0].size() == 1 && b[0][0].ex == 0 && b[0][0].ey == 0));
  CHECK((b[3][0].ex == 2 && b[3][0].ey == 0));
  CHECK((b[5][0].ex == 0 && b[5][0].ey == 2));
}

TEST_CASE("node at the origin kills 1, x, y") {
  auto rows = component_rows(SingularityComponent::tacnode(1),
                             origin_flat(SingularityComponent::tacnode(1)), 2, F);
  REQUIRE(rows.size() == 3);
  Matrix m(F, 0, 6);
  for (const auto& r : rows) m.append_row(r);
  CHECK(rank(m) == 3);
  // no condition touches the pure degree-2 coefficients
  for (const auto& r : rows)
    for (int j = 3; j < 6; ++j) CHECK(r[j] == 0);
}

TEST_CASE("cusp at the origin in degree 2 leaves exactly y^2") {
  auto c = SingularityComponent::cusp(2);
  auto rows = component_rows(c, origin_flat(c), 2, F);
  REQUIRE(rows.size() == 5);
  Matrix m(F, 0, 6);
  for (const auto& r : rows) m.append_row(r);
  CHECK(rank(m) == 5);
  // y^2 is the 6th basis element of degree_basis(2); it satisfies every row
  for (const auto& r : rows) CHECK(r[5] == 0);
}

TEST_CASE("tacnode(2) at a random placement has independent conditions in degree 3") {
  std::mt19937_64 rng(17);
  auto c = SingularityComponent::tacnode(2);
  auto pl = sample_placement(c, rng, F);
  auto rows = component_rows(c, pl, 3, F);
  REQUIRE(rows.size() == 6);
  Matrix m(F, 0, 10);
  for (const auto& r : rows) m.append_row(r);
  CHECK(rank(m) == 6);
}

TEST_CASE("hmes row counts") {
  std::mt19937_64 rng(23);
  {
    HmesComponent h{2, Staircase({2, 1}), 1};
    auto pl = sample_hmes_placement(h, rng, F);
    CHECK(hmes_rows(h, pl, 3, F).size() == 6);
  }
  {
    HmesComponent h{10, Staircase({17, 6}), 5};
    auto pl = sample_hmes_placement(h, rng, F);
    CHECK(hmes_rows(h, pl, 11, F).size() == 78);
  }
  {
    HmesComponent h{0, Staircase({1}), 1};
    auto pl = sample_hmes_placement(h, rng, F);
    CHECK(hmes_rows(h, pl, 1, F).size() == 1);
  }
  {
    HmesComponent h{3, Staircase({17, 6}), 5};  // m0 = 10, so m = 3 < m0 - 1
    auto pl = sample_hmes_placement(h, rng, F);
    CHECK_THROWS_AS(hmes_rows(h, pl, 11, F), std::invalid_argument);
  }
}

TEST_CASE("row-count law: every component imposes exactly N conditions") {
  std::mt19937_64 rng(5);
  std::vector<SingularityComponent> comps = {
      SingularityComponent::simple_point(), SingularityComponent::tacnode(1),
      SingularityComponent::tacnode(3), SingularityComponent::cusp(2),
      SingularityComponent::cusp(4), SingularityComponent::two_curvilinear(7, 5)};
  for (const auto& c : comps) {
    auto pl = sample_placement(c, rng, F);
    CHECK(component_rows(c, pl, 9, F).size() == static_cast<std::size_t>(c.N));
  }
}

TEST_CASE("local colength: conditions are independent on a large jet space") {
  std::mt19937_64 rng(7);
  for (auto c : {SingularityComponent::cusp(3), SingularityComponent::tacnode(2),
                 SingularityComponent::two_curvilinear(8, 5)}) {
    auto pl = sample_placement(c, rng, F);
    auto basis = local_monomial_basis(pl.a, pl.b, static_cast<int>(c.ell) + 3, F);
    auto rows = component_rows_for_basis(c, pl, basis, F);
    Matrix m(F, 0, static_cast<int>(basis.size()));
    for (const auto& r : rows) m.append_row(r);
    CHECK(rank(m) == c.N);
  }
}

TEST_CASE("assemble_and_rank frozen examples") {
  {
    std::vector<Component> comps(2, SingularityComponent::tacnode(1));
    auto r = assemble_and_rank(comps, 2, F, 1);
    CHECK(r.rank == 5);
    CHECK(r.expected == 6);
    CHECK(r.deficiency == 1);
    CHECK_FALSE(r.maximal);
  }
  {
    std::vector<Component> comps(11, SingularityComponent::cusp(2));
    auto r = assemble_and_rank(comps, 9, F, 2);
    CHECK(r.rank == 55);
    CHECK(r.expected == 55);
    CHECK(r.maximal);
  }
  {
    std::vector<Component> comps(5, SingularityComponent::tacnode(1));
    auto r = assemble_and_rank(comps, 4, F, 3);
    CHECK(r.deficiency >= 1);
  }
}

TEST_CASE("expected_dimension") {
  CHECK(expected_dimension(2, std::vector<Component>(2, SingularityComponent::tacnode(1))) == -1);
  std::vector<Component> mix(3, SingularityComponent::tacnode(1));
  mix.push_back(SingularityComponent::cusp(2));
  CHECK(expected_dimension(4, mix) == 0);
  CHECK(expected_dimension(1, {}) == 2);
}

TEST_CASE("verify_general verdicts") {
  {
    Verdict v = verify_general({SingularityComponent::tacnode(1)}, 2, 1, F, 4);
    CHECK(v.certified_maximal);
    CHECK(v.trial == 0);
  }
  {
    std::vector<Component> comps(2, SingularityComponent::cusp(2));
    Verdict v = verify_general(comps, 3, 10, F, 5);
    CHECK_FALSE(v.certified_maximal);
    CHECK(v.min_deficiency == 1);
  }
  {
    std::mt19937_64 rng(99);
    auto comps = random_mult2_collection(78, 47, rng);
    Verdict v = verify_general(comps, 11, 5, F, 6);
    CHECK(v.certified_maximal);
  }
}

TEST_CASE("rank is monotone in the degree") {
  std::vector<Component> comps = {SingularityComponent::cusp(3),
                                  SingularityComponent::tacnode(2),
                                  SingularityComponent::simple_point()};
  long long prev = 0;
  for (int d = 1; d <= 8; ++d) {
    auto r = assemble_and_rank(comps, d, F, 7);
    CHECK(r.rank >= prev);
    prev = r.rank;
  }
}

TEST_CASE("5l >= 3N for every A_k collection") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 50; ++i) {
    long long N = 5 + static_cast<long long>(rng() % 60);
    for (long long ell = (3 * N + 4) / 5; ell <= N; ++ell) {
      std::vector<Component> comps;
      try {
        comps = random_mult2_collection(N, ell, rng);
      } catch (const std::invalid_argument&) {
        continue;
      }
      long long sn = 0, sl = 0;
      for (const auto& c : comps) {
        const auto& s = std::get<SingularityComponent>(c);
        sn += s.N;
        sl += s.ell;
        CHECK(5 * s.ell >= 3 * s.N);
      }
      CHECK(sn == N);
      CHECK(sl == ell);
      break;
    }
  }
}

TEST_CASE("initial_ideal_neglex") {
  Poly2 y2 = {{0, 2, 1}};
  Poly2 yx2 = {{2, 1, 1}};
  Poly2 x3 = {{3, 0, 1}};
  CHECK(initial_ideal_neglex({y2, yx2, x3}, 8, F) == Staircase({3, 2}));

  // ((y - x^2)^2, (y - x^2) x^2, x^4)
  Poly2 q = {{0, 2, 1}, {2, 1, F.p - 2}, {4, 0, 1}};
  Poly2 qx2 = {{2, 1, 1}, {4, 0, F.p - 1}};
  Poly2 x4 = {{4, 0, 1}};
  CHECK(initial_ideal_neglex({q, qx2, x4}, 10, F) == Staircase({4, 2}));

  Poly2 x = {{1, 0, 1}};
  Poly2 y = {{0, 1, 1}};
  CHECK(initial_ideal_neglex({x, y}, 6, F) == Staircase({1}));
}

TEST_CASE("deterministic seeding") {
  CHECK(mix_seed(1, 2) == mix_seed(1, 2));
  CHECK(mix_seed(1, 2) != mix_seed(1, 3));
  std::vector<Component> comps(3, SingularityComponent::cusp(2));
  auto a = assemble_and_rank(comps, 5, F, 42);
  auto b = assemble_and_rank(comps, 5, F, 42);
  CHECK(a.rank == b.rank);
  CHECK(a.seed == b.seed);
}
