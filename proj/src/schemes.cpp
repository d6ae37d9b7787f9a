#include "mr2/schemes.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mr2/subspace.hpp"

namespace mr2 {

SingularityComponent SingularityComponent::tacnode(long long k) {
  if (k < 1) throw std::invalid_argument("tacnode requires k >= 1");
  return {Kind::Tacnode, k, 3 * k, 2 * k};
}

SingularityComponent SingularityComponent::cusp(long long k) {
  if (k < 2) throw std::invalid_argument("cusp requires k >= 2");
  return {Kind::Cusp, k, 3 * k - 1, 2 * k - 1};
}

SingularityComponent SingularityComponent::two_curvilinear(long long N, long long ell) {
  if (ell < 0 || ell > N || N > 2 * ell)
    throw std::invalid_argument("2-curvilinear invariants need 0 <= ell <= N <= 2 ell");
  return {Kind::TwoCurvilinear, 0, N, ell};
}

SingularityComponent SingularityComponent::simple_point() {
  return {Kind::SimplePoint, 0, 1, 1};
}

std::string SingularityComponent::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Tacnode: os << "A" << (2 * k - 1); break;
    case Kind::Cusp: os << "A" << (2 * k - 2); break;
    case Kind::TwoCurvilinear:
      os << "C" << N << ":" << ell;
      if (5 * ell < 3 * N) os << "!";  // outside the A_k invariant range
      break;
    case Kind::SimplePoint: os << "P"; break;
  }
  return os.str();
}

std::string HmesComponent::str() const {
  std::ostringstream os;
  os << "H" << m << ":" << E.stair(0) << "," << E.stair(1) << ":" << s;
  return os.str();
}

long long component_length(const Component& c) {
  if (std::holds_alternative<SingularityComponent>(c))
    return std::get<SingularityComponent>(c).N;
  return std::get<HmesComponent>(c).length();
}

std::string component_str(const Component& c) {
  if (std::holds_alternative<SingularityComponent>(c))
    return std::get<SingularityComponent>(c).str();
  return std::get<HmesComponent>(c).str();
}

std::vector<Poly2> degree_basis(int d) {
  std::vector<Poly2> basis;
  for (int deg = 0; deg <= d; ++deg) {
    for (int i = deg; i >= 0; --i) basis.push_back({{i, deg - i, 1}});
  }
  return basis;
}

std::vector<Poly2> local_monomial_basis(std::uint64_t a, std::uint64_t b, int M,
                                        const PrimeField& f) {
  // Pascal triangle mod p
  std::vector<std::vector<std::uint64_t>> C(M + 1, std::vector<std::uint64_t>(M + 1, 0));
  for (int n = 0; n <= M; ++n) {
    C[n][0] = 1;
    for (int r = 1; r <= n; ++r) C[n][r] = f.add(C[n - 1][r - 1], r <= n - 1 ? C[n - 1][r] : 0);
  }
  std::vector<std::uint64_t> pa(M + 1), pb(M + 1);
  pa[0] = pb[0] = 1;
  for (int n = 1; n <= M; ++n) {
    pa[n] = f.mul(pa[n - 1], f.neg(a));
    pb[n] = f.mul(pb[n - 1], f.neg(b));
  }
  std::vector<Poly2> basis;
  for (int deg = 0; deg < M; ++deg) {
    for (int i = deg; i >= 0; --i) {
      int j = deg - i;
      Poly2 poly;
      for (int u = 0; u <= i; ++u) {
        for (int v = 0; v <= j; ++v) {
          std::uint64_t c = f.mul(f.mul(C[i][u], pa[i - u]), f.mul(C[j][v], pb[j - v]));
          if (c) poly.push_back({u, v, c});
        }
      }
      basis.push_back(std::move(poly));
    }
  }
  return basis;
}

std::vector<Vec> component_rows_for_basis(const SingularityComponent& c, const Placement& pl,
                                          const std::vector<Poly2>& basis, const PrimeField& f) {
  const int L0 = static_cast<int>(c.vanish_order());
  const int L1 = static_cast<int>(c.derivative_order());
  if (static_cast<int>(pl.germ.size()) < L0)
    throw std::invalid_argument("germ jet too short for the contact order");
  int mx = 0, my = 0;
  for (const auto& B : basis) {
    for (const auto& t : B) {
      mx = std::max(mx, t.ex);
      my = std::max(my, t.ey);
    }
  }
  // powers of (a + u) and of the germ, truncated at u^L0
  Vec lin = {pl.a % f.p, 1};
  std::vector<Vec> P(mx + 1), G(my + 1);
  P[0] = Vec(L0, 0);
  if (L0 > 0) P[0][0] = 1;
  for (int e = 1; e <= mx; ++e) P[e] = vec1_mul(P[e - 1], lin, L0, f);
  Vec germ(pl.germ.begin(), pl.germ.begin() + std::min<std::size_t>(pl.germ.size(), L0));
  G[0] = P[0];
  for (int e = 1; e <= my; ++e) G[e] = vec1_mul(G[e - 1], germ, L0, f);

  const int nb = static_cast<int>(basis.size());
  std::vector<Vec> rows(static_cast<std::size_t>(L0 + L1), Vec(nb, 0));
  for (int bi = 0; bi < nb; ++bi) {
    Vec val(L0, 0);
    Vec dval(L0, 0);
    for (const auto& t : basis[bi]) {
      if (!t.c) continue;
      Vec prod = vec1_mul(P[t.ex], G[t.ey], L0, f);
      for (int j = 0; j < L0; ++j) val[j] = f.add(val[j], f.mul(t.c, prod[j]));
      if (L1 > 0 && t.ey > 0) {
        Vec dprod = vec1_mul(P[t.ex], G[t.ey - 1], L0, f);
        std::uint64_t cc = f.mul(t.c, f.reduce(t.ey));
        for (int j = 0; j < L1; ++j) dval[j] = f.add(dval[j], f.mul(cc, dprod[j]));
      }
    }
    for (int j = 0; j < L0; ++j) rows[j][bi] = val[j];
    for (int j = 0; j < L1; ++j) rows[L0 + j][bi] = dval[j];
  }
  return rows;
}

std::vector<Vec> hmes_rows_for_basis(const HmesComponent& h, const HmesPlacement& pl,
                                     const std::vector<Poly2>& basis, const PrimeField& f) {
  if (h.E.height0() > 2) throw std::invalid_argument("H components require staircases of height <= 2");
  const long long mzero = h.E.empty() ? 0 : m0(h.E, h.s);
  if (h.m < mzero - 1)
    throw std::invalid_argument("m below the validity bound m0(E,s) - 1");
  const int L0 = static_cast<int>(h.E.stair(0));
  const int L1 = static_cast<int>(h.E.stair(1));
  const int m = static_cast<int>(h.m);
  const int s = static_cast<int>(h.s);

  int maxdeg = 0;
  for (const auto& B : basis) {
    for (const auto& t : B) maxdeg = std::max(maxdeg, t.ex + t.ey);
  }
  SpacePtr sp = make_space(f, 2, maxdeg + 1);
  Jet xs = Jet::constant(sp, pl.a % f.p);
  Jet ys = Jet::constant(sp, pl.b % f.p);
  xs.set(1, 0, 0, pl.fr[0]);
  xs.set(0, 1, 0, pl.fr[1]);
  ys.set(1, 0, 0, pl.fr[2]);
  ys.set(0, 1, 0, pl.fr[3]);

  // psi = -phi where f_germ = yb + phi(xb); the chart condition substitutes
  // yb = psi(xb).
  Vec psi(std::max(L0, 1), 0);
  for (int j = s; j < static_cast<int>(pl.fcoef.size()) && j < L0; ++j)
    psi[j] = f.neg(pl.fcoef[j]);
  const int tmax = (s > 0 && L0 > 0) ? (L0 - 1) / s : 0;
  std::vector<Vec> psi_pow(tmax + 1);
  psi_pow[0] = Vec(std::max(L0, 1), 0);
  if (L0 > 0) psi_pow[0][0] = 1;
  for (int t = 1; t <= tmax; ++t) psi_pow[t] = vec1_mul(psi_pow[t - 1], psi, L0, f);

  const int mult_rows = static_cast<int>(binom2(m + 1));
  const int nb = static_cast<int>(basis.size());
  std::vector<Vec> rows(static_cast<std::size_t>(mult_rows + L0 + L1), Vec(nb, 0));

  // shared power tables for the framed substitution (one per exponent, not
  // one per basis element)
  int mxx = 0, myy = 0;
  for (const auto& B : basis) {
    for (const auto& t : B) {
      mxx = std::max(mxx, t.ex);
      myy = std::max(myy, t.ey);
    }
  }
  std::vector<Jet> xp, yp;
  xp.push_back(Jet::constant(sp, 1));
  for (int i = 1; i <= mxx; ++i) xp.push_back(jet_mul(xp.back(), xs));
  yp.push_back(Jet::constant(sp, 1));
  for (int j = 1; j <= myy; ++j) yp.push_back(jet_mul(yp.back(), ys));

  for (int bi = 0; bi < nb; ++bi) {
    Jet Bt(sp);
    for (const auto& t : basis[bi]) {
      if (t.c) Bt += jet_mul(xp[t.ex], yp[t.ey]).scaled(t.c % f.p);
    }
    // multiplicity >= m at the base point
    int ri = 0;
    for (int deg = 0; deg < m; ++deg) {
      for (int i = deg; i >= 0; --i) rows[ri++][bi] = Bt.coeff(i, deg - i);
    }
    // chart conditions on G = (pullback of B) / yb^m:
    // G[i][t] = Bt[i][t + m - i]
    for (int i = 0; i < L0; ++i) {
      for (int t = 0; i + t * s < L0; ++t) {
        std::uint64_t c = Bt.coeff(i, t + m - i);
        if (!c) continue;
        const Vec& pw = psi_pow[t];
        for (int u = t * s; i + u < L0; ++u) {
          if (pw[u]) rows[mult_rows + i + u][bi] = f.add(rows[mult_rows + i + u][bi], f.mul(c, pw[u]));
        }
      }
    }
    for (int i = 0; i < L1; ++i) {
      for (int t = 1; i + (t - 1) * s < L1 && t <= tmax + 1; ++t) {
        std::uint64_t c = f.mul(Bt.coeff(i, t + m - i), f.reduce(t));
        if (!c) continue;
        const Vec& pw = psi_pow[t - 1];
        for (int u = (t - 1) * s; i + u < L1 && u < L0; ++u) {
          if (pw[u]) rows[mult_rows + L0 + i + u][bi] =
              f.add(rows[mult_rows + L0 + i + u][bi], f.mul(c, pw[u]));
        }
      }
    }
  }
  return rows;
}

std::vector<Vec> component_rows(const SingularityComponent& c, const Placement& pl, int d,
                                const PrimeField& f) {
  return component_rows_for_basis(c, pl, degree_basis(d), f);
}

std::vector<Vec> hmes_rows(const HmesComponent& h, const HmesPlacement& pl, int d,
                           const PrimeField& f) {
  return hmes_rows_for_basis(h, pl, degree_basis(d), f);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

namespace {

std::uint64_t uniform_elt(std::mt19937_64& rng, const PrimeField& f) {
  std::uniform_int_distribution<std::uint64_t> dist(0, f.p - 1);
  return dist(rng);
}

std::uint64_t uniform_nonzero(std::mt19937_64& rng, const PrimeField& f) {
  std::uniform_int_distribution<std::uint64_t> dist(1, f.p - 1);
  return dist(rng);
}

}  // namespace

Placement sample_placement(const SingularityComponent& c, std::mt19937_64& rng,
                           const PrimeField& f) {
  Placement pl;
  pl.a = uniform_elt(rng, f);
  pl.b = uniform_elt(rng, f);
  pl.germ.assign(static_cast<std::size_t>(c.vanish_order() + 3), 0);
  pl.germ[0] = pl.b;
  for (std::size_t j = 1; j < pl.germ.size(); ++j) pl.germ[j] = uniform_elt(rng, f);
  return pl;
}

HmesPlacement sample_hmes_placement(const HmesComponent& h, std::mt19937_64& rng,
                                    const PrimeField& f) {
  HmesPlacement pl;
  pl.a = uniform_elt(rng, f);
  pl.b = uniform_elt(rng, f);
  do {
    for (auto& v : pl.fr) v = uniform_elt(rng, f);
  } while (f.sub(f.mul(pl.fr[0], pl.fr[3]), f.mul(pl.fr[1], pl.fr[2])) == 0);
  pl.fcoef.assign(static_cast<std::size_t>(h.E.stair(0) + 3), 0);
  std::size_t s = static_cast<std::size_t>(h.s);
  if (s < pl.fcoef.size()) {
    pl.fcoef[s] = uniform_nonzero(rng, f);
    for (std::size_t j = s + 1; j < pl.fcoef.size(); ++j) pl.fcoef[j] = uniform_elt(rng, f);
  }
  return pl;
}

RankReport assemble_and_rank(const std::vector<Component>& comps, int d, const PrimeField& f,
                             std::uint64_t seed) {
  if (comps.empty()) throw std::invalid_argument("component list is empty");
  std::mt19937_64 rng(mix_seed(seed, 0x7261 /* "ra" */));
  const long long ambient = static_cast<long long>(d + 1) * (d + 2) / 2;
  Matrix mat(f, 0, static_cast<int>(ambient));
  std::set<std::pair<std::uint64_t, std::uint64_t>> used;

  RankReport rep;
  rep.d = d;
  rep.prime = f.p;
  rep.seed = seed;
  rep.ambient = ambient;
  for (const auto& comp : comps) {
    rep.components.push_back(component_str(comp));
    rep.total_length += component_length(comp);
    std::vector<Vec> rows;
    for (int attempt = 0;; ++attempt) {
      if (attempt > 200) throw std::runtime_error("could not sample distinct base points");
      if (std::holds_alternative<SingularityComponent>(comp)) {
        const auto& c = std::get<SingularityComponent>(comp);
        Placement pl = sample_placement(c, rng, f);
        if (!used.insert({pl.a, pl.b}).second) continue;
        rows = component_rows(c, pl, d, f);
      } else {
        const auto& h = std::get<HmesComponent>(comp);
        HmesPlacement pl = sample_hmes_placement(h, rng, f);
        if (!used.insert({pl.a, pl.b}).second) continue;
        rows = hmes_rows(h, pl, d, f);
      }
      break;
    }
    for (auto& r : rows) mat.append_row(r);
  }
  rep.rank = rank(mat);
  rep.expected = std::min(rep.total_length, rep.ambient);
  rep.deficiency = rep.expected - rep.rank;
  rep.maximal = rep.deficiency == 0;
  return rep;
}

Verdict verify_general(const std::vector<Component>& comps, int d, int trials,
                       const PrimeField& f, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  Verdict v;
  v.min_deficiency = -1;
  for (int t = 0; t < trials; ++t) {
    RankReport rep = assemble_and_rank(comps, d, f, mix_seed(seed, static_cast<std::uint64_t>(t)));
    rep.trials_used = t + 1;
    if (rep.maximal) {
      v.certified_maximal = true;
      v.trial = t;
      v.min_deficiency = 0;
      v.best = rep;
      return v;
    }
    if (v.min_deficiency < 0 || rep.deficiency < v.min_deficiency) {
      v.min_deficiency = rep.deficiency;
      v.best = rep;
    }
  }
  return v;
}

long long expected_dimension(int d, const std::vector<Component>& comps) {
  long long n = 0;
  for (const auto& c : comps) n += component_length(c);
  return std::max<long long>(-1, static_cast<long long>(d) * (d + 3) / 2 - n);
}

namespace {

Staircase initial_ideal_at_order(const std::vector<Poly2>& gens, int order, const PrimeField& f) {
  SpacePtr sp = make_space(f, 2, order);
  std::vector<Jet> jets;
  for (const auto& g : gens) {
    Jet j(sp);
    for (const auto& t : g) {
      if (t.c % f.p == 0) continue;
      int idx = sp->index(t.ex, t.ey);
      if (idx < 0) throw std::invalid_argument("generator degree exceeds the truncation order");
      j.coeffs()[idx] = f.add(j.coeffs()[idx], t.c % f.p);
    }
    jets.push_back(std::move(j));
  }
  // local order with 1 > x > y: monomials compare by exponent vector read
  // lexicographically (x first), smaller vector = larger monomial. Pivots in
  // this priority are the leading monomials.
  std::vector<int> prio(sp->dim());
  for (int i = 0; i < sp->dim(); ++i) prio[i] = i;
  std::sort(prio.begin(), prio.end(), [&](int i, int j) {
    const auto& a = sp->mono(i);
    const auto& b = sp->mono(j);
    if (a[0] != b[0]) return a[0] < b[0];
    return a[1] < b[1];
  });
  Subspace S = ideal_span(jets, sp, prio);
  std::vector<std::pair<int, int>> lead;
  for (int col : S.pivots()) lead.emplace_back(sp->mono(col)[0], sp->mono(col)[1]);

  std::vector<long long> stairs;
  for (int b = 0; b < order; ++b) {
    long long lb = -1;
    for (auto [px, py] : lead) {
      if (py <= b && (lb < 0 || px < lb)) lb = px;
    }
    if (lb < 0) throw std::runtime_error("ideal has no finite colength within the truncation");
    if (lb == 0) break;
    stairs.push_back(lb);
  }
  if (!stairs.empty() && stairs.back() != 0 &&
      static_cast<int>(stairs.size()) >= order)
    throw std::runtime_error("staircase did not close within the truncation");
  return Staircase(std::move(stairs));
}

}  // namespace

Staircase initial_ideal_neglex(const std::vector<Poly2>& local_generators, int M,
                               const PrimeField& f) {
  Staircase s1 = initial_ideal_at_order(local_generators, M, f);
  Staircase s2 = initial_ideal_at_order(local_generators, M + 2, f);
  if (s1 != s2)
    throw std::runtime_error("initial ideal not stabilized at truncation order M");
  return s1;
}

}  // namespace mr2
