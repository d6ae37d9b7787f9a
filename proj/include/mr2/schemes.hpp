#ifndef MR2_SCHEMES_HPP
#define MR2_SCHEMES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "mr2/jet.hpp"
#include "mr2/matrix.hpp"
#include "mr2/staircase.hpp"

namespace mr2 {

/// One multiplicity-two singularity scheme (or simple point, or a
/// 2-curvilinear scheme). Conditions are: vanishing to order ell along the
/// germ of maximal contact, and vanishing of the y-derivative to order N-ell.
struct SingularityComponent {
  enum class Kind { Tacnode, Cusp, TwoCurvilinear, SimplePoint };
  Kind kind = Kind::SimplePoint;
  long long k = 0;  // Tacnode/Cusp parameter
  long long N = 1, ell = 1;

  static SingularityComponent tacnode(long long k);         // A_{2k-1}: N=3k, ell=2k
  static SingularityComponent cusp(long long k);            // A_{2k-2}, k>=2: N=3k-1, ell=2k-1
  static SingularityComponent two_curvilinear(long long N, long long ell);
  static SingularityComponent simple_point();

  long long vanish_order() const { return ell; }
  long long derivative_order() const { return N - ell; }
  std::string str() const;
};

/// A point of the H_{m,E,s} family: multiplicity m at the base point plus a
/// staircase scheme on the first blow-up, carried by a germ of intersection
/// order s with the exceptional divisor.
struct HmesComponent {
  long long m = 0;
  Staircase E;
  long long s = 1;

  long long length() const { return scheme_length(m, E); }
  std::string str() const;
};

using Component = std::variant<SingularityComponent, HmesComponent>;

long long component_length(const Component& c);
std::string component_str(const Component& c);

/// Base point over GF(p) plus the jet of the maximal-contact germ
/// y = germ[0] + germ[1] (x-a) + germ[2] (x-a)^2 + ...  (germ[0] == b).
struct Placement {
  std::uint64_t a = 0, b = 0;
  Vec germ;
};

/// Base point, an invertible frame (X,Y) = (a,b) + fr * (xt,yt), and the
/// blow-up chart germ f = yb + sum_{j>=s} fcoef[j] xb^j with fcoef[s] != 0.
struct HmesPlacement {
  std::uint64_t a = 0, b = 0;
  std::uint64_t fr[4] = {1, 0, 0, 1};
  Vec fcoef;
};

/// Affine monomial basis X^i Y^j, i+j <= d, in graded-lex order; realizes
/// the coefficient space of curves of degree d in one affine chart.
std::vector<Poly2> degree_basis(int d);

/// Basis of local jets (X-a)^i (Y-b)^j, i+j < M, expanded into monomials.
std::vector<Poly2> local_monomial_basis(std::uint64_t a, std::uint64_t b, int M,
                                        const PrimeField& f);

/// Condition rows of a component evaluated against an arbitrary polynomial
/// basis; one row per linear condition, one column per basis element.
std::vector<Vec> component_rows_for_basis(const SingularityComponent& c, const Placement& pl,
                                          const std::vector<Poly2>& basis, const PrimeField& f);
std::vector<Vec> hmes_rows_for_basis(const HmesComponent& h, const HmesPlacement& pl,
                                     const std::vector<Poly2>& basis, const PrimeField& f);

/// Rows against the curve coefficient space of degree d.
std::vector<Vec> component_rows(const SingularityComponent& c, const Placement& pl, int d,
                                const PrimeField& f);
std::vector<Vec> hmes_rows(const HmesComponent& h, const HmesPlacement& pl, int d,
                           const PrimeField& f);

Placement sample_placement(const SingularityComponent& c, std::mt19937_64& rng,
                           const PrimeField& f);
HmesPlacement sample_hmes_placement(const HmesComponent& h, std::mt19937_64& rng,
                                    const PrimeField& f);

struct RankReport {
  int d = 0;
  std::vector<std::string> components;
  long long total_length = 0;
  long long ambient = 0;
  long long rank = 0;
  long long expected = 0;  // min(total_length, ambient)
  bool maximal = false;
  long long deficiency = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  int trials_used = 1;
};

/// Sample general placements (distinct base points), stack all condition
/// rows, and compute the exact rank.
RankReport assemble_and_rank(const std::vector<Component>& comps, int d, const PrimeField& f,
                             std::uint64_t seed);

struct Verdict {
  bool certified_maximal = false;
  int trial = -1;               // first certifying trial (0-based)
  long long min_deficiency = 0; // best deficiency seen when not certified
  RankReport best;
};

/// One-sided certificate: a single trial achieving the expected rank proves
/// generic maximal rank; failure across all trials only reports the best
/// deficiency observed.
Verdict verify_general(const std::vector<Component>& comps, int d, int trials,
                       const PrimeField& f, std::uint64_t seed);

/// max(-1, d(d+3)/2 - sum of lengths).
long long expected_dimension(int d, const std::vector<Component>& comps);

/// Staircase of leading exponents of the span of a finite-colength local
/// ideal under the negative lexicographic local order with 1 > x > y.
/// Computed at truncation M and M+2; throws if they disagree or if the
/// colength does not stabilize.
Staircase initial_ideal_neglex(const std::vector<Poly2>& local_generators, int M,
                               const PrimeField& f);

/// splitmix64-style seed mixing for per-trial / per-case RNG streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace mr2

#endif
