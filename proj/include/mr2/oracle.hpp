#ifndef MR2_ORACLE_HPP
#define MR2_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mr2/jet.hpp"
#include "mr2/staircase.hpp"
#include "mr2/subspace.hpp"

namespace mr2 {

/// Verdict of an oracle instance. checked = false means a precondition
/// filter rejected the instance (with the reason in note); ok is meaningful
/// only when checked is true.
struct OracleResult {
  bool checked = false;
  bool ok = false;
  std::string note;
};

/// Hypothesis of the slicing family: stair drops satisfy
/// l(i) - l(i+1) >= 2 for all i < h(0) - 1.
bool flatstairs_hypothesis(const Staircase& E);

/// Default truncation: largest complement coordinate + p + 3.
int default_trunc(const Staircase& E, int p);

/// Colength of the p-trace of I_E (f = x+y+t) in k[x]: literal recipe
/// (add (y), colon by t^{p-1}, set t = 0, mod y). Must equal h(p-1); the
/// caller compares. Computed at truncation M and M+2; throws on mismatch.
/// M <= 0 selects the default truncation.
int trace_dim(const Staircase& E, int p, int M, const PrimeField& f);

/// Checks the three slicing-family facts at once: the p-residual of I_E
/// (add (t^p), colon by y, set t = 0) equals I_{(sigma(E,p), x+y, x)} as a
/// truncated subspace, the p-trace colength equals h(p-1), and the
/// conservation law complement(E) = trace + complement(sigma(E,p)).
bool verify_flatstairs(const Staircase& E, int p, int M, const PrimeField& f);

/// Finite determinacy of staircase ideals: given staircase bounds
/// (stair drops <= alpha where l != 0, height drops <= beta where h != 0)
/// and perturbations f-f' in (f,g)^alpha, g-g' in (f,g)^beta with
/// (f,g) = (f',g'), the ideals (g^{e1} f^{e2}) and (g'^{e1} f'^{e2}) over
/// the corners of E coincide. All memberships and equalities are checked on
/// truncations at M and M+2.
OracleResult verify_finideterm(const Staircase& E, int alpha, int beta,
                               const Poly2& fa, const Poly2& ga,
                               const Poly2& fb, const Poly2& gb,
                               int M, const PrimeField& f);

/// The conditions of an H component are independent on the local jet space:
/// rank of its rows against all local monomials of order < M equals
/// scheme_length(m, E). M <= 0 selects m + l(0) + 2. Randomness (the germ
/// tail) comes from seed.
bool verify_codimform(const Staircase& E, long long s, long long m, int M,
                      const PrimeField& f, std::uint64_t seed);

/// Global colength of (x^{e1} (x+y+c)^{e2}) over the corners of E is
/// complement(E) for every sampled value c (constant fiber length).
bool fiber_lengths_constant(const Staircase& E, int M,
                            const std::vector<std::uint64_t>& t_values,
                            const PrimeField& f);

/// Flat limit of the pushforward family with germ f_t = yb + xb^{s+1} + t xb^s
/// and multiplicity 2s: t-saturate within truncation, set t = 0, then check
/// that the limit has colength scheme_length(2s, E), contains the pushforward
/// ideal of the predicted H_{2s+i, E_i, s+1}, and that the staircase read off
/// the limit's virtual transform is exactly E_i. T bounds the saturation
/// depth (<= 0 selects a default); throws when the limit does not stabilize.
bool verify_espbloc_limit(const Staircase& E, long long s, int M, int T,
                          const PrimeField& f);

/// Differential step: with I_t = I_E and V spanned by the given polynomials,
/// if the level-p map on V/(V cap (y)) is injective then every t = 0 slice of
/// Ker(V otimes k[t] -> R_t/I_t) lies in y * (Res(V) cap Res^p(I_t)).
/// Instances failing the injectivity precondition are skipped (checked =
/// false). T bounds the t-degree of the kernel search.
OracleResult verify_diff_horace(const Staircase& E, int p,
                                const std::vector<Poly2>& V_generators,
                                int T, int M, const PrimeField& f);

}  // namespace mr2

#endif
