#ifndef MR2_SUBSPACE_HPP
#define MR2_SUBSPACE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "mr2/jet.hpp"

namespace mr2 {

/// A linear subspace of a jet space, maintained as a reduced row echelon
/// basis. Pivots are selected along a column priority order (by default the
/// graded-lex monomial index order), so the pivot set of an ideal span equals
/// the set of leading monomials under the corresponding term order.
class Subspace {
 public:
  explicit Subspace(SpacePtr sp);
  Subspace(SpacePtr sp, std::vector<int> priority);

  /// Insert a vector; returns true if the dimension grew.
  bool insert(std::vector<std::uint64_t> v);
  bool insert(const Jet& j) { return insert(j.coeffs()); }

  /// Normal form of v modulo the subspace.
  std::vector<std::uint64_t> reduce(std::vector<std::uint64_t> v) const;
  bool contains(const std::vector<std::uint64_t>& v) const;
  bool contains(const Jet& j) const { return contains(j.coeffs()); }
  bool contains_all(const Subspace& other) const;

  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient_dim() const;
  int quotient_dim() const { return ambient_dim() - dim(); }

  const std::vector<std::vector<std::uint64_t>>& basis() const { return rows_; }
  /// Pivot column (monomial index) of each basis row.
  const std::vector<int>& pivots() const { return piv_; }
  const SpacePtr& space() const { return sp_; }

  bool equals(const Subspace& other) const;

 private:
  SpacePtr sp_;
  std::vector<int> prio_rank_;  // column -> position in the priority order
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<int> piv_;
  std::vector<int> piv_row_;  // column -> row index, or -1
};

/// Plain span of the given jets.
Subspace span_of(const std::vector<Jet>& gens, const SpacePtr& sp);

/// Image of the ideal generated by gens in the truncated ring: the span is
/// closed under multiplication by each variable (iterated to a fixed point).
Subspace ideal_span(const std::vector<Jet>& gens, const SpacePtr& sp);
Subspace ideal_span(const std::vector<Jet>& gens, const SpacePtr& sp, std::vector<int> priority);

/// Sum of two subspaces of the same space.
Subspace add(const Subspace& a, const Subspace& b);

/// colon(S, g) = { h in out | h*g in S }, computed by kernel extraction.
/// Valid whenever products of out-monomials with g stay inside S's space.
Subspace colon(const Subspace& S, const Jet& g, const SpacePtr& out);

/// Image of S under "set variable var to zero"; out is the space on the
/// remaining variables (in their original order).
Subspace set_var_zero(const Subspace& S, int var, const SpacePtr& out);

/// Intersection (Zassenhaus).
Subspace intersect(const Subspace& a, const Subspace& b);

/// Eliminate on the head blocks; returns the tail blocks of all rows whose
/// head reduced to zero. Shared engine of colon / intersect / kernel finding.
std::vector<std::vector<std::uint64_t>> eliminate_heads(
    std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> rows,
    const PrimeField& f);

}  // namespace mr2

#endif
