#ifndef MR2_JET_HPP
#define MR2_JET_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "mr2/field.hpp"

namespace mr2 {

/// Coefficient space of truncated polynomials ("jets") in 1 to 3 variables
/// over GF(p). A monomial x0^a x1^b x2^c belongs to the space when
/// a + b + c < order and additionally a < cap(0), b < cap(1), c < cap(2).
/// Monomials are enumerated in graded lexicographic order (by total degree,
/// then by exponent vector, first variable most significant, higher exponent
/// first); this indexing is fixed and shared by every module.
class JetSpace {
 public:
  JetSpace(PrimeField f, int vars, int order, std::array<int, 3> caps = {-1, -1, -1});

  const PrimeField& field() const { return f_; }
  int vars() const { return vars_; }
  int order() const { return order_; }
  int cap(int v) const { return caps_[v]; }
  int dim() const { return static_cast<int>(monos_.size()); }
  const std::array<int, 3>& mono(int i) const { return monos_[i]; }
  /// Index of a monomial, or -1 when it lies outside the truncation.
  int index(int a, int b = 0, int c = 0) const;
  bool same(const JetSpace& o) const;

 private:
  PrimeField f_;
  int vars_;
  int order_;
  std::array<int, 3> caps_;
  std::vector<std::array<int, 3>> monos_;
  std::vector<int> lut_;  // dense (cap0 x cap1 x cap2) exponent -> index table
};

using SpacePtr = std::shared_ptr<const JetSpace>;

SpacePtr make_space(PrimeField f, int vars, int order, std::array<int, 3> caps = {-1, -1, -1});

/// A truncated polynomial: coefficient vector over a JetSpace.
class Jet {
 public:
  explicit Jet(SpacePtr sp) : sp_(std::move(sp)), c_(sp_->dim(), 0) {}

  static Jet monomial(const SpacePtr& sp, int a, int b = 0, int c = 0, std::uint64_t coeff = 1);
  static Jet constant(const SpacePtr& sp, std::uint64_t v);

  const SpacePtr& space() const { return sp_; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::vector<std::uint64_t>& coeffs() { return c_; }
  std::uint64_t coeff(int a, int b = 0, int c = 0) const;
  void set(int a, int b, int c, std::uint64_t v);
  bool is_zero() const;

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  Jet scaled(std::uint64_t s) const;

 private:
  SpacePtr sp_;
  std::vector<std::uint64_t> c_;
};

/// Truncated product; both factors must live in the same space.
Jet jet_mul(const Jet& a, const Jet& b);
Jet jet_pow(const Jet& a, int e);
/// Multiply by the monomial x0^d0 x1^d1 x2^d2, dropping terms that leave the space.
Jet jet_shift(const Jet& a, int d0, int d1 = 0, int d2 = 0);

/// Sparse polynomial in two variables with field coefficients, used as the
/// symbolic input of composition and differentiation.
struct PolyTerm {
  int ex, ey;
  std::uint64_t c;
};
using Poly2 = std::vector<PolyTerm>;

/// Partial derivative with respect to variable 0 (x) or 1 (y).
Poly2 poly_partial(const Poly2& F, int var, const PrimeField& f);

/// F(xs, ys), computed by truncated substitution. xs and ys share a space,
/// which is also the space of the result.
Jet jet_compose(const Poly2& F, const Jet& xs, const Jet& ys);

// Univariate truncated polynomial helpers (coefficient vectors of length M).
using Vec = std::vector<std::uint64_t>;
Vec vec1_mul(const Vec& a, const Vec& b, int M, const PrimeField& f);
Vec vec1_pow(const Vec& a, int e, int M, const PrimeField& f);

}  // namespace mr2

#endif
