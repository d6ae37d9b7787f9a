#include "mr2/jet.hpp"

#include <algorithm>
#include <stdexcept>

namespace mr2 {

JetSpace::JetSpace(PrimeField f, int vars, int order, std::array<int, 3> caps)
    : f_(f), vars_(vars), order_(order), caps_(caps) {
  if (vars < 1 || vars > 3) throw std::invalid_argument("jet space supports 1..3 variables");
  if (order < 1) throw std::invalid_argument("truncation order must be >= 1");
  for (int v = 0; v < 3; ++v) {
    if (v >= vars) {
      caps_[v] = 1;  // unused variables are pinned to exponent 0
    } else if (caps_[v] < 0 || caps_[v] > order) {
      caps_[v] = order;
    }
  }
  // graded-lex enumeration
  for (int d = 0; d < order; ++d) {
    for (int a = std::min(d, caps_[0] - 1); a >= 0; --a) {
      if (vars == 1) {
        if (a == d) monos_.push_back({a, 0, 0});
        continue;
      }
      for (int b = std::min(d - a, caps_[1] - 1); b >= 0; --b) {
        if (vars == 2) {
          if (a + b == d) monos_.push_back({a, b, 0});
          continue;
        }
        int c = d - a - b;
        if (c >= 0 && c < caps_[2]) monos_.push_back({a, b, c});
      }
    }
  }
  lut_.assign(static_cast<std::size_t>(caps_[0]) * caps_[1] * caps_[2], -1);
  for (int i = 0; i < static_cast<int>(monos_.size()); ++i) {
    const auto& m = monos_[i];
    lut_[(static_cast<std::size_t>(m[0]) * caps_[1] + m[1]) * caps_[2] + m[2]] = i;
  }
}

int JetSpace::index(int a, int b, int c) const {
  if (a < 0 || b < 0 || c < 0) return -1;
  if (a >= caps_[0] || b >= caps_[1] || c >= caps_[2]) return -1;
  if (a + b + c >= order_) return -1;
  return lut_[(static_cast<std::size_t>(a) * caps_[1] + b) * caps_[2] + c];
}

bool JetSpace::same(const JetSpace& o) const {
  return f_ == o.f_ && vars_ == o.vars_ && order_ == o.order_ && caps_ == o.caps_;
}

SpacePtr make_space(PrimeField f, int vars, int order, std::array<int, 3> caps) {
  return std::make_shared<JetSpace>(f, vars, order, caps);
}

Jet Jet::monomial(const SpacePtr& sp, int a, int b, int c, std::uint64_t coeff) {
  Jet j(sp);
  int i = sp->index(a, b, c);
  if (i < 0) throw std::invalid_argument("monomial outside jet space");
  j.c_[i] = coeff % sp->field().p;
  return j;
}

Jet Jet::constant(const SpacePtr& sp, std::uint64_t v) { return monomial(sp, 0, 0, 0, v); }

std::uint64_t Jet::coeff(int a, int b, int c) const {
  int i = sp_->index(a, b, c);
  return i < 0 ? 0 : c_[i];
}

void Jet::set(int a, int b, int c, std::uint64_t v) {
  int i = sp_->index(a, b, c);
  if (i < 0) throw std::invalid_argument("monomial outside jet space");
  c_[i] = v % sp_->field().p;
}

bool Jet::is_zero() const {
  for (auto v : c_)
    if (v) return false;
  return true;
}

Jet& Jet::operator+=(const Jet& o) {
  const PrimeField& f = sp_->field();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = f.add(c_[i], o.c_[i]);
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  const PrimeField& f = sp_->field();
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = f.sub(c_[i], o.c_[i]);
  return *this;
}

Jet Jet::scaled(std::uint64_t s) const {
  const PrimeField& f = sp_->field();
  Jet r(sp_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = f.mul(c_[i], s);
  return r;
}

Jet jet_mul(const Jet& a, const Jet& b) {
  const JetSpace& sp = *a.space();
  if (!sp.same(*b.space())) throw std::invalid_argument("jet spaces differ");
  const PrimeField& f = sp.field();
  Jet r(a.space());
  const int n = sp.dim();
  for (int i = 0; i < n; ++i) {
    std::uint64_t ca = a.coeffs()[i];
    if (!ca) continue;
    const auto& ma = sp.mono(i);
    for (int j = 0; j < n; ++j) {
      std::uint64_t cb = b.coeffs()[j];
      if (!cb) continue;
      const auto& mb = sp.mono(j);
      int k = sp.index(ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]);
      if (k >= 0) r.coeffs()[k] = f.add(r.coeffs()[k], f.mul(ca, cb));
    }
  }
  return r;
}

Jet jet_pow(const Jet& a, int e) {
  Jet r = Jet::constant(a.space(), 1);
  Jet base = a;
  while (e > 0) {
    if (e & 1) r = jet_mul(r, base);
    e >>= 1;
    if (e) base = jet_mul(base, base);
  }
  return r;
}

Jet jet_shift(const Jet& a, int d0, int d1, int d2) {
  const JetSpace& sp = *a.space();
  Jet r(a.space());
  for (int i = 0; i < sp.dim(); ++i) {
    std::uint64_t v = a.coeffs()[i];
    if (!v) continue;
    const auto& m = sp.mono(i);
    int k = sp.index(m[0] + d0, m[1] + d1, m[2] + d2);
    if (k >= 0) r.coeffs()[k] = v;
  }
  return r;
}

Poly2 poly_partial(const Poly2& F, int var, const PrimeField& f) {
  Poly2 r;
  for (const auto& t : F) {
    int e = var == 0 ? t.ex : t.ey;
    if (e == 0) continue;
    std::uint64_t c = f.mul(t.c, f.reduce(e));
    if (var == 0)
      r.push_back({t.ex - 1, t.ey, c});
    else
      r.push_back({t.ex, t.ey - 1, c});
  }
  return r;
}

Jet jet_compose(const Poly2& F, const Jet& xs, const Jet& ys) {
  const SpacePtr& sp = xs.space();
  if (!sp->same(*ys.space())) throw std::invalid_argument("jet spaces differ");
  int mx = 0, my = 0;
  for (const auto& t : F) {
    mx = std::max(mx, t.ex);
    my = std::max(my, t.ey);
  }
  std::vector<Jet> px, py;
  px.reserve(mx + 1);
  py.reserve(my + 1);
  px.push_back(Jet::constant(sp, 1));
  for (int i = 1; i <= mx; ++i) px.push_back(jet_mul(px.back(), xs));
  py.push_back(Jet::constant(sp, 1));
  for (int i = 1; i <= my; ++i) py.push_back(jet_mul(py.back(), ys));
  Jet r(sp);
  for (const auto& t : F) {
    if (!t.c) continue;
    r += jet_mul(px[t.ex], py[t.ey]).scaled(t.c);
  }
  return r;
}

Vec vec1_mul(const Vec& a, const Vec& b, int M, const PrimeField& f) {
  Vec r(M, 0);
  for (int i = 0; i < static_cast<int>(a.size()) && i < M; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < static_cast<int>(b.size()) && i + j < M; ++j) {
      if (b[j]) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
  }
  return r;
}

Vec vec1_pow(const Vec& a, int e, int M, const PrimeField& f) {
  Vec r(M, 0);
  r[0] = 1;
  Vec base = a;
  base.resize(M, 0);
  while (e > 0) {
    if (e & 1) r = vec1_mul(r, base, M, f);
    e >>= 1;
    if (e) base = vec1_mul(base, base, M, f);
  }
  return r;
}

}  // namespace mr2
