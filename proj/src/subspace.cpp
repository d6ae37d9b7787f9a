#include "mr2/subspace.hpp"

#include <numeric>
#include <stdexcept>

namespace mr2 {

Subspace::Subspace(SpacePtr sp) : sp_(std::move(sp)) {
  prio_rank_.resize(sp_->dim());
  std::iota(prio_rank_.begin(), prio_rank_.end(), 0);
  piv_row_.assign(sp_->dim(), -1);
}

Subspace::Subspace(SpacePtr sp, std::vector<int> priority) : sp_(std::move(sp)) {
  if (static_cast<int>(priority.size()) != sp_->dim())
    throw std::invalid_argument("priority size mismatch");
  prio_rank_.assign(sp_->dim(), -1);
  for (int r = 0; r < static_cast<int>(priority.size()); ++r) prio_rank_[priority[r]] = r;
  piv_row_.assign(sp_->dim(), -1);
}

int Subspace::ambient_dim() const { return sp_->dim(); }

std::vector<std::uint64_t> Subspace::reduce(std::vector<std::uint64_t> v) const {
  const PrimeField& f = sp_->field();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::uint64_t c = v[piv_[r]];
    if (c) row_axpy(v, rows_[r], f.neg(c), f);
  }
  return v;
}

bool Subspace::contains(const std::vector<std::uint64_t>& v) const {
  auto w = reduce(v);
  for (auto x : w)
    if (x) return false;
  return true;
}

bool Subspace::contains_all(const Subspace& other) const {
  for (const auto& r : other.basis())
    if (!contains(r)) return false;
  return true;
}

bool Subspace::insert(std::vector<std::uint64_t> v) {
  if (static_cast<int>(v.size()) != sp_->dim())
    throw std::invalid_argument("vector size mismatch");
  const PrimeField& f = sp_->field();
  v = reduce(std::move(v));
  int lead = -1, lead_rank = sp_->dim();
  for (int c = 0; c < static_cast<int>(v.size()); ++c) {
    if (v[c] && prio_rank_[c] < lead_rank) {
      lead = c;
      lead_rank = prio_rank_[c];
    }
  }
  if (lead < 0) return false;
  std::uint64_t inv = f.inv(v[lead]);
  for (auto& x : v) x = f.mul(x, inv);
  // back-substitute to keep full RREF
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    std::uint64_t c = rows_[r][lead];
    if (c) row_axpy(rows_[r], v, f.neg(c), f);
  }
  piv_row_[lead] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(v));
  piv_.push_back(lead);
  return true;
}

bool Subspace::equals(const Subspace& other) const {
  if (!sp_->same(*other.sp_)) return false;
  if (dim() != other.dim()) return false;
  return contains_all(other) && other.contains_all(*this);
}

Subspace span_of(const std::vector<Jet>& gens, const SpacePtr& sp) {
  Subspace s(sp);
  for (const auto& g : gens) {
    if (!g.space()->same(*sp)) throw std::invalid_argument("generator space mismatch");
    s.insert(g);
  }
  return s;
}

namespace {

Subspace ideal_span_impl(const std::vector<Jet>& gens, Subspace s) {
  const SpacePtr& sp = s.space();
  for (const auto& g : gens) {
    if (!g.space()->same(*sp)) throw std::invalid_argument("generator space mismatch");
    s.insert(g);
  }
  // Close the span under multiplication by each variable. Each basis row is
  // shifted once per variable: a row later modified by back-substitution is a
  // combination of its old value and newer rows, whose shifts are covered in
  // turn, so the final span is still closed (and equals the image of the full
  // ideal in the truncated quotient ring).
  for (int processed = 0; processed < s.dim(); ++processed) {
    Jet row(sp);
    row.coeffs() = s.basis()[processed];
    for (int v = 0; v < sp->vars(); ++v) {
      Jet shifted = jet_shift(row, v == 0, v == 1, v == 2);
      if (!shifted.is_zero()) s.insert(shifted);
    }
  }
  return s;
}

}  // namespace

Subspace ideal_span(const std::vector<Jet>& gens, const SpacePtr& sp) {
  return ideal_span_impl(gens, Subspace(sp));
}

Subspace ideal_span(const std::vector<Jet>& gens, const SpacePtr& sp, std::vector<int> priority) {
  return ideal_span_impl(gens, Subspace(sp, std::move(priority)));
}

Subspace add(const Subspace& a, const Subspace& b) {
  if (!a.space()->same(*b.space())) throw std::invalid_argument("space mismatch");
  Subspace s = a;
  for (const auto& r : b.basis()) s.insert(r);
  return s;
}

std::vector<std::vector<std::uint64_t>> eliminate_heads(
    std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> rows,
    const PrimeField& f) {
  std::vector<std::vector<std::uint64_t>> out;
  // echelon rows with pivots restricted to the head block
  std::vector<std::size_t> pivot_rows;
  std::vector<int> pivot_cols;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto& [head, tail] = rows[i];
    for (std::size_t k = 0; k < pivot_rows.size(); ++k) {
      std::uint64_t c = head[pivot_cols[k]];
      if (!c) continue;
      const auto& [ph, pt] = rows[pivot_rows[k]];
      std::uint64_t nc = f.neg(c);
      row_axpy(head, ph, nc, f);
      row_axpy(tail, pt, nc, f);
    }
    int lead = -1;
    for (int c = 0; c < static_cast<int>(head.size()); ++c) {
      if (head[c]) { lead = c; break; }
    }
    if (lead < 0) {
      out.push_back(tail);
      continue;
    }
    std::uint64_t inv = f.inv(head[lead]);
    for (auto& x : head) x = f.mul(x, inv);
    for (auto& x : tail) x = f.mul(x, inv);
    pivot_rows.push_back(i);
    pivot_cols.push_back(lead);
  }
  return out;
}

Subspace colon(const Subspace& S, const Jet& g, const SpacePtr& out) {
  if (!g.space()->same(*S.space())) throw std::invalid_argument("g must live in S's space");
  const PrimeField& f = out->field();
  std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> rows;
  rows.reserve(out->dim());
  for (int i = 0; i < out->dim(); ++i) {
    const auto& m = out->mono(i);
    Jet prod = jet_shift(g, m[0], out->vars() > 1 ? m[1] : 0, out->vars() > 2 ? m[2] : 0);
    std::vector<std::uint64_t> tail(out->dim(), 0);
    tail[i] = 1;
    rows.emplace_back(S.reduce(prod.coeffs()), std::move(tail));
  }
  Subspace result(out);
  for (auto& t : eliminate_heads(std::move(rows), f)) result.insert(std::move(t));
  return result;
}

Subspace set_var_zero(const Subspace& S, int var, const SpacePtr& out) {
  const JetSpace& in = *S.space();
  if (out->vars() != in.vars() - 1) throw std::invalid_argument("out must drop one variable");
  Subspace result(out);
  for (const auto& row : S.basis()) {
    std::vector<std::uint64_t> v(out->dim(), 0);
    const PrimeField& f = out->field();
    for (int i = 0; i < in.dim(); ++i) {
      if (!row[i]) continue;
      const auto& m = in.mono(i);
      if (m[var] != 0) continue;
      int e[2];
      int k = 0;
      for (int w = 0; w < in.vars(); ++w) {
        if (w != var) e[k++] = m[w];
      }
      int j = out->vars() == 1 ? out->index(e[0]) : out->index(e[0], e[1]);
      if (j >= 0) v[j] = f.add(v[j], row[i]);
    }
    result.insert(std::move(v));
  }
  return result;
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (!a.space()->same(*b.space())) throw std::invalid_argument("space mismatch");
  const PrimeField& f = a.space()->field();
  std::vector<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> rows;
  for (const auto& r : a.basis()) rows.emplace_back(r, r);
  std::vector<std::uint64_t> zero(a.space()->dim(), 0);
  for (const auto& r : b.basis()) rows.emplace_back(r, zero);
  Subspace result(a.space());
  for (auto& t : eliminate_heads(std::move(rows), f)) result.insert(std::move(t));
  return result;
}

}  // namespace mr2
