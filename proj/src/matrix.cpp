#include "mr2/matrix.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mr2 {

void Matrix::append_row(const std::vector<std::uint64_t>& row) {
  if (static_cast<int>(row.size()) != cols)
    throw std::invalid_argument("row width mismatch");
  a.insert(a.end(), row.begin(), row.end());
  ++rows;
}

namespace {

// Forward elimination in place; returns the number of pivots found.
// The update over the remaining rows is the data-parallel inner loop.
template <bool Parallel>
int eliminate(Matrix& m) {
  const PrimeField f = m.f;
  const int rows = m.rows, cols = m.cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (m.at(i, c) != 0) { piv = i; break; }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = c; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    }
    const std::uint64_t inv = f.inv(m.at(r, c));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Parallel && rows - r > 64)
#endif
    for (int i = r + 1; i < rows; ++i) {
      const std::uint64_t v = m.at(i, c);
      if (v == 0) continue;
      const std::uint64_t factor = f.mul(v, inv);
      std::uint64_t* dst = &m.a[static_cast<std::size_t>(i) * cols];
      const std::uint64_t* src = &m.a[static_cast<std::size_t>(r) * cols];
      for (int j = c; j < cols; ++j) {
        if (src[j]) dst[j] = f.sub(dst[j], f.mul(factor, src[j]));
      }
    }
    ++r;
  }
  return r;
}

}  // namespace

int rank_serial(Matrix m) { return eliminate<false>(m); }

int rank(Matrix m) { return eliminate<true>(m); }

}  // namespace mr2
