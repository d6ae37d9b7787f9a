#ifndef MR2_MATRIX_HPP
#define MR2_MATRIX_HPP

#include <cstdint>
#include <vector>

#include "mr2/field.hpp"

namespace mr2 {

/// Dense rectangular matrix over GF(p), row major.
struct Matrix {
  PrimeField f;
  int rows = 0;
  int cols = 0;
  std::vector<std::uint64_t> a;

  Matrix(PrimeField field, int r, int c)
      : f(field), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  std::uint64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  std::uint64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  void append_row(const std::vector<std::uint64_t>& row);
};

/// Exact rank by Gaussian elimination; serial reference implementation.
int rank_serial(Matrix m);

/// Exact rank; identical algorithm with the row-update loop parallelized
/// (OpenMP). Falls back to the serial loop when built without OpenMP.
int rank(Matrix m);

}  // namespace mr2

#endif
