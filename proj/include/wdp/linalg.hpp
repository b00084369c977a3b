#pragma once

#include <vector>

#include "wdp/numeric.hpp"

namespace wdp {

/// Dense rational matrix, row major.
struct QMat {
  size_t rows = 0, cols = 0;
  std::vector<Rat> a;

  QMat() = default;
  QMat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
  Rat& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Rat& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

/// Row echelon data from fraction-free (Bareiss) elimination of the
/// denominator-cleared integer matrix.
struct Echelon {
  size_t rows = 0, cols = 0;
  std::vector<Int> m;           // integer echelon entries
  std::vector<size_t> pivots;   // pivot column per pivot row
  int sign = 1;                 // row-swap parity

  Int& at(size_t i, size_t j) { return m[i * cols + j]; }
  const Int& at(size_t i, size_t j) const { return m[i * cols + j]; }
  size_t rank() const { return pivots.size(); }
};

Echelon bareiss_echelon(const QMat& mat);

size_t rank(const QMat& mat);

/// Basis of the right kernel; each vector normalized so its first nonzero
/// entry is 1. Deterministic: one vector per free column, in column order.
std::vector<std::vector<Rat>> kernel_basis(const QMat& mat);

/// Exact determinant of a square rational matrix.
Rat det(const QMat& mat);

}  // namespace wdp
