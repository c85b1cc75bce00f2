#pragma once

#include <vector>

#include "linkgate/numeric.hpp"

namespace linkgate {

// Dense integer matrix, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}

  static IntMatrix identity(int n);

  Int& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[std::size_t(i) * cols + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix& o) const = default;
};

// U*A*V = D with U, V unimodular and D diagonal, d_i | d_{i+1}, d_i >= 0.
struct SmithResult {
  IntMatrix U, D, V;
  std::vector<Int> diagonal() const;
};

SmithResult smith_normal_form(const IntMatrix& A);

int rank(const IntMatrix& A);

// Determinant of a square matrix (Bareiss).
Int det(const IntMatrix& A);

// Inverse of a nonsingular square matrix, as entries over Q.
std::vector<Rat> rational_inverse(const IntMatrix& A);

}  // namespace linkgate
