#pragma once

#include <vector>

#include "linkgate/budget.hpp"
#include "linkgate/laurent.hpp"

namespace linkgate {

// Dense matrix over the Laurent ring, row-major.
struct PolyMatrix {
  int rows = 0;
  int cols = 0;
  int num_vars = 1;
  std::vector<LaurentPoly> a;

  PolyMatrix() = default;
  PolyMatrix(int r, int c, int nv)
      : rows(r),
        cols(c),
        num_vars(nv),
        a(std::size_t(r) * c, LaurentPoly(nv)) {}

  LaurentPoly& at(int i, int j) { return a[std::size_t(i) * cols + j]; }
  const LaurentPoly& at(int i, int j) const {
    return a[std::size_t(i) * cols + j];
  }
};

// Rank over the fraction field of the Laurent ring (fraction-free
// Bareiss elimination).
int rank_over_fraction_field(const PolyMatrix& m);

// Determinant of a square matrix; empty matrix has det 1.
LaurentPoly poly_det(const PolyMatrix& m);

// gcd of all r x r minors in unit-normal form; 1 for r <= 0, 0 when r
// exceeds the dimensions or all minors vanish. Enumeration is lexicographic
// over row/column subsets; the budget bounds the number of minors.
LaurentPoly minors_gcd(const PolyMatrix& m, int r, Budget* budget = nullptr);

}  // namespace linkgate
