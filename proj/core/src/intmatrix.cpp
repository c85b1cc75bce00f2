#include "linkgate/intmatrix.hpp"

#include <stdexcept>
#include <utility>

#include "linkgate/errors.hpp"

namespace linkgate {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix r(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k) == 0) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
  return r;
}

std::vector<Int> SmithResult::diagonal() const {
  std::vector<Int> d;
  int n = std::min(D.rows, D.cols);
  for (int i = 0; i < n; ++i) d.push_back(D.at(i, i));
  return d;
}

SmithResult smith_normal_form(const IntMatrix& A) {
  SmithResult r{IntMatrix::identity(A.rows), A, IntMatrix::identity(A.cols)};
  IntMatrix& D = r.D;
  IntMatrix& U = r.U;
  IntMatrix& V = r.V;
  int n = std::min(D.rows, D.cols);

  auto row_add = [&](int dst, int src, const Int& c) {
    for (int j = 0; j < D.cols; ++j) D.at(dst, j) += c * D.at(src, j);
    for (int j = 0; j < U.cols; ++j) U.at(dst, j) += c * U.at(src, j);
  };
  auto col_add = [&](int dst, int src, const Int& c) {
    for (int i = 0; i < D.rows; ++i) D.at(i, dst) += c * D.at(i, src);
    for (int i = 0; i < V.rows; ++i) V.at(i, dst) += c * V.at(i, src);
  };
  auto row_swap = [&](int i1, int i2) {
    for (int j = 0; j < D.cols; ++j) std::swap(D.at(i1, j), D.at(i2, j));
    for (int j = 0; j < U.cols; ++j) std::swap(U.at(i1, j), U.at(i2, j));
  };
  auto col_swap = [&](int j1, int j2) {
    for (int i = 0; i < D.rows; ++i) std::swap(D.at(i, j1), D.at(i, j2));
    for (int i = 0; i < V.rows; ++i) std::swap(V.at(i, j1), V.at(i, j2));
  };
  auto row_neg = [&](int i) {
    for (int j = 0; j < D.cols; ++j) D.at(i, j) = -D.at(i, j);
    for (int j = 0; j < U.cols; ++j) U.at(i, j) = -U.at(i, j);
  };

  auto diagonalize = [&]() {
    for (int k = 0; k < n; ++k) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      int pi = -1, pj = -1;
      for (int i = k; i < D.rows; ++i)
        for (int j = k; j < D.cols; ++j)
          if (D.at(i, j) != 0 &&
              (pi < 0 || abs_int(D.at(i, j)) < abs_int(D.at(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;
      row_swap(k, pi);
      col_swap(k, pj);

      for (;;) {
        bool clean = true;
        for (int i = k + 1; i < D.rows; ++i)
          if (D.at(i, k) != 0) {
            Int q = D.at(i, k) / D.at(k, k);
            row_add(i, k, -q);
            if (D.at(i, k) != 0) {
              row_swap(k, i);  // remainder is smaller; keep reducing
              clean = false;
            }
          }
        for (int j = k + 1; j < D.cols; ++j)
          if (D.at(k, j) != 0) {
            Int q = D.at(k, j) / D.at(k, k);
            col_add(j, k, -q);
            if (D.at(k, j) != 0) {
              col_swap(k, j);
              clean = false;
            }
          }
        if (clean) break;
      }
      if (D.at(k, k) < 0) row_neg(k);
    }
  };

  // Diagonalize, then repair divisibility-chain violations by mixing the
  // offending columns and re-diagonalizing (each pass shrinks d_k to a
  // proper divisor, so this terminates).
  diagonalize();
  for (;;) {
    int bad_k = -1, bad_l = -1;
    for (int k = 0; k + 1 < n && bad_k < 0; ++k)
      for (int l = k + 1; l < n; ++l) {
        if (D.at(l, l) == 0) continue;
        if (D.at(k, k) == 0 || D.at(l, l) % D.at(k, k) != 0) {
          bad_k = k;
          bad_l = l;
          break;
        }
      }
    if (bad_k < 0) break;
    col_add(bad_k, bad_l, 1);
    diagonalize();
  }
  return r;
}

namespace {
// Fraction-free elimination; returns rank, optionally the Bareiss
// determinant of a square input.
int bareiss(IntMatrix m, Int* det_out) {
  Int prev = 1;
  int sign = 1;
  int rank = 0;
  int n = std::min(m.rows, m.cols);
  for (int k = 0; k < n; ++k) {
    int pi = -1, pj = -1;
    for (int i = rank; i < m.rows && pi < 0; ++i)
      for (int j = rank; j < m.cols; ++j)
        if (m.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    if (pi != rank) {
      for (int j = 0; j < m.cols; ++j)
        std::swap(m.at(pi, j), m.at(rank, j));
      sign = -sign;
    }
    if (pj != rank) {
      for (int i = 0; i < m.rows; ++i)
        std::swap(m.at(i, pj), m.at(i, rank));
      sign = -sign;
    }
    for (int i = rank + 1; i < m.rows; ++i) {
      for (int j = rank + 1; j < m.cols; ++j)
        m.at(i, j) = (m.at(rank, rank) * m.at(i, j) -
                      m.at(i, rank) * m.at(rank, j)) /
                     prev;
      m.at(i, rank) = 0;
    }
    prev = m.at(rank, rank);
    ++rank;
  }
  if (det_out) {
    if (rank < n)
      *det_out = 0;
    else
      *det_out = sign > 0 ? prev : -prev;
  }
  return rank;
}
}  // namespace

int rank(const IntMatrix& A) { return bareiss(A, nullptr); }

Int det(const IntMatrix& A) {
  if (A.rows != A.cols)
    throw PreconditionError("det: matrix is not square");
  if (A.rows == 0) return 1;
  Int d;
  bareiss(A, &d);
  return d;
}

std::vector<Rat> rational_inverse(const IntMatrix& A) {
  if (A.rows != A.cols)
    throw PreconditionError("rational_inverse: matrix is not square");
  int n = A.rows;
  std::vector<Rat> m(std::size_t(n) * 2 * n, 0);
  auto at = [&](int i, int j) -> Rat& { return m[std::size_t(i) * 2 * n + j]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at(i, j) = Rat(A.at(i, j));
    at(i, n + i) = 1;
  }
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (at(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0)
      throw PreconditionError("rational_inverse: matrix is singular");
    if (p != k)
      for (int j = 0; j < 2 * n; ++j) std::swap(at(p, j), at(k, j));
    Rat piv = at(k, k);
    for (int j = 0; j < 2 * n; ++j) at(k, j) /= piv;
    for (int i = 0; i < n; ++i) {
      if (i == k || at(i, k) == 0) continue;
      Rat c = at(i, k);
      for (int j = 0; j < 2 * n; ++j) at(i, j) -= c * at(k, j);
    }
  }
  std::vector<Rat> inv(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[std::size_t(i) * n + j] = at(i, n + j);
  return inv;
}

}  // namespace linkgate
