#include "linkgate/polymatrix.hpp"

#include <numeric>
#include <utility>

#include "linkgate/errors.hpp"

namespace linkgate {
namespace {

// Fraction-free elimination (Bareiss). Divisions by the previous pivot are
// exact in the Laurent ring. Returns the rank; for square input, fills
// det_out with the determinant.
int bareiss(PolyMatrix m, LaurentPoly* det_out, Budget* budget = nullptr) {
  int n = std::min(m.rows, m.cols);
  LaurentPoly prev = LaurentPoly::constant(m.num_vars, 1);
  int sign = 1;
  int rk = 0;
  for (int k = 0; k < n; ++k) {
    int pi = -1, pj = -1;
    for (int i = rk; i < m.rows && pi < 0; ++i)
      for (int j = rk; j < m.cols; ++j)
        if (!m.at(i, j).is_zero()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    if (pi != rk) {
      for (int j = 0; j < m.cols; ++j)
        std::swap(m.at(pi, j), m.at(rk, j));
      sign = -sign;
    }
    if (pj != rk) {
      for (int i = 0; i < m.rows; ++i)
        std::swap(m.at(i, pj), m.at(i, rk));
      sign = -sign;
    }
    for (int i = rk + 1; i < m.rows; ++i) {
      for (int j = rk + 1; j < m.cols; ++j) {
        if (budget && !budget->tick())
          throw BudgetError("bareiss: budget exhausted");
        LaurentPoly num =
            m.at(rk, rk) * m.at(i, j) - m.at(i, rk) * m.at(rk, j);
        if (num.is_zero()) {
          m.at(i, j) = LaurentPoly(m.num_vars);
          continue;
        }
        auto q = try_divide(num, prev);
        if (!q)
          throw PreconditionError("bareiss: inexact pivot division");
        m.at(i, j) = std::move(*q);
      }
      m.at(i, rk) = LaurentPoly(m.num_vars);
    }
    prev = m.at(rk, rk);
    ++rk;
  }
  if (det_out) {
    if (rk < n)
      *det_out = LaurentPoly(m.num_vars);
    else
      *det_out = sign > 0 ? prev : -prev;
  }
  return rk;
}

}  // namespace

int rank_over_fraction_field(const PolyMatrix& m) {
  return bareiss(m, nullptr);
}

LaurentPoly poly_det(const PolyMatrix& m) {
  if (m.rows != m.cols)
    throw PreconditionError("poly_det: matrix is not square");
  if (m.rows == 0) return LaurentPoly::constant(m.num_vars, 1);
  LaurentPoly d(m.num_vars);
  bareiss(m, &d);
  return d;
}

LaurentPoly minors_gcd(const PolyMatrix& m, int r, Budget* budget) {
  if (r <= 0) return LaurentPoly::constant(m.num_vars, 1);
  if (r > m.rows || r > m.cols) return LaurentPoly(m.num_vars);

  std::vector<int> ri(r), ci(r);
  LaurentPoly g(m.num_vars);
  std::iota(ri.begin(), ri.end(), 0);
  auto next_comb = [](std::vector<int>& idx, int limit) {
    int k = static_cast<int>(idx.size());
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == limit - k + pos) --pos;
    if (pos < 0) return false;
    ++idx[pos];
    for (int j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  do {
    std::iota(ci.begin(), ci.end(), 0);
    do {
      if (budget && !budget->tick())
        throw BudgetError("minors_gcd: budget exhausted");
      PolyMatrix sub(r, r, m.num_vars);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
      LaurentPoly d(m.num_vars);
      bareiss(sub, &d, budget);
      g = laurent_gcd(g, d);
      if (g.is_constant() && !g.is_zero() && abs_int(g.constant_value()) == 1)
        return g;  // unit gcd, nothing left to learn
    } while (next_comb(ci, m.cols));
  } while (next_comb(ri, m.rows));
  return g;
}

}  // namespace linkgate
