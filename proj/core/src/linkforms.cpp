#include "linkgate/linkforms.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "linkgate/errors.hpp"
#include "linkgate/polymatrix.hpp"

namespace linkgate {
namespace {

Rat mod1(const Rat& r) {
  Int num = numerator(r), den = denominator(r);  // den > 0
  Int q = num / den;
  if (num % den != 0 && num < 0) --q;
  return r - Rat(q);
}

std::vector<std::vector<Int>> all_elements(const std::vector<Int>& factors) {
  std::vector<std::vector<Int>> out{std::vector<Int>()};
  for (const Int& d : factors) {
    std::vector<std::vector<Int>> next;
    for (const auto& e : out)
      for (Int v = 0; v < d; ++v) {
        auto f = e;
        f.push_back(v);
        next.push_back(std::move(f));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

Int FiniteLinkingForm::order() const {
  Int o = 1;
  for (const Int& d : factors) o *= d;
  return o;
}

Rat FiniteLinkingForm::pairing(const std::vector<Int>& x,
                               const std::vector<Int>& y) const {
  Rat s = 0;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = 0; j < factors.size(); ++j)
      s += Rat(x[i] * y[j]) * gram[i][j];
  return mod1(s);
}

FiniteLinkingForm FiniteLinkingForm::negated() const {
  FiniteLinkingForm f = *this;
  for (auto& row : f.gram)
    for (auto& v : row) v = mod1(-v);
  return f;
}

FiniteLinkingForm FiniteLinkingForm::direct_sum(
    const FiniteLinkingForm& o) const {
  FiniteLinkingForm f;
  f.factors = factors;
  f.factors.insert(f.factors.end(), o.factors.begin(), o.factors.end());
  std::size_t n = factors.size(), m = o.factors.size();
  f.gram.assign(n + m, std::vector<Rat>(n + m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) f.gram[i][j] = gram[i][j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) f.gram[n + i][n + j] = o.gram[i][j];
  return f;
}

Subgroup subgroup_closure(const std::vector<Int>& factors,
                          const std::vector<std::vector<Int>>& generators) {
  auto reduce = [&](std::vector<Int> e) {
    for (std::size_t k = 0; k < factors.size(); ++k) {
      e[k] %= factors[k];
      if (e[k] < 0) e[k] += factors[k];
    }
    return e;
  };
  std::set<std::vector<Int>> elems{std::vector<Int>(factors.size(), 0)};
  for (;;) {
    std::set<std::vector<Int>> next = elems;
    for (const auto& e : elems)
      for (const auto& g : generators) {
        auto s = e;
        for (std::size_t k = 0; k < s.size(); ++k) s[k] += g[k];
        next.insert(reduce(std::move(s)));
      }
    if (next.size() == elems.size()) break;
    elems = std::move(next);
  }
  Subgroup out;
  out.elements.assign(elems.begin(), elems.end());
  return out;
}

FiniteLinkingForm from_presentation(const IntMatrix& A) {
  if (A.rows != A.cols)
    throw PreconditionError("from_presentation: matrix not square");
  if (A != A.transpose())
    throw PreconditionError("from_presentation: matrix not symmetric");
  if (det(A) == 0)
    throw PreconditionError("from_presentation: singular presentation");
  int n = A.rows;
  SmithResult s = smith_normal_form(A);
  std::vector<Rat> ainv = rational_inverse(A);
  std::vector<Rat> uinv = rational_inverse(s.U);  // integral: U unimodular

  // Generator of the i-th cyclic summand is the class of U^-1 e_i.
  std::vector<int> keep;
  auto diag = s.diagonal();
  for (int i = 0; i < n; ++i)
    if (abs_int(diag[i]) > 1) keep.push_back(i);

  FiniteLinkingForm f;
  for (int i : keep) f.factors.push_back(abs_int(diag[i]));
  f.gram.assign(keep.size(), std::vector<Rat>(keep.size(), 0));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) {
      Rat v = 0;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          v += uinv[std::size_t(r) * n + keep[a]] *
               ainv[std::size_t(r) * n + c] *
               uinv[std::size_t(c) * n + keep[b]];
      f.gram[a][b] = mod1(v);
    }
  return f;
}

Subgroup orthogonal(const FiniteLinkingForm& f, const Subgroup& p) {
  Subgroup out;
  for (const auto& m : all_elements(f.factors)) {
    bool ok = true;
    for (const auto& gen : p.elements)
      if (f.pairing(gen, m) != 0) {
        ok = false;
        break;
      }
    if (ok) out.elements.push_back(m);
  }
  return out;
}

std::vector<Subgroup> metabolizers(const FiniteLinkingForm& f,
                                   const Int& max_order) {
  Int order = f.order();
  if (order > max_order)
    throw BudgetError("metabolizers: group order exceeds budget");
  Int s;
  if (!perfect_square(order, s)) return {};

  int n = static_cast<int>(f.factors.size());
  std::vector<Subgroup> out;
  if (n == 0) {
    if (s == 1) out.push_back(Subgroup{{std::vector<Int>{}}});
    return out;
  }

  // Sublattices D Z^n <= L <= Z^n of index s, one canonical
  // upper-triangular Hermite basis each (columns are basis vectors,
  // 0 <= h_ij < h_ii above the diagonal).
  std::vector<Int> divisors;
  for (Int d = 1; d <= s; ++d)
    if (s % d == 0) divisors.push_back(d);

  std::vector<Int> diag(n);
  std::vector<std::vector<Int>> H(n, std::vector<Int>(n, 0));

  auto lattice_contains = [&](std::vector<Int> v) {
    for (int i = n - 1; i >= 0; --i) {
      if (v[i] % H[i][i] != 0) return false;
      Int x = v[i] / H[i][i];
      for (int r = 0; r <= i; ++r) v[r] -= x * H[r][i];
    }
    return true;
  };

  std::function<void(int)> fill_offdiag = [&](int col) {
    if (col == n) {
      for (int j = 0; j < n; ++j) {
        std::vector<Int> dv(n, 0);
        dv[j] = f.factors[j];
        if (!lattice_contains(dv)) return;
      }
      std::vector<std::vector<Int>> gens;
      for (int j = 0; j < n; ++j) {
        std::vector<Int> g(n);
        for (int i = 0; i < n; ++i) g[i] = H[i][j];
        gens.push_back(std::move(g));
      }
      Subgroup p = subgroup_closure(f.factors, gens);
      if (p.order() * p.order() != f.order()) return;
      if (orthogonal(f, p) == p) out.push_back(std::move(p));
      return;
    }
    std::function<void(int)> fill_rows = [&](int row) {
      if (row == col) {
        fill_offdiag(col + 1);
        return;
      }
      for (Int v = 0; v < diag[row]; ++v) {
        H[row][col] = v;
        fill_rows(row + 1);
      }
      H[row][col] = 0;
    };
    fill_rows(0);
  };

  std::function<void(int, Int)> fill_diag = [&](int col, Int rem) {
    if (col == n) {
      if (rem != 1) return;
      for (int i = 0; i < n; ++i) H[i][i] = diag[i];
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) H[i][j] = 0;
      fill_offdiag(0);
      return;
    }
    for (const Int& d : divisors) {
      if (rem % d != 0) continue;
      diag[col] = d;
      fill_diag(col + 1, rem / d);
    }
  };
  fill_diag(0, s);

  std::sort(out.begin(), out.end(),
            [](const Subgroup& a, const Subgroup& b) {
              return a.elements < b.elements;
            });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Subgroup> metabolizers_brute(const FiniteLinkingForm& f) {
  auto elems = all_elements(f.factors);
  std::set<std::vector<std::vector<Int>>> seen;
  std::vector<Subgroup> stack{subgroup_closure(f.factors, {})};
  seen.insert(stack[0].elements);
  // Enumerate the full subgroup lattice by one-element extensions.
  for (std::size_t head = 0; head < stack.size(); ++head) {
    Subgroup cur = stack[head];
    for (const auto& g : elems) {
      if (std::binary_search(cur.elements.begin(), cur.elements.end(), g))
        continue;
      auto gens = cur.elements;
      gens.push_back(g);
      Subgroup ext = subgroup_closure(f.factors, gens);
      if (seen.insert(ext.elements).second) stack.push_back(std::move(ext));
    }
  }
  std::vector<Subgroup> out;
  for (const auto& p : stack)
    if (p.order() * p.order() == f.order() && orthogonal(f, p) == p)
      out.push_back(p);
  std::sort(out.begin(), out.end(),
            [](const Subgroup& a, const Subgroup& b) {
              return a.elements < b.elements;
            });
  return out;
}

std::vector<std::vector<Int>> characters_vanishing(
    const std::vector<Int>& factors, const Subgroup& p, const Int& q,
    int k) {
  Int qk = 1;
  for (int e = 0; e < k; ++e) qk *= q;
  // Image of e_i must have order dividing d_i: a multiple of qk/gcd.
  std::vector<std::vector<Int>> choices;
  for (const Int& d : factors) {
    Int step = qk / gcd_int(d, qk);
    std::vector<Int> c;
    for (Int v = 0; v < qk; v += step) c.push_back(v);
    choices.push_back(std::move(c));
  }
  std::vector<std::vector<Int>> out{std::vector<Int>()};
  for (const auto& c : choices) {
    std::vector<std::vector<Int>> next;
    for (const auto& partial : out)
      for (const Int& v : c) {
        auto t = partial;
        t.push_back(v);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  std::vector<std::vector<Int>> kept;
  for (const auto& chi : out) {
    bool ok = true;
    for (const auto& el : p.elements) {
      Int s = 0;
      for (std::size_t i = 0; i < chi.size(); ++i) s += chi[i] * el[i];
      if (s % qk != 0) {
        ok = false;
        break;
      }
    }
    if (ok) kept.push_back(chi);
  }
  return kept;
}

bool witt_equivalent(const FiniteLinkingForm& f1,
                     const FiniteLinkingForm& f2, const Int& max_order) {
  FiniteLinkingForm diff = f1.direct_sum(f2.negated());
  return !metabolizers(diff, max_order).empty();
}

bool verify_neutral_certificate(
    const std::vector<std::vector<PolyFraction>>& gram,
    const std::vector<std::vector<LaurentPoly>>& submodule_gens) {
  std::size_t n = gram.size();
  if (n == 0 || n % 2 != 0) return false;
  for (const auto& row : gram) {
    if (row.size() != n) return false;
    for (const auto& e : row)
      if (e.den.is_zero()) return false;
  }
  // Conjugate symmetry: gram[j][i] = involve(gram[i][j]) as fractions.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(gram[j][i].num * involve(gram[i][j].den) ==
            involve(gram[i][j].num) * gram[j][i].den))
        return false;
  // N <= N-perp: every pair of generators pairs to zero.
  int nv = gram[0][0].num.num_vars();
  for (const auto& u : submodule_gens) {
    if (u.size() != n) return false;
    for (const auto& v : submodule_gens) {
      LaurentPoly num(nv), den = LaurentPoly::constant(nv, 1);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (u[i].is_zero() || v[j].is_zero()) continue;
          LaurentPoly term_num = u[i] * gram[i][j].num * involve(v[j]);
          num = num * gram[i][j].den + term_num * den;
          den = den * gram[i][j].den;
        }
      if (!num.is_zero()) return false;
    }
  }
  // Half-rank condition over the fraction field.
  PolyMatrix m(static_cast<int>(n),
               static_cast<int>(submodule_gens.size()), nv);
  for (std::size_t j = 0; j < submodule_gens.size(); ++j)
    for (std::size_t i = 0; i < n; ++i)
      m.at(static_cast<int>(i), static_cast<int>(j)) = submodule_gens[j][i];
  return rank_over_fraction_field(m) == static_cast<int>(n / 2);
}

}  // namespace linkgate
