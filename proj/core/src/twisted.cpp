#include "linkgate/twisted.hpp"

#include <algorithm>
#include <random>

#include "linkgate/errors.hpp"

namespace linkgate {
namespace {

int int_pow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Cyclotomic field Q[x]/Phi_{q^l}.
// ---------------------------------------------------------------------------
Cyclo::Cyclo(int q, int l) : q_(q), l_(l) {
  c_.assign(std::size_t(int_pow(q, l - 1)) * (q - 1), 0);
}

void Cyclo::reduce(std::vector<Rat>& raw) const {
  // Phi_{q^l}(x) = sum_{i<q} x^{i q^(l-1)}, monic of degree phi.
  int m = int_pow(q_, l_ - 1);
  int phi = m * (q_ - 1);
  for (int d = static_cast<int>(raw.size()) - 1; d >= phi; --d) {
    Rat c = raw[d];
    if (c == 0) continue;
    raw[d] = 0;
    for (int i = 0; i < q_ - 1; ++i) raw[d - phi + i * m] -= c;
  }
  raw.resize(phi);
}

Cyclo Cyclo::from_rat(int q, int l, const Rat& r) {
  Cyclo z(q, l);
  z.c_[0] = r;
  return z;
}

Cyclo Cyclo::zeta_pow(int q, int l, long long e) {
  int n = int_pow(q, l);
  e %= n;
  if (e < 0) e += n;
  Cyclo z(q, l);
  std::vector<Rat> raw(e + 1, 0);
  raw[e] = 1;
  z.reduce(raw);
  z.c_ = std::move(raw);
  return z;
}

bool Cyclo::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rat& r) { return r == 0; });
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  Cyclo z = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i] += o.c_[i];
  return z;
}

Cyclo Cyclo::operator-(const Cyclo& o) const {
  Cyclo z = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) z.c_[i] -= o.c_[i];
  return z;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  std::vector<Rat> raw(2 * c_.size(), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      raw[i + j] += c_[i] * o.c_[j];
  }
  Cyclo z(q_, l_);
  z.reduce(raw);
  z.c_ = std::move(raw);
  return z;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw PreconditionError("Cyclo: inverse of zero");
  // Extended Euclid in Q[x] against Phi.
  using QP = std::vector<Rat>;
  auto deg = [](const QP& a) {
    int d = static_cast<int>(a.size()) - 1;
    while (d >= 0 && a[d] == 0) --d;
    return d;
  };
  auto submul = [&](QP a, const QP& b, const QP& f) {
    // a - b*f
    for (int i = 0; i <= deg(b); ++i)
      for (int j = 0; j <= deg(f); ++j) {
        if (i + j >= static_cast<int>(a.size())) a.resize(i + j + 1, 0);
        a[i + j] -= b[i] * f[j];
      }
    return a;
  };
  auto divmod = [&](QP a, const QP& b, QP& quot) {
    quot.assign(1, 0);
    int db = deg(b);
    while (deg(a) >= db) {
      int da = deg(a);
      Rat c = a[da] / b[db];
      if (da - db >= static_cast<int>(quot.size()))
        quot.resize(da - db + 1, 0);
      quot[da - db] += c;
      for (int i = 0; i <= db; ++i) a[i + da - db] -= c * b[i];
      a[da] = 0;
    }
    return a;
  };
  int m = int_pow(q_, l_ - 1);
  int phi = m * (q_ - 1);
  QP r0(phi + 1, 0);
  for (int i = 0; i < q_; ++i) r0[i * m] = 1;
  QP r1 = c_;
  QP s0{0}, s1{1};  // coefficients of c_ in the Bezout identity
  while (deg(r1) >= 0) {
    QP quot;
    QP r2 = divmod(r0, r1, quot);
    QP s2 = submul(s0, s1, quot);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (deg(r0) != 0)
    throw PreconditionError("Cyclo: not invertible (reducible modulus?)");
  Rat inv = Rat(1) / r0[0];
  std::vector<Rat> raw(s0.size());
  for (std::size_t i = 0; i < s0.size(); ++i) raw[i] = s0[i] * inv;
  Cyclo z(q_, l_);
  z.reduce(raw);
  z.c_ = std::move(raw);
  return z;
}

// ---------------------------------------------------------------------------
// Polynomials in s over Q(zeta), and fraction-free rank.
// ---------------------------------------------------------------------------
namespace {

using CPoly = std::vector<Cyclo>;  // coeff of s^i; empty = zero

void cp_trim(CPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

CPoly cp_mul(const CPoly& a, const CPoly& b, int q, int l) {
  if (a.empty() || b.empty()) return {};
  CPoly r(a.size() + b.size() - 1, Cyclo(q, l));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = r[i + j] + a[i] * b[j];
  }
  cp_trim(r);
  return r;
}

CPoly cp_sub(const CPoly& a, const CPoly& b, int q, int l) {
  CPoly r = a;
  if (b.size() > r.size()) r.resize(b.size(), Cyclo(q, l));
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
  cp_trim(r);
  return r;
}

// Exact quotient (Bareiss guarantees divisibility).
CPoly cp_divexact(CPoly a, const CPoly& b, int q, int l) {
  cp_trim(a);
  if (a.empty()) return {};
  if (a.size() < b.size())
    throw PreconditionError("cp_divexact: inexact division");
  Cyclo lcinv = b.back().inverse();
  CPoly qout(a.size() - b.size() + 1, Cyclo(q, l));
  for (int i = static_cast<int>(qout.size()) - 1; i >= 0; --i) {
    Cyclo c = a[i + b.size() - 1] * lcinv;
    qout[i] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[i + j] = a[i + j] - c * b[j];
  }
  for (const auto& c : a)
    if (!c.is_zero())
      throw PreconditionError("cp_divexact: inexact division");
  cp_trim(qout);
  return qout;
}

int cp_rank(std::vector<CPoly> m, int rows, int cols, int q, int l) {
  auto at = [&](int i, int j) -> CPoly& {
    return m[std::size_t(i) * cols + j];
  };
  CPoly prev{Cyclo::from_rat(q, l, 1)};
  int rk = 0;
  int n = std::min(rows, cols);
  for (int k = 0; k < n; ++k) {
    int pi = -1, pj = -1;
    for (int i = rk; i < rows && pi < 0; ++i)
      for (int j = rk; j < cols; ++j)
        if (!at(i, j).empty()) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    if (pi != rk)
      for (int j = 0; j < cols; ++j) std::swap(at(pi, j), at(rk, j));
    if (pj != rk)
      for (int i = 0; i < rows; ++i) std::swap(at(i, pj), at(i, rk));
    for (int i = rk + 1; i < rows; ++i) {
      for (int j = rk + 1; j < cols; ++j) {
        CPoly num = cp_sub(cp_mul(at(rk, rk), at(i, j), q, l),
                           cp_mul(at(i, rk), at(rk, j), q, l), q, l);
        at(i, j) = num.empty() ? CPoly{} : cp_divexact(num, prev, q, l);
      }
      at(i, rk) = {};
    }
    prev = at(rk, rk);
    ++rk;
  }
  return rk;
}

std::vector<std::vector<Cyclo>> mat_mul(
    const std::vector<std::vector<Cyclo>>& a,
    const std::vector<std::vector<Cyclo>>& b, int q, int l) {
  std::size_t n = a.size();
  std::vector<std::vector<Cyclo>> r(n, std::vector<Cyclo>(n, Cyclo(q, l)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        r[i][j] = r[i][j] + a[i][k] * b[k][j];
    }
  return r;
}

// Builds the twisted matrix of a Z[t^+-] matrix: every entry sum a_e x^e
// becomes sum a_e alpha'(x)^e s^(e - emin) as t x t blocks of CPoly (the
// global s^-emin unit does not change the rank).
std::vector<CPoly> twist_matrix(const PolyMatrix& m, const TwistData& rho,
                                int* out_rows, int* out_cols) {
  int emin = 0;
  for (const auto& p : m.a)
    for (const auto& [e, c] : p.terms()) emin = std::min(emin, e[0]);
  int t = rho.t;
  int rows = m.rows * t, cols = m.cols * t;
  std::vector<CPoly> big(std::size_t(rows) * cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      for (const auto& [e, coeff] : m.at(i, j).terms()) {
        auto blk = induced_power(rho, e[0]);
        int spow = e[0] - emin;
        Cyclo cr = Cyclo::from_rat(rho.q, rho.l, Rat(coeff));
        for (int bi = 0; bi < t; ++bi)
          for (int bj = 0; bj < t; ++bj) {
            Cyclo v = cr * blk[bi][bj];
            if (v.is_zero()) continue;
            CPoly& dst = big[std::size_t(i * t + bi) * cols + j * t + bj];
            if (static_cast<int>(dst.size()) <= spow)
              dst.resize(spow + 1, Cyclo(rho.q, rho.l));
            dst[spow] = dst[spow] + v;
          }
      }
  for (auto& p : big) cp_trim(p);
  *out_rows = rows;
  *out_cols = cols;
  return big;
}

int twisted_rank(const PolyMatrix& m, const TwistData& rho) {
  if (m.rows == 0 || m.cols == 0) return 0;
  int rows, cols;
  auto big = twist_matrix(m, rho, &rows, &cols);
  return cp_rank(std::move(big), rows, cols, rho.q, rho.l);
}

// Mod-q side: augmentation x -> 1, entries in the field Z/q.
int modq_rank(const PolyMatrix& m, int q) {
  std::vector<long long> a(std::size_t(m.rows) * m.cols, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      Int s = 0;
      for (const auto& [e, c] : m.at(i, j).terms()) s += c;
      s %= q;
      if (s < 0) s += q;
      a[std::size_t(i) * m.cols + j] = static_cast<long long>(s);
    }
  int rk = 0;
  for (int col = 0; col < m.cols && rk < m.rows; ++col) {
    int piv = -1;
    for (int i = rk; i < m.rows; ++i)
      if (a[std::size_t(i) * m.cols + col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j)
      std::swap(a[std::size_t(piv) * m.cols + j],
                a[std::size_t(rk) * m.cols + j]);
    long long p = a[std::size_t(rk) * m.cols + col];
    long long pinv = 1;
    for (long long x = 1; x < q; ++x)
      if (p * x % q == 1) {
        pinv = x;
        break;
      }
    for (int i = rk + 1; i < m.rows; ++i) {
      long long f = a[std::size_t(i) * m.cols + col] * pinv % q;
      if (f == 0) continue;
      for (int j = col; j < m.cols; ++j)
        a[std::size_t(i) * m.cols + j] =
            ((a[std::size_t(i) * m.cols + j] -
              f * a[std::size_t(rk) * m.cols + j]) %
                 q +
             q) %
            q;
    }
    ++rk;
  }
  return rk;
}

PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix r(a.rows, b.cols, a.num_vars);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols; ++j)
        r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
    }
  return r;
}

}  // namespace

FreeChainComplex FreeChainComplex::make(std::vector<int> dims,
                                        std::vector<PolyMatrix> boundary) {
  if (boundary.size() + 1 != dims.size())
    throw PreconditionError("chain complex: length mismatch");
  for (std::size_t k = 0; k < boundary.size(); ++k) {
    if (boundary[k].rows != dims[k] || boundary[k].cols != dims[k + 1])
      throw PreconditionError("chain complex: boundary shape mismatch");
    if (k > 0) {
      PolyMatrix prod = poly_mat_mul(boundary[k - 1], boundary[k]);
      for (const auto& p : prod.a)
        if (!p.is_zero())
          throw PreconditionError("chain complex: dd != 0");
    }
  }
  FreeChainComplex c;
  c.dims = std::move(dims);
  c.boundary = std::move(boundary);
  return c;
}

const PolyMatrix* FreeChainComplex::del(int k) const {
  if (k < 1 || k > static_cast<int>(boundary.size())) return nullptr;
  return &boundary[k - 1];
}

std::vector<std::vector<Cyclo>> induced_power(const TwistData& rho, int e) {
  int t = rho.t, q = rho.q, l = rho.l;
  std::vector<std::vector<Cyclo>> base(t, std::vector<Cyclo>(t, Cyclo(q, l)));
  std::vector<std::vector<Cyclo>> r(t, std::vector<Cyclo>(t, Cyclo(q, l)));
  for (int i = 0; i < t; ++i) r[i][i] = Cyclo::from_rat(q, l, 1);
  bool invert = e < 0;
  for (int j = 0; j < t; ++j) {
    int i = (j + 1) % t;
    Cyclo v = j == t - 1 ? Cyclo::zeta_pow(q, l, rho.c)
                         : Cyclo::from_rat(q, l, 1);
    if (!invert)
      base[i][j] = v;
    else
      base[j][i] = j == t - 1 ? Cyclo::zeta_pow(q, l, -rho.c)
                              : Cyclo::from_rat(q, l, 1);
  }
  for (int k = 0; k < std::abs(e); ++k) r = mat_mul(r, base, q, l);
  return r;
}

int homology_dim_modq(const FreeChainComplex& C, int n, int qprime) {
  if (!is_prime(qprime))
    throw PreconditionError("homology_dim_modq: q must be prime");
  if (n < 0 || n >= static_cast<int>(C.dims.size())) return 0;
  int dim = C.dims[n];
  if (const PolyMatrix* d = C.del(n)) dim -= modq_rank(*d, qprime);
  if (const PolyMatrix* d = C.del(n + 1)) dim -= modq_rank(*d, qprime);
  return dim;
}

int homology_dim_twisted(const FreeChainComplex& C, const TwistData& rho,
                         int n) {
  if (n < 0 || n >= static_cast<int>(C.dims.size())) return 0;
  int dim = rho.t * C.dims[n];
  if (const PolyMatrix* d = C.del(n)) dim -= twisted_rank(*d, rho);
  if (const PolyMatrix* d = C.del(n + 1)) dim -= twisted_rank(*d, rho);
  return dim;
}

Thm23Result check_thm23(const FreeChainComplex& C, const TwistData& rho,
                        int qprime,
                        const std::vector<std::vector<LaurentPoly>>& cycles,
                        int n) {
  if (!is_prime(qprime))
    throw PreconditionError("check_thm23: q must be prime");
  if (n < 0 || n >= static_cast<int>(C.dims.size()))
    throw PreconditionError("check_thm23: degree out of range");
  const PolyMatrix* dn = C.del(n);
  for (const auto& z : cycles) {
    if (static_cast<int>(z.size()) != C.dims[n])
      throw PreconditionError("check_thm23: cycle length mismatch");
    if (dn)
      for (int i = 0; i < dn->rows; ++i) {
        LaurentPoly s(1);
        for (int j = 0; j < dn->cols; ++j) s = s + dn->at(i, j) * z[j];
        if (!s.is_zero())
          throw PreconditionError("check_thm23: input is not a cycle");
      }
  }

  // [d_{n+1} | cycles]: its image spans boundaries plus M.
  const PolyMatrix* dn1 = C.del(n + 1);
  int extra = static_cast<int>(cycles.size());
  int cols = (dn1 ? dn1->cols : 0) + extra;
  PolyMatrix span(C.dims[n], cols, 1);
  if (dn1)
    for (int i = 0; i < dn1->rows; ++i)
      for (int j = 0; j < dn1->cols; ++j) span.at(i, j) = dn1->at(i, j);
  for (int k = 0; k < extra; ++k)
    for (int i = 0; i < C.dims[n]; ++i)
      span.at(i, (dn1 ? dn1->cols : 0) + k) = cycles[k][i];

  Thm23Result r;
  int ker_tw = rho.t * C.dims[n] - (dn ? twisted_rank(*dn, rho) : 0);
  r.left = ker_tw - twisted_rank(span, rho);
  int ker_q = C.dims[n] - (dn ? modq_rank(*dn, qprime) : 0);
  r.right = rho.t * (ker_q - modq_rank(span, qprime));
  return r;
}

RandomInstance random_instance(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % (hi - lo + 1));
  };
  RandomInstance inst;
  int p = pick(0, 1) ? 2 : 3;
  inst.rho.t = p;
  inst.rho.q = p;  // the finite part of the twist must be a q-group
  inst.rho.l = pick(1, 2);
  inst.rho.c = pick(0, int_pow(inst.rho.q, inst.rho.l) - 1);
  inst.qprime = inst.rho.q;
  inst.n = pick(1, 2);

  auto rand_poly = [&]() {
    LaurentPoly f(1);
    int terms = pick(1, 3);
    for (int k = 0; k < terms; ++k) {
      int e = pick(-1, 1);
      int c = pick(-2, 2);
      if (c != 0) f.add_term({e}, c);
    }
    return f;
  };

  // Direct sum of blocks with dd = 0 by construction.
  std::vector<int> dims(4, 0);
  std::vector<PolyMatrix> bnd;
  for (int k = 1; k <= 3; ++k) bnd.emplace_back(0, 0, 1);
  struct Entry {
    int k, i, j;
    LaurentPoly v;
  };
  std::vector<Entry> entries;
  std::vector<std::vector<LaurentPoly>> base_cycles;  // in degree n, later

  int blocks = pick(2, 4);
  for (int b = 0; b < blocks; ++b) {
    int kind = pick(0, 2);
    if (kind == 0) {  // lone free generator
      int k = pick(0, 3);
      if (dims[k] >= 4) continue;
      int idx = dims[k]++;
      if (k == inst.n) {
        // its basis vector is a non-boundary cycle
        base_cycles.push_back({});
        base_cycles.back().resize(8, LaurentPoly(1));
        base_cycles.back()[idx] = LaurentPoly::constant(1, 1);
      }
    } else if (kind == 1) {  // pair block f: deg k -> deg k-1
      int k = pick(1, 3);
      if (dims[k] >= 4 || dims[k - 1] >= 4) continue;
      int src = dims[k]++, dst = dims[k - 1]++;
      entries.push_back({k, dst, src, rand_poly()});
    } else {  // Koszul block on (f, g): deg k+1 -> (deg k)^2 -> deg k-1
      int k = pick(1, 2);
      if (dims[k + 1] >= 4 || dims[k] >= 3 || dims[k - 1] >= 4) continue;
      LaurentPoly f = rand_poly(), g = rand_poly();
      int top = dims[k + 1]++;
      int m0 = dims[k]++, m1 = dims[k]++;
      int bot = dims[k - 1]++;
      entries.push_back({k + 1, m0, top, -g});
      entries.push_back({k + 1, m1, top, f});
      entries.push_back({k, bot, m0, f});
      entries.push_back({k, bot, m1, g});
    }
  }
  for (int k = 1; k <= 3; ++k) bnd[k - 1] = PolyMatrix(dims[k - 1], dims[k], 1);
  for (const auto& e : entries) bnd[e.k - 1].at(e.i, e.j) = e.v;
  for (auto& z : base_cycles) z.resize(dims[inst.n], LaurentPoly(1));

  // Random unimodular basis changes; cycles in degree n transform by the
  // inverse column operation.
  int ops = pick(4, 10);
  for (int o = 0; o < ops; ++o) {
    int k = pick(0, 3);
    if (dims[k] < 2) continue;
    int i = pick(0, dims[k] - 1), j = pick(0, dims[k] - 1);
    if (i == j) continue;
    LaurentPoly m = LaurentPoly::monomial(1, 0, pick(-1, 1),
                                          pick(0, 1) ? 1 : -1);
    if (k >= 1) {  // d_k: col_j += m * col_i
      PolyMatrix& d = bnd[k - 1];
      for (int r = 0; r < d.rows; ++r)
        d.at(r, j) = d.at(r, j) + m * d.at(r, i);
    }
    if (k <= 2) {  // d_{k+1}: row_i -= m * row_j
      PolyMatrix& d = bnd[k];
      for (int c2 = 0; c2 < d.cols; ++c2)
        d.at(i, c2) = d.at(i, c2) - m * d.at(j, c2);
    }
    if (k == inst.n)
      for (auto& z : base_cycles) z[i] = z[i] - m * z[j];
  }

  inst.C = FreeChainComplex::make(dims, bnd);

  // Cycle collection: tracked non-boundary cycles plus random boundaries.
  int want = pick(0, 2);
  for (int c = 0; c < want && c < static_cast<int>(base_cycles.size()); ++c)
    inst.cycles.push_back(base_cycles[c]);
  if (const PolyMatrix* dn1 = inst.C.del(inst.n + 1); dn1 && pick(0, 1)) {
    std::vector<LaurentPoly> z(dims[inst.n], LaurentPoly(1));
    for (int j = 0; j < dn1->cols; ++j) {
      LaurentPoly coeff = LaurentPoly::monomial(1, 0, pick(-1, 1),
                                                pick(-1, 1));
      for (int i = 0; i < dn1->rows; ++i)
        z[i] = z[i] + coeff * dn1->at(i, j);
    }
    inst.cycles.push_back(std::move(z));
  }
  return inst;
}

}  // namespace linkgate
