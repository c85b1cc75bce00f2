#include "linkgate/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <tuple>

#include "linkgate/errors.hpp"

namespace linkgate {
namespace {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Z. coeff[i] is the coefficient of x^i;
// the zero polynomial is the empty vector.
// ---------------------------------------------------------------------------
using UPoly = std::vector<Int>;

void u_trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int u_deg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

Int u_lc(const UPoly& a) { return a.empty() ? Int(0) : a.back(); }

UPoly u_mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  u_trim(r);
  return r;
}

UPoly u_sub(const UPoly& a, const UPoly& b) {
  UPoly r = a;
  if (b.size() > r.size()) r.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  u_trim(r);
  return r;
}

UPoly u_scale(const UPoly& a, const Int& c) {
  if (c == 0) return {};
  UPoly r = a;
  for (auto& x : r) x *= c;
  return r;
}

UPoly u_deriv(const UPoly& a) {
  if (a.size() < 2) return {};
  UPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * Int(i);
  u_trim(r);
  return r;
}

Int u_content(const UPoly& a) {
  Int g = 0;
  for (const auto& c : a) g = gcd_int(g, c);
  return g;
}

// Primitive part with positive leading coefficient.
UPoly u_primitive(UPoly a) {
  u_trim(a);
  if (a.empty()) return a;
  Int g = u_content(a);
  if (u_lc(a) < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Exact quotient a/b over Z if it exists.
std::optional<UPoly> u_div_exact(UPoly a, const UPoly& b) {
  u_trim(a);
  if (b.empty()) return std::nullopt;
  if (a.empty()) return UPoly{};
  if (a.size() < b.size()) return std::nullopt;
  UPoly q(a.size() - b.size() + 1, 0);
  for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
    Int num = a[i + b.size() - 1];
    if (num % b.back() != 0) return std::nullopt;
    Int c = num / b.back();
    q[i] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  for (const auto& c : a)
    if (c != 0) return std::nullopt;
  u_trim(q);
  return q;
}

UPoly u_pseudo_rem(UPoly a, const UPoly& b) {
  u_trim(a);
  while (u_deg(a) >= u_deg(b)) {
    Int c = u_lc(a);
    int shift = u_deg(a) - u_deg(b);
    a = u_scale(a, u_lc(b));
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    u_trim(a);
  }
  return a;
}

// Primitive PRS gcd, primitive with positive leading coefficient; content
// of the inputs is folded back in.
UPoly u_gcd(UPoly a, UPoly b) {
  u_trim(a);
  u_trim(b);
  if (a.empty()) return u_primitive(b);
  if (b.empty()) return u_primitive(a);
  Int cont = gcd_int(u_content(a), u_content(b));
  a = u_primitive(a);
  b = u_primitive(b);
  if (u_deg(a) < u_deg(b)) std::swap(a, b);
  while (!b.empty()) {
    UPoly r = u_pseudo_rem(a, b);
    a = b;
    b = u_primitive(r);
  }
  a = u_primitive(a);
  for (auto& c : a) c *= cont;
  return a;
}

// Yun's square-free decomposition of a primitive polynomial with positive
// leading coefficient; returns (square-free part, multiplicity) pairs.
std::vector<std::pair<UPoly, int>> u_yun(const UPoly& f) {
  std::vector<std::pair<UPoly, int>> out;
  if (u_deg(f) < 1) return out;
  UPoly fp = u_deriv(f);
  UPoly g = u_gcd(f, fp);
  if (u_deg(g) == 0) {
    out.emplace_back(f, 1);
    return out;
  }
  UPoly c = *u_div_exact(f, g);
  UPoly w = *u_div_exact(fp, g);
  int i = 1;
  while (u_deg(c) > 0) {
    UPoly y = u_sub(w, u_deriv(c));
    UPoly z = u_gcd(c, y);
    if (u_deg(z) > 0) out.emplace_back(z, i);
    c = *u_div_exact(c, z);
    w = *u_div_exact(y, z);
    ++i;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Arithmetic mod a small prime p (fits comfortably in int64).
// ---------------------------------------------------------------------------
using MPoly = std::vector<long long>;

void mp_trim(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int mp_deg(const MPoly& a) { return static_cast<int>(a.size()) - 1; }

long long md(long long x, long long p) {
  long long r = x % p;
  return r < 0 ? r + p : r;
}

long long m_powmod(long long b, long long e, long long p) {
  long long r = 1;
  b = md(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

long long m_inv(long long a, long long p) { return m_powmod(a, p - 2, p); }

MPoly mp_mul(const MPoly& a, const MPoly& b, long long p) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  mp_trim(r);
  return r;
}

MPoly mp_sub(const MPoly& a, const MPoly& b, long long p) {
  MPoly r = a;
  if (b.size() > r.size()) r.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = md(r[i] - b[i], p);
  mp_trim(r);
  return r;
}

MPoly mp_rem(MPoly a, const MPoly& b, long long p) {
  mp_trim(a);
  long long inv = m_inv(b.back(), p);
  while (mp_deg(a) >= mp_deg(b)) {
    long long c = a.back() * inv % p;
    int shift = mp_deg(a) - mp_deg(b);
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] = md(a[shift + j] - c * b[j] % p, p);
    mp_trim(a);
  }
  return a;
}

MPoly mp_divq(MPoly a, const MPoly& b, long long p) {
  mp_trim(a);
  if (mp_deg(a) < mp_deg(b)) return {};
  MPoly q(a.size() - b.size() + 1, 0);
  long long inv = m_inv(b.back(), p);
  while (mp_deg(a) >= mp_deg(b)) {
    long long c = a.back() * inv % p;
    int shift = mp_deg(a) - mp_deg(b);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[shift + j] = md(a[shift + j] - c * b[j] % p, p);
    mp_trim(a);
  }
  mp_trim(q);
  return q;
}

MPoly mp_monic(MPoly a, long long p) {
  mp_trim(a);
  if (a.empty()) return a;
  long long inv = m_inv(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

MPoly mp_gcd(MPoly a, MPoly b, long long p) {
  mp_trim(a);
  mp_trim(b);
  while (!b.empty()) {
    MPoly r = mp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(a, p);
}

MPoly mp_deriv(const MPoly& a, long long p) {
  if (a.size() < 2) return {};
  MPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i)
    r[i - 1] = a[i] * (static_cast<long long>(i) % p) % p;
  mp_trim(r);
  return r;
}

// base^e mod f, with a big-integer exponent.
MPoly mp_powmod_poly(MPoly base, Int e, const MPoly& f, long long p) {
  MPoly r{1};
  base = mp_rem(std::move(base), f, p);
  while (e > 0) {
    if ((e & 1) != 0) r = mp_rem(mp_mul(r, base, p), f, p);
    base = mp_rem(mp_mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

// Cantor-Zassenhaus split of a product of degree-d irreducibles (p odd).
bool mp_equal_degree(const MPoly& f, int d, long long p, std::mt19937_64& rng,
                     Budget* budget, std::vector<MPoly>& out) {
  if (mp_deg(f) == d) {
    out.push_back(f);
    return true;
  }
  Int exp = (boost::multiprecision::pow(Int(p), d) - 1) / 2;
  for (;;) {
    if (budget && !budget->tick(16)) return false;
    MPoly a(mp_deg(f), 0);
    for (auto& c : a) c = static_cast<long long>(rng() % p);
    mp_trim(a);
    if (mp_deg(a) < 1) continue;
    MPoly b = mp_powmod_poly(a, exp, f, p);
    b = mp_sub(b, MPoly{1}, p);
    MPoly g = mp_gcd(b, f, p);
    if (mp_deg(g) > 0 && mp_deg(g) < mp_deg(f)) {
      return mp_equal_degree(g, d, p, rng, budget, out) &&
             mp_equal_degree(mp_divq(f, g, p), d, p, rng, budget, out);
    }
  }
}

// Full factorization of a monic square-free f mod p into monic irreducibles.
bool mp_factor_squarefree(MPoly f, long long p, Budget* budget,
                          std::vector<MPoly>& out) {
  std::mt19937_64 rng(0x1309c0ffee);
  MPoly h{0, 1};  // x
  int d = 1;
  while (mp_deg(f) >= 2 * d) {
    if (budget && !budget->tick(4)) return false;
    h = mp_powmod_poly(h, Int(p), f, p);
    MPoly g = mp_gcd(mp_sub(h, MPoly{0, 1}, p), f, p);
    if (mp_deg(g) > 0) {
      if (!mp_equal_degree(g, d, p, rng, budget, out)) return false;
      f = mp_divq(f, g, p);
      h = mp_rem(h, f, p);
    }
    ++d;
  }
  if (mp_deg(f) > 0) out.push_back(f);
  return true;
}

// ---------------------------------------------------------------------------
// Hensel lifting: UPoly coefficients reduced into [0, m).
// ---------------------------------------------------------------------------
UPoly im_reduce(const UPoly& a, const Int& m) {
  UPoly r = a;
  for (auto& c : r) {
    c %= m;
    if (c < 0) c += m;
  }
  u_trim(r);
  return r;
}

UPoly im_mul(const UPoly& a, const UPoly& b, const Int& m) {
  return im_reduce(u_mul(a, b), m);
}

UPoly im_add(const UPoly& a, const UPoly& b, const Int& m) {
  UPoly r = a;
  if (b.size() > r.size()) r.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return im_reduce(r, m);
}

UPoly im_sub(const UPoly& a, const UPoly& b, const Int& m) {
  UPoly r = a;
  if (b.size() > r.size()) r.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return im_reduce(r, m);
}

// Division with remainder by a monic divisor, mod m.
void im_divmod(const UPoly& a, const UPoly& b, const Int& m, UPoly& q,
               UPoly& r) {
  r = im_reduce(a, m);
  q.clear();
  if (u_deg(r) >= u_deg(b)) q.assign(r.size() - b.size() + 1, 0);
  while (u_deg(r) >= u_deg(b)) {
    Int c = u_lc(r);
    int shift = u_deg(r) - u_deg(b);
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[shift + j] -= c * b[j];
      r[shift + j] %= m;
      if (r[shift + j] < 0) r[shift + j] += m;
    }
    u_trim(r);
  }
  u_trim(q);
}

// One quadratic Hensel step (von zur Gathen-Gerhard 15.10): given
// f = g*h (mod m) with h monic and s*g + t*h = 1 (mod m), lifts all four
// to the same identities mod m^2.
void hensel_step(const UPoly& f, UPoly& g, UPoly& h, UPoly& s, UPoly& t,
                 const Int& m) {
  Int M = m * m;
  UPoly e = im_sub(im_reduce(f, M), im_mul(g, h, M), M);
  UPoly q, r;
  im_divmod(im_mul(s, e, M), h, M, q, r);
  UPoly g1 = im_add(g, im_add(im_mul(t, e, M), im_mul(q, g, M), M), M);
  UPoly h1 = im_add(h, r, M);
  UPoly b = im_sub(
      im_add(im_mul(s, g1, M), im_mul(t, h1, M), M), UPoly{1}, M);
  UPoly c, d;
  im_divmod(im_mul(s, b, M), h1, M, c, d);
  s = im_sub(s, d, M);
  t = im_sub(t, im_add(im_mul(t, b, M), im_mul(c, g1, M), M), M);
  g = std::move(g1);
  h = std::move(h1);
}

// Bezout cofactors s*g + t*h = 1 mod p for coprime g, h.
void mp_bezout(const MPoly& g, const MPoly& h, long long p, UPoly& s,
               UPoly& t) {
  MPoly r0 = g, r1 = h;
  MPoly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    MPoly q = mp_divq(r0, r1, p);
    MPoly r2 = mp_sub(r0, mp_mul(q, r1, p), p);
    MPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
    MPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  long long inv = m_inv(r0.back(), p);  // r0 is a nonzero constant
  s.assign(s0.size(), 0);
  t.assign(t0.size(), 0);
  for (std::size_t i = 0; i < s0.size(); ++i) s[i] = Int(s0[i] * inv % p);
  for (std::size_t i = 0; i < t0.size(); ++i) t[i] = Int(t0[i] * inv % p);
}

UPoly mp_to_upoly(const MPoly& a) {
  UPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = Int(a[i]);
  return r;
}

// Lifts the monic factorization f = prod(leaves) from mod p to mod target
// (target = p^(2^k)), recursing on a balanced product tree.
void hensel_tree(const UPoly& f, std::vector<UPoly>& leaves, int lo, int hi,
                 long long p, const Int& target) {
  if (hi - lo == 1) {
    leaves[lo] = im_reduce(f, target);
    return;
  }
  int mid = lo + (hi - lo) / 2;
  MPoly g0{1}, h0{1};
  auto to_mp = [p](const UPoly& a) {
    MPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      r[i] = static_cast<long long>(a[i] % p);
    mp_trim(r);
    return r;
  };
  for (int i = lo; i < mid; ++i) g0 = mp_mul(g0, to_mp(leaves[i]), p);
  for (int i = mid; i < hi; ++i) h0 = mp_mul(h0, to_mp(leaves[i]), p);
  UPoly s, t;
  mp_bezout(g0, h0, p, s, t);
  UPoly g = mp_to_upoly(g0), h = mp_to_upoly(h0);
  Int m(p);
  while (m < target) {
    hensel_step(f, g, h, s, t, m);
    m *= m;
  }
  hensel_tree(g, leaves, lo, mid, p, target);
  hensel_tree(h, leaves, mid, hi, p, target);
}

UPoly im_symmetric(const UPoly& a, const Int& m) {
  UPoly r = a;
  for (auto& c : r)
    if (2 * c > m) c -= m;
  u_trim(r);
  return r;
}

Int isqrt_ceil(const Int& n) {
  using boost::multiprecision::sqrt;
  Int r = sqrt(n);
  if (r * r < n) ++r;
  return r;
}

// ---------------------------------------------------------------------------
// Zassenhaus on a square-free primitive polynomial with positive lc.
// ---------------------------------------------------------------------------
bool zassenhaus(const UPoly& f, Budget* budget, std::vector<UPoly>& out) {
  int n = u_deg(f);
  if (n <= 0) return true;
  if (n == 1) {
    out.push_back(f);
    return true;
  }
  // Work with the monic companion Fm(x) = lc^(n-1) * f(x/lc).
  // Coefficient of x^i in Fm is f_i * L^(n-1-i); the top coefficient is 1.
  Int L = u_lc(f);
  UPoly fm(f.size());
  fm[n] = 1;
  Int pw = 1;
  for (int i = n - 1; i >= 0; --i) {
    fm[i] = f[i] * pw;
    pw *= L;
  }

  // Prime with fm square-free mod p.
  long long p = 0;
  for (long long cand = 3; cand < 100000; cand += 2) {
    bool prime = true;
    for (long long d = 3; d * d <= cand; d += 2)
      if (cand % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    MPoly fp(fm.size());
    for (std::size_t i = 0; i < fm.size(); ++i)
      fp[i] = static_cast<long long>(((fm[i] % cand) + cand) % cand);
    mp_trim(fp);
    if (mp_deg(fp) != n) continue;
    if (mp_deg(mp_gcd(fp, mp_deriv(fp, cand), cand)) == 0) {
      p = cand;
      break;
    }
  }
  if (p == 0) return false;

  MPoly fp(fm.size());
  for (std::size_t i = 0; i < fm.size(); ++i)
    fp[i] = static_cast<long long>(((fm[i] % p) + p) % p);
  std::vector<MPoly> modular;
  if (!mp_factor_squarefree(mp_monic(fp, p), p, budget, modular))
    return false;
  if (modular.size() == 1) {
    out.push_back(f);
    return true;
  }
  std::sort(modular.begin(), modular.end());

  // Lift past twice the Mignotte factor bound.
  Int norm2 = 0;
  for (const auto& c : fm) norm2 += c * c;
  Int bound = (isqrt_ceil(norm2) + 1) << n;
  Int target(p);
  while (target < 2 * bound + 1) target *= target;
  std::vector<UPoly> leaves(modular.size());
  for (std::size_t i = 0; i < modular.size(); ++i)
    leaves[i] = mp_to_upoly(modular[i]);
  hensel_tree(fm, leaves, 0, static_cast<int>(leaves.size()), p, target);

  // Subset recombination over the lifted leaves.
  std::vector<int> alive(leaves.size());
  std::iota(alive.begin(), alive.end(), 0);
  UPoly rem = fm;
  std::vector<UPoly> monic_factors;
  bool found = true;
  while (found && !alive.empty()) {
    found = false;
    int k = static_cast<int>(alive.size());
    for (int sz = 1; sz <= k / 2 && !found; ++sz) {
      std::vector<int> idx(sz);
      std::iota(idx.begin(), idx.end(), 0);
      for (;;) {
        if (budget && !budget->tick(4)) return false;
        UPoly cand{1};
        for (int i : idx) cand = im_mul(cand, leaves[alive[i]], target);
        cand = im_symmetric(cand, target);
        if (auto q = u_div_exact(rem, cand)) {
          monic_factors.push_back(cand);
          rem = *q;
          std::vector<int> next;
          std::size_t ii = 0;
          for (int i = 0; i < k; ++i) {
            if (ii < idx.size() && idx[ii] == i)
              ++ii;
            else
              next.push_back(alive[i]);
          }
          alive = std::move(next);
          found = true;
          break;
        }
        int pos = sz - 1;
        while (pos >= 0 && idx[pos] == k - sz + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  if (u_deg(rem) > 0) monic_factors.push_back(rem);

  // Undo the monic substitution: factors of f are pp(H(L*x)).
  for (auto& h : monic_factors) {
    UPoly g = h;
    Int q = 1;
    for (std::size_t i = 0; i < g.size(); ++i) {
      g[i] *= q;
      q *= L;
    }
    out.push_back(u_primitive(g));
  }
  return true;
}

// Primitive positive-lc univariate factorization into (irreducible, mult).
bool factor_univariate(const UPoly& f, Budget* budget,
                       std::vector<std::pair<UPoly, int>>& out) {
  for (const auto& [part, mult] : u_yun(f)) {
    std::vector<UPoly> irr;
    if (!zassenhaus(part, budget, irr)) return false;
    for (auto& g : irr) out.emplace_back(std::move(g), mult);
  }
  return true;
}

// ---------------------------------------------------------------------------
// Bridging between UPoly and (ordinary parts of) LaurentPoly.
// ---------------------------------------------------------------------------
UPoly laurent_to_upoly(const LaurentPoly& p, int var) {
  UPoly r(p.degree_in(var) + 1, 0);
  for (const auto& [e, c] : p.terms()) r[e[var]] = c;
  return r;
}

LaurentPoly upoly_to_laurent(const UPoly& u, int num_vars, int var) {
  LaurentPoly p(num_vars);
  LaurentPoly::Exps e(num_vars, 0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    e[var] = static_cast<int>(i);
    p.add_term(e, u[i]);
  }
  return p;
}

void push_factor(std::vector<std::pair<LaurentPoly, int>>& out,
                 const LaurentPoly& f, int mult) {
  LaurentPoly n = normalize(f).poly;
  for (auto& [g, m] : out)
    if (g == n) {
      m += mult;
      return;
    }
  out.emplace_back(std::move(n), mult);
}

LaurentPoly divide_content(const LaurentPoly& p, const Int& c) {
  LaurentPoly r(p.num_vars());
  for (const auto& [e, v] : p.terms()) r.add_term(e, v / c);
  return r;
}

bool factor_core(const LaurentPoly& p, Budget* budget,
                 std::vector<std::pair<LaurentPoly, int>>& out);

// Square-free content-free bivariate factorization by Kronecker
// substitution vb -> va^D with D > deg_va, then subset recombination of the
// univariate image's irreducible factors against trial division upstairs.
bool kronecker_bivariate(LaurentPoly p, int va, int vb, Budget* budget,
                         std::vector<std::pair<LaurentPoly, int>>& out) {
  int nv = p.num_vars();
  for (;;) {
    int da = p.degree_in(va);
    int db = p.degree_in(vb);
    if (da == 0 || db == 0) {
      // Fell back to (at most) one active variable.
      return factor_core(p, budget, out);
    }
    int D = da + 1;
    UPoly image(da + D * db + 1, 0);
    for (const auto& [e, c] : p.terms()) image[e[va] + D * e[vb]] = c;
    u_trim(image);
    std::vector<std::pair<UPoly, int>> ufac;
    if (!factor_univariate(u_primitive(image), budget, ufac)) return false;
    std::vector<UPoly> items;  // multiplicity expanded
    for (const auto& [g, m] : ufac)
      for (int i = 0; i < m; ++i) items.push_back(g);
    if (static_cast<int>(items.size()) > 20) return false;
    if (items.size() <= 1) {
      push_factor(out, p, 1);
      return true;
    }
    int k = static_cast<int>(items.size());
    bool advanced = false;
    for (int sz = 1; sz < k && !advanced; ++sz) {
      std::vector<int> idx(sz);
      std::iota(idx.begin(), idx.end(), 0);
      for (;;) {
        if (budget && !budget->tick(4)) return false;
        UPoly cand{1};
        for (int i : idx) cand = u_mul(cand, items[i]);
        // Pull the candidate back through the substitution.
        LaurentPoly lift(nv);
        LaurentPoly::Exps e(nv, 0);
        for (std::size_t i = 0; i < cand.size(); ++i) {
          if (cand[i] == 0) continue;
          e[va] = static_cast<int>(i) % D;
          e[vb] = static_cast<int>(i) / D;
          lift.add_term(e, cand[i]);
        }
        auto q = try_divide(p, lift);
        bool proper = q && !normalize(lift).poly.is_constant() &&
                      !normalize(*q).poly.is_constant();
        if (proper) {
          // Smallest-subset divisors are irreducible upstairs.
          push_factor(out, lift, 1);
          p = normalize(*q).poly;
          advanced = true;
          break;
        }
        int pos = sz - 1;
        while (pos >= 0 && idx[pos] == k - sz + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int j = pos + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
    if (!advanced) {
      push_factor(out, p, 1);
      return true;
    }
  }
}

// p: ordinary, primitive, nonconstant. Appends (irreducible, mult) pairs.
bool factor_core(const LaurentPoly& p, Budget* budget,
                 std::vector<std::pair<LaurentPoly, int>>& out) {
  std::vector<int> active;
  for (int v = 0; v < p.num_vars(); ++v)
    if (p.degree_in(v) > 0) active.push_back(v);
  if (active.empty()) return true;

  if (active.size() == 1) {
    int v = active[0];
    std::vector<std::pair<UPoly, int>> ufac;
    if (!factor_univariate(u_primitive(laurent_to_upoly(p, v)), budget,
                           ufac))
      return false;
    for (const auto& [g, m] : ufac)
      push_factor(out, upoly_to_laurent(g, p.num_vars(), v), m);
    return true;
  }

  // Two active variables: peel repeated factors with a derivative gcd,
  // then Kronecker-substitute the square-free remainder.
  int va = active[0], vb = active[1];
  if (p.degree_in(vb) > p.degree_in(va)) std::swap(va, vb);
  LaurentPoly g = laurent_gcd(p, derivative(p, va));
  if (!g.is_constant()) {
    auto rest = try_divide(p, g);
    if (!rest) return false;  // cannot happen for exact gcds
    return factor_core(normalize(g).poly, budget, out) &&
           factor_core(normalize(*rest).poly, budget, out);
  }
  return kronecker_bivariate(p, va, vb, budget, out);
}

}  // namespace

LaurentPoly Factorization::expand(int num_vars) const {
  LaurentPoly r = LaurentPoly::constant(num_vars, content);
  for (const auto& [f, m] : factors) r = r * f.pow(m);
  return r;
}

std::optional<Factorization> factor(const LaurentPoly& p, Budget* budget,
                                    const FactorLimits& limits) {
  if (p.is_zero())
    throw PreconditionError("factor: input polynomial is zero");
  LaurentPoly q = normalize(p).poly;
  int active = 0;
  for (int v = 0; v < q.num_vars(); ++v)
    if (q.degree_in(v) > 0) ++active;
  if (q.total_degree() > limits.max_total_degree ||
      active > limits.max_active_vars)
    return std::nullopt;

  Factorization out;
  out.content = q.content();
  if (!q.is_constant()) {
    LaurentPoly prim = divide_content(q, out.content);
    if (!factor_core(prim, budget, out.factors)) return std::nullopt;
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) {
              return std::tuple(a.first.total_degree(),
                                a.first.to_string()) <
                     std::tuple(b.first.total_degree(),
                                b.first.to_string());
            });
  return out;
}

}  // namespace linkgate
