#include "linkgate/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "linkgate/errors.hpp"

namespace linkgate {

namespace {

int exp_sum(const LaurentPoly::Exps& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

// Graded-lex with t1 > t2 > ... > t_mu.
bool grlex_less(const LaurentPoly::Exps& a, const LaurentPoly::Exps& b) {
  int sa = exp_sum(a), sb = exp_sum(b);
  if (sa != sb) return sa < sb;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

LaurentPoly LaurentPoly::constant(int num_vars, const Int& c) {
  LaurentPoly p(num_vars);
  if (c != 0) p.terms_[Exps(num_vars, 0)] = c;
  return p;
}

LaurentPoly LaurentPoly::monomial(int num_vars, int var, int power,
                                  const Int& coeff) {
  LaurentPoly p(num_vars);
  if (coeff != 0) {
    Exps e(num_vars, 0);
    e[var] = power;
    p.terms_[e] = coeff;
  }
  return p;
}

bool LaurentPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && exp_sum(terms_.begin()->first) == 0 &&
         *std::max_element(terms_.begin()->first.begin(),
                           terms_.begin()->first.end()) == 0 &&
         *std::min_element(terms_.begin()->first.begin(),
                           terms_.begin()->first.end()) == 0;
}

Int LaurentPoly::constant_value() const {
  if (terms_.empty()) return 0;
  return terms_.begin()->second;
}

void LaurentPoly::add_term(const Exps& e, const Int& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

const Int& LaurentPoly::coeff(const Exps& e) const {
  static const Int zero = 0;
  auto it = terms_.find(e);
  return it == terms_.end() ? zero : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r(nvars_);
  Exps e(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentPoly LaurentPoly::pow(int n) const {
  LaurentPoly r = constant(nvars_, 1);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

int LaurentPoly::degree_in(int var) const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[var] > d) d = e[var];
    first = false;
  }
  return d;
}

int LaurentPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, exp_sum(e));
  return d;
}

Int LaurentPoly::content() const {
  Int g = 0;
  for (const auto& [e, c] : terms_) g = gcd_int(g, c);
  return g;
}

std::pair<LaurentPoly::Exps, Int> LaurentPoly::leading_term() const {
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (grlex_less(best->first, it->first)) best = it;
  return {best->first, best->second};
}

LaurentPoly involve(const LaurentPoly& p) {
  LaurentPoly r(p.num_vars());
  LaurentPoly::Exps e(p.num_vars());
  for (const auto& [ep, c] : p.terms()) {
    for (int i = 0; i < p.num_vars(); ++i) e[i] = -ep[i];
    r.add_term(e, c);
  }
  return r;
}

UnitNormalForm normalize(const LaurentPoly& p) {
  UnitNormalForm u;
  u.shift.assign(p.num_vars(), 0);
  if (p.is_zero()) {
    u.poly = LaurentPoly(p.num_vars());
    return u;
  }
  std::vector<int> mn(p.num_vars(), 0);
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < p.num_vars(); ++i)
      if (first || e[i] < mn[i]) mn[i] = e[i];
    first = false;
  }
  LaurentPoly shifted(p.num_vars());
  LaurentPoly::Exps e2(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i < p.num_vars(); ++i) e2[i] = e[i] - mn[i];
    shifted.add_term(e2, c);
  }
  u.shift = mn;
  u.sign = shifted.leading_term().second > 0 ? 1 : -1;
  u.poly = u.sign == 1 ? shifted : -shifted;
  return u;
}

bool doteq(const LaurentPoly& p, const LaurentPoly& q) {
  return normalize(p).poly == normalize(q).poly;
}

namespace {

// Exact division of ordinary (min exponent >= 0) polynomials by the
// leading-term loop; returns nullopt when q does not divide p.
std::optional<LaurentPoly> divide_ordinary(const LaurentPoly& p,
                                           const LaurentPoly& q) {
  const int n = p.num_vars();
  LaurentPoly quot(n), rem = p;
  auto [qe, qc] = q.leading_term();
  while (!rem.is_zero()) {
    auto [re, rc] = rem.leading_term();
    LaurentPoly::Exps me(n);
    for (int i = 0; i < n; ++i) {
      me[i] = re[i] - qe[i];
      if (me[i] < 0) return std::nullopt;
    }
    if (rc % qc != 0) return std::nullopt;
    LaurentPoly m(n);
    m.add_term(me, rc / qc);
    quot = quot + m;
    rem = rem - m * q;
  }
  return quot;
}

}  // namespace

std::optional<LaurentPoly> try_divide(const LaurentPoly& p,
                                      const LaurentPoly& q) {
  if (q.is_zero()) return std::nullopt;
  if (p.is_zero()) return LaurentPoly(p.num_vars());
  UnitNormalForm up = normalize(p), uq = normalize(q);
  auto h = divide_ordinary(up.poly, uq.poly);
  if (!h) return std::nullopt;
  LaurentPoly unit(p.num_vars());
  LaurentPoly::Exps e(p.num_vars());
  for (int i = 0; i < p.num_vars(); ++i) e[i] = up.shift[i] - uq.shift[i];
  unit.add_term(e, up.sign * uq.sign);
  return *h * unit;
}

namespace {

// --- multivariate gcd by primitive PRS --------------------------------

using Coeffs = std::map<int, LaurentPoly>;  // degree in main var -> coeff

Coeffs decompose(const LaurentPoly& p, int var) {
  Coeffs cs;
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly::Exps e2 = e;
    int d = e2[var];
    e2[var] = 0;
    auto it = cs.find(d);
    if (it == cs.end())
      cs.emplace(d, LaurentPoly(p.num_vars()));
    cs.at(d).add_term(e2, c);
  }
  return cs;
}

LaurentPoly recompose(const Coeffs& cs, int var, int nvars) {
  LaurentPoly p(nvars);
  for (const auto& [d, c] : cs)
    for (const auto& [e, v] : c.terms()) {
      LaurentPoly::Exps e2 = e;
      e2[var] = d;
      p.add_term(e2, v);
    }
  return p;
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly content_wrt(const LaurentPoly& p, int var) {
  LaurentPoly g(p.num_vars());
  for (const auto& [d, c] : decompose(p, var)) g = poly_gcd(g, c);
  return g;
}

int first_active_var(const LaurentPoly& a, const LaurentPoly& b) {
  for (int v = 0; v < a.num_vars(); ++v)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  return -1;
}

// Pseudo-remainder in the main variable var.
LaurentPoly pseudo_rem(const LaurentPoly& a, const LaurentPoly& b, int var) {
  const int nvars = a.num_vars();
  Coeffs ca = decompose(a, var), cb = decompose(b, var);
  int db = cb.rbegin()->first;
  LaurentPoly lcb = cb.rbegin()->second;
  LaurentPoly r = a;
  while (true) {
    if (r.is_zero()) return r;
    Coeffs cr = decompose(r, var);
    int dr = cr.rbegin()->first;
    if (dr < db) return r;
    LaurentPoly lcr = cr.rbegin()->second;
    // r <- lcb * r - lcr * x^(dr-db) * b
    LaurentPoly shift_b(nvars);
    for (const auto& [e, c] : b.terms()) {
      LaurentPoly::Exps e2 = e;
      e2[var] += dr - db;
      shift_b.add_term(e2, c);
    }
    r = lcb * r - lcr * shift_b;
  }
}

LaurentPoly primitive_part(const LaurentPoly& p, int var) {
  if (p.is_zero()) return p;
  LaurentPoly c = content_wrt(p, var);
  auto q = try_divide(p, c);
  return *q;
}

// gcd of ordinary polynomials (min exponents 0), up to sign.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return normalize(b).poly;
  if (b.is_zero()) return normalize(a).poly;
  int var = first_active_var(a, b);
  if (var < 0)
    return LaurentPoly::constant(a.num_vars(),
                                 gcd_int(a.constant_value(), b.constant_value()));
  LaurentPoly ca = content_wrt(a, var), cb = content_wrt(b, var);
  LaurentPoly pa = *try_divide(a, ca), pb = *try_divide(b, cb);
  if (decompose(pa, var).rbegin()->first < decompose(pb, var).rbegin()->first)
    std::swap(pa, pb);
  while (!pb.is_zero()) {
    LaurentPoly r = pseudo_rem(pa, pb, var);
    pa = pb;
    pb = r.is_zero() ? r : primitive_part(r, var);
  }
  return normalize(poly_gcd(ca, cb) * primitive_part(pa, var)).poly;
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() && q.is_zero()) return LaurentPoly(p.num_vars());
  if (p.is_zero()) return normalize(q).poly;
  if (q.is_zero()) return normalize(p).poly;
  return normalize(poly_gcd(normalize(p).poly, normalize(q).poly)).poly;
}

Rat evaluate(const LaurentPoly& p, const std::vector<Rat>& point) {
  if (static_cast<int>(point.size()) != p.num_vars())
    throw PreconditionError("evaluate: wrong point dimension");
  for (const Rat& x : point)
    if (x == 0) throw PreconditionError("evaluate: zero coordinate");
  Rat acc = 0;
  for (const auto& [e, c] : p.terms()) {
    Rat term(c);
    for (int i = 0; i < p.num_vars(); ++i) {
      int k = e[i];
      Rat base = k >= 0 ? point[i] : Rat(1) / point[i];
      for (int j = 0; j < std::abs(k); ++j) term *= base;
    }
    acc += term;
  }
  return acc;
}

LaurentPoly derivative(const LaurentPoly& p, int var) {
  LaurentPoly r(p.num_vars());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    LaurentPoly::Exps e2 = e;
    e2[var] -= 1;
    r.add_term(e2, c * e[var]);
  }
  return r;
}

// --- text syntax ------------------------------------------------------

namespace {

struct PolyParser {
  const std::string& s;
  size_t pos = 0;
  int max_var = 0;  // highest 1-based index seen

  explicit PolyParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  Int parse_int() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == digits)
      throw ParseError("expected integer at position " + std::to_string(start));
    return Int(s.substr(start, pos - start));
  }

  // A single monomial term (product of factors).
  struct Term {
    Int coeff = 1;
    std::map<int, int> exps;  // 0-based var -> exponent
  };

  Term parse_term() {
    Term t;
    bool first = true;
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      char c = s[pos];
      if (c == 't') {
        ++pos;
        int var = 1;
        size_t d0 = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
          ++pos;
        if (pos > d0) var = std::stoi(s.substr(d0, pos - d0));
        if (var < 1) throw ParseError("variable index must be >= 1");
        max_var = std::max(max_var, var);
        int e = 1;
        if (eat('^')) e = static_cast<int>(parse_int());
        t.exps[var - 1] += e;
      } else if ((c == '-' || c == '+') && first) {
        // Sign with no digits following (e.g. "-t^3") is a bare ±1.
        size_t save = pos;
        ++pos;
        skip_ws();
        if (pos < s.size() &&
            std::isdigit(static_cast<unsigned char>(s[pos]))) {
          pos = save;
          t.coeff *= parse_int();
        } else {
          if (c == '-') t.coeff = -t.coeff;
          first = false;
          continue;
        }
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff *= parse_int();
      } else {
        break;
      }
      first = false;
      if (!eat('*')) break;
    }
    return t;
  }

  std::vector<Term> parse_all() {
    std::vector<Term> terms;
    skip_ws();
    if (pos >= s.size()) throw ParseError("empty polynomial");
    bool negate = false;
    while (true) {
      Term t = parse_term();
      if (negate) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+')) {
        negate = false;
      } else if (eat('-')) {
        negate = true;
      } else {
        throw ParseError("unexpected character at position " +
                         std::to_string(pos));
      }
    }
    return terms;
  }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text, int num_vars) {
  PolyParser pp(text);
  auto terms = pp.parse_all();
  if (pp.max_var > num_vars)
    throw ParseError("variable index exceeds declared variable count");
  LaurentPoly p(num_vars);
  LaurentPoly::Exps e(num_vars);
  for (const auto& t : terms) {
    std::fill(e.begin(), e.end(), 0);
    for (const auto& [v, k] : t.exps) e[v] = k;
    p.add_term(e, t.coeff);
  }
  return p;
}

LaurentPoly parse_poly(const std::string& text) {
  PolyParser pp(text);
  auto terms = pp.parse_all();
  int nvars = std::max(pp.max_var, 1);
  LaurentPoly p(nvars);
  LaurentPoly::Exps e(nvars);
  for (const auto& t : terms) {
    std::fill(e.begin(), e.end(), 0);
    for (const auto& [v, k] : t.exps) e[v] = k;
    p.add_term(e, t.coeff);
  }
  return p;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Descending graded-lex for readability.
  std::vector<const TermMap::value_type*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(),
            [](const auto* a, const auto* b) {
              return grlex_less(b->first, a->first);
            });
  std::ostringstream out;
  bool first = true;
  for (const auto* t : ts) {
    const auto& [e, c] = *t;
    Int ac = abs_int(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool any_var = exp_sum(e) != 0 ||
                   std::any_of(e.begin(), e.end(), [](int k) { return k != 0; });
    if (ac != 1 || !any_var) out << ac.str();
    bool printed = ac != 1 || !any_var;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (printed) out << "*";
      out << "t" << (i + 1);
      if (e[i] != 1) out << "^" << e[i];
      printed = true;
    }
  }
  return out.str();
}

}  // namespace linkgate
