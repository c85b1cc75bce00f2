#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linkgate/numeric.hpp"

namespace linkgate {

// Element of the Laurent ring Z[t1^±, ..., t_mu^±].
//
// Terms map exponent tuples (length = num_vars) to nonzero coefficients;
// the zero polynomial has an empty term map. Equality is term-map equality.
class LaurentPoly {
 public:
  using Exps = std::vector<int>;
  using TermMap = std::map<Exps, Int>;

  LaurentPoly() : nvars_(1) {}
  explicit LaurentPoly(int num_vars) : nvars_(num_vars) {}

  static LaurentPoly constant(int num_vars, const Int& c);
  // t_var^power (var is 0-based).
  static LaurentPoly monomial(int num_vars, int var, int power = 1,
                              const Int& coeff = 1);

  int num_vars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term value; poly must be constant.
  Int constant_value() const;

  void add_term(const Exps& e, const Int& c);
  const Int& coeff(const Exps& e) const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const = default;

  LaurentPoly pow(int n) const;  // n >= 0

  // Max exponent of variable var over all terms (0 for the zero poly).
  int degree_in(int var) const;
  int total_degree() const;
  int term_count() const { return static_cast<int>(terms_.size()); }

  // gcd of all coefficients, nonnegative; 0 for the zero poly.
  Int content() const;

  // Leading term under graded-lex order with t1 > t2 > ... > t_mu.
  // Poly must be nonzero.
  std::pair<Exps, Int> leading_term() const;

  std::string to_string() const;

 private:
  int nvars_;
  TermMap terms_;
};

// Canonical representative for equality up to a unit ±t^a ("doteq").
// poly has min exponent 0 in every variable and positive graded-lex
// leading coefficient; original = sign * t^shift * poly.
struct UnitNormalForm {
  LaurentPoly poly;
  int sign = 1;
  std::vector<int> shift;
};

// t_i -> t_i^{-1} termwise.
LaurentPoly involve(const LaurentPoly& p);

UnitNormalForm normalize(const LaurentPoly& p);

// True iff p and q agree up to a unit ±t^a.
bool doteq(const LaurentPoly& p, const LaurentPoly& q);

// Exact quotient p/q if q divides p in the Laurent ring.
std::optional<LaurentPoly> try_divide(const LaurentPoly& p,
                                      const LaurentPoly& q);

// gcd in unit-normal form; gcd(p,0) ~ p, gcd(0,0) = 0.
LaurentPoly laurent_gcd(const LaurentPoly& p, const LaurentPoly& q);

// Substitution; every coordinate must be nonzero.
Rat evaluate(const LaurentPoly& p, const std::vector<Rat>& point);

// Derivative with respect to var of the shifted ordinary polynomial;
// used by square-free decomposition. Input must have min exponent >= 0.
LaurentPoly derivative(const LaurentPoly& p, int var);

// Text syntax: `3*t1^2*t2^-1 - 1`. `t` is accepted as an alias for t1.
LaurentPoly parse_poly(const std::string& text, int num_vars);
// Parse with the variable count inferred from the highest index used.
LaurentPoly parse_poly(const std::string& text);

}  // namespace linkgate
