#include <doctest.h>

#include "linkgate/factor.hpp"

using namespace linkgate;

namespace {
bool factorization_expands_to(const Factorization& f, const LaurentPoly& p) {
  return doteq(f.expand(p.num_vars()), p);
}
}  // namespace

TEST_CASE("univariate irreducibles are recognized") {
  for (const char* s : {"t - 1", "t^2 - t + 1", "t^2 + 1", "t^4 + t^3 + t^2 + t + 1"}) {
    LaurentPoly p = parse_poly(s, 1);
    auto f = factor(p);
    REQUIRE(f);
    REQUIRE(f->factors.size() == 1);
    CHECK(f->factors[0].second == 1);
    CHECK(doteq(f->factors[0].first, p));
  }
}

TEST_CASE("univariate products split completely") {
  LaurentPoly p = parse_poly("t^2 - t + 1", 1);
  LaurentPoly q = parse_poly("t^2 - 3*t + 1", 1);
  LaurentPoly r = parse_poly("t - 2", 1);
  LaurentPoly prod = p * p * q * r * LaurentPoly::constant(1, -6);
  auto f = factor(prod);
  REQUIRE(f);
  CHECK(f->content == 6);
  CHECK(f->factors.size() == 3);
  CHECK(factorization_expands_to(*f, prod));
  int total_mult = 0;
  for (auto& [g, m] : f->factors) {
    total_mult += m * g.total_degree();
    bool known = doteq(g, p) || doteq(g, q) || doteq(g, r);
    CHECK(known);
    if (doteq(g, p)) CHECK(m == 2);
  }
  CHECK(total_mult == 7);
}

TEST_CASE("cyclotomic-style products") {
  // t^6 - 1 = (t-1)(t+1)(t^2+t+1)(t^2-t+1)
  auto f = factor(parse_poly("t^6 - 1", 1));
  REQUIRE(f);
  CHECK(f->factors.size() == 4);
  CHECK(factorization_expands_to(*f, parse_poly("t^6 - 1", 1)));
}

TEST_CASE("laurent units and shifts are absorbed") {
  LaurentPoly p = parse_poly("t^-3 - t^-1", 1);  // = t^-3 (1 - t^2)
  auto f = factor(p);
  REQUIRE(f);
  CHECK(f->factors.size() == 2);
  CHECK(factorization_expands_to(*f, p));
}

TEST_CASE("bivariate factorization") {
  LaurentPoly a = parse_poly("t1*t2 + 1", 2);
  LaurentPoly b = parse_poly("t1 + t2", 2);
  LaurentPoly prod = a * b;
  auto f = factor(prod);
  REQUIRE(f);
  REQUIRE(f->factors.size() == 2);
  CHECK(factorization_expands_to(*f, prod));
  for (auto& [g, m] : f->factors) {
    CHECK(m == 1);
    bool known = doteq(g, a) || doteq(g, b);
    CHECK(known);
  }

  LaurentPoly sq = a * a * b;
  auto f2 = factor(sq);
  REQUIRE(f2);
  CHECK(factorization_expands_to(*f2, sq));
}

TEST_CASE("bivariate factor with one-variable pieces") {
  LaurentPoly p = parse_poly("t1 - 1", 2) * parse_poly("t2 - 1", 2) *
                  parse_poly("t1*t2 - t1 - t2", 2);
  auto f = factor(p);
  REQUIRE(f);
  CHECK(f->factors.size() == 3);
  CHECK(factorization_expands_to(*f, p));
}

TEST_CASE("norm-shaped bivariate input") {
  LaurentPoly g = parse_poly("2*t1*t2 - t1 - t2 + 1", 2);
  LaurentPoly prod = g * involve(g);
  auto f = factor(prod);
  REQUIRE(f);
  CHECK(factorization_expands_to(*f, prod));
  CHECK(f->factors.size() == 2);
}

TEST_CASE("limits produce nullopt, not wrong answers") {
  // Degree beyond the configured ceiling.
  LaurentPoly big = parse_poly("t - 1", 1).pow(30);
  CHECK_FALSE(factor(big));
  // Three active variables.
  LaurentPoly tri = parse_poly("t1*t2*t3 - 1", 3);
  CHECK_FALSE(factor(tri));
  // Exhausted step budget.
  Budget b = Budget::with_steps(1);
  CHECK_FALSE(factor(parse_poly("t^6 - 1", 1), &b));
}

TEST_CASE("constants") {
  auto f = factor(parse_poly("12", 1));
  REQUIRE(f);
  CHECK(f->content == 12);
  CHECK(f->factors.empty());
}

TEST_CASE("factor order is deterministic") {
  LaurentPoly p = parse_poly("t^6 - 1", 1);
  auto f1 = factor(p);
  auto f2 = factor(p);
  REQUIRE(f1);
  REQUIRE(f2);
  REQUIRE(f1->factors.size() == f2->factors.size());
  for (std::size_t i = 0; i < f1->factors.size(); ++i) {
    CHECK(f1->factors[i].first == f2->factors[i].first);
    CHECK(f1->factors[i].second == f2->factors[i].second);
  }
}
