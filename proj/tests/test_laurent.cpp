#include <doctest.h>

#include "linkgate/laurent.hpp"

using namespace linkgate;

TEST_CASE("parse and print round-trip") {
  LaurentPoly p = parse_poly("3*t1^2*t2^-1 - 1", 2);
  CHECK(p.num_vars() == 2);
  CHECK(p.coeff({2, -1}) == 3);
  CHECK(p.coeff({0, 0}) == -1);
  CHECK(parse_poly(p.to_string(), 2) == p);

  CHECK(parse_poly("t^2 - t + 1") == parse_poly("t1^2 - t1 + 1", 1));
  CHECK(parse_poly("0", 3).is_zero());
}

TEST_CASE("ring arithmetic") {
  LaurentPoly t = LaurentPoly::monomial(1, 0);
  LaurentPoly tinv = LaurentPoly::monomial(1, 0, -1);
  CHECK(t * tinv == LaurentPoly::constant(1, 1));
  LaurentPoly p = parse_poly("t - 1", 1);
  CHECK(p * p == parse_poly("t^2 - 2*t + 1", 1));
  CHECK(p.pow(3) == p * p * p);
  CHECK((p - p).is_zero());
  CHECK((-p) + p == LaurentPoly(1) - LaurentPoly(1));
}

TEST_CASE("involution") {
  LaurentPoly p = parse_poly("2*t1*t2^-3 + 5", 2);
  CHECK(involve(p) == parse_poly("2*t1^-1*t2^3 + 5", 2));
  CHECK(involve(involve(p)) == p);
}

TEST_CASE("unit-normal form and doteq") {
  LaurentPoly p = parse_poly("t^2 - t", 1);
  UnitNormalForm u = normalize(p);
  CHECK(u.poly == parse_poly("t - 1", 1));
  CHECK(u.shift == std::vector<int>{1});
  CHECK(u.sign == 1);

  CHECK(doteq(parse_poly("t - 1", 1), parse_poly("1 - t^-1", 1)));
  CHECK(doteq(parse_poly("t - 1", 1), parse_poly("-t^3 + t^2", 1)));
  CHECK_FALSE(doteq(parse_poly("t - 1", 1), parse_poly("t + 1", 1)));
  CHECK(doteq(LaurentPoly(2), LaurentPoly(2)));  // 0 ~ 0
  CHECK_FALSE(doteq(LaurentPoly(1), parse_poly("1", 1)));
}

TEST_CASE("exact division") {
  LaurentPoly p = parse_poly("t1^2*t2 - t2", 2);
  LaurentPoly q = parse_poly("t1 - 1", 2);
  auto d = try_divide(p, q);
  REQUIRE(d);
  CHECK(*d * q == p);
  CHECK_FALSE(try_divide(parse_poly("t1 + 1", 2), parse_poly("t2 + 2", 2)));
  // Division by a unit always succeeds.
  CHECK(try_divide(q, parse_poly("t2^-1", 2)));
}

TEST_CASE("gcd") {
  LaurentPoly a = parse_poly("t^2 - 1", 1);
  LaurentPoly b = parse_poly("t^2 - 2*t + 1", 1);
  CHECK(laurent_gcd(a, b) == parse_poly("t - 1", 1));
  CHECK(doteq(laurent_gcd(a, LaurentPoly(1)), a));

  LaurentPoly f = parse_poly("t1 - t2", 2);
  LaurentPoly g1 = f * parse_poly("t1 + 1", 2);
  LaurentPoly g2 = f * parse_poly("t2 + 3", 2);
  CHECK(doteq(laurent_gcd(g1, g2), f));
  CHECK(laurent_gcd(LaurentPoly(1), LaurentPoly(1)).is_zero());
}

TEST_CASE("evaluation and derivative") {
  LaurentPoly p = parse_poly("t1^2*t2^-1 + t1", 2);
  CHECK(evaluate(p, {Rat(2), Rat(4)}) == Rat(3));
  CHECK(derivative(parse_poly("t^3 - 2*t", 1), 0) ==
        parse_poly("3*t^2 - 2", 1));
}

TEST_CASE("content and leading term") {
  LaurentPoly p = parse_poly("6*t1^2 - 4*t2", 2);
  CHECK(p.content() == 2);
  auto [e, c] = p.leading_term();
  CHECK(e == LaurentPoly::Exps{2, 0});
  CHECK(c == 6);
}
