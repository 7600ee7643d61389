#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ppos/exact.hpp"
#include "ppos/series.hpp"

using namespace ppos;

TEST_CASE("integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(12) == 479001600);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(6, 0) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(pow_int(3, 4) == 81);
  CHECK(pow_int(Int(-2), 5) == -32);
  CHECK(pow_int(7, 0) == 1);
  CHECK(to_integer(Rat(14, 7)) == 2);
  CHECK_THROWS_AS(to_integer(Rat(1, 2)), NonIntegerCoefficient);
}

TEST_CASE("polynomial construction and normalization") {
  IntPolynomial p({1, 2, 0});  // trailing zero dropped
  CHECK(p.degree() == 1);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(1) == 2);
  CHECK(p.coeff(5) == 0);
  CHECK(IntPolynomial::zero().is_zero());
  CHECK(IntPolynomial::zero().degree() == -1);
  CHECK(IntPolynomial::constant(7).degree() == 0);
  CHECK(IntPolynomial::x().str() == "x");
  CHECK(IntPolynomial::x_minus(3).str() == "x-3");
}

TEST_CASE("polynomial arithmetic") {
  IntPolynomial a = IntPolynomial::x_minus(1);
  IntPolynomial b = IntPolynomial::x_minus(2);
  IntPolynomial p = a * b;
  CHECK(p == IntPolynomial({2, -3, 1}));
  CHECK(p + IntPolynomial({0, 3}) == IntPolynomial({2, 0, 1}));
  CHECK(p - p == IntPolynomial::zero());
  CHECK((-p).coeff(2) == -1);
  CHECK((p * Int(3)).coeff(0) == 6);
  CHECK(a.pow(3) == IntPolynomial({-1, 3, -3, 1}));
  CHECK(a.pow(0) == IntPolynomial::constant(1));
  CHECK(p.eval(5) == 12);
  CHECK(IntPolynomial::zero().eval(42) == 0);
}

TEST_CASE("exact division") {
  IntPolynomial p = IntPolynomial::x_minus(1) * IntPolynomial::x_minus(2);
  CHECK(p.exact_div(IntPolynomial::x_minus(1)) == IntPolynomial::x_minus(2));
  CHECK(p.exact_div(p) == IntPolynomial::constant(1));
  CHECK_THROWS_AS(IntPolynomial({1, 0, 1}).exact_div(IntPolynomial::x_minus(1)), NotDivisible);
  // leading coefficient must divide
  CHECK_THROWS_AS(IntPolynomial({0, 1}).exact_div(IntPolynomial({0, 2})), NotDivisible);
}

TEST_CASE("polynomial strings") {
  CHECK(IntPolynomial::zero().str() == "0");
  CHECK(IntPolynomial::constant(-5).str() == "-5");
  CHECK(IntPolynomial({9, -6, 1}).str() == "x^2-6x+9");
  CHECK(IntPolynomial({1, -1}).str() == "-x+1");
  CHECK(IntPolynomial({0, 0, 2}).str() == "2x^2");
}

TEST_CASE("polynomial json round trip") {
  IntPolynomial p({9, -6, 1});
  auto j = p.to_json();
  CHECK(j.is_array());
  CHECK(j[0] == "9");
  CHECK(j[1] == "-6");
  CHECK(j[2] == "1");
  CHECK(IntPolynomial::from_json(j) == p);
  CHECK_THROWS_AS(IntPolynomial::from_json(nlohmann::json{{"a", 1}}), ParseError);
  CHECK_THROWS_AS(IntPolynomial::from_json(nlohmann::json::array({1, 2})), ParseError);
}

TEST_CASE("series basics") {
  RationalSeries u({"u"}, {8});
  u.add_term({1}, 1);
  RationalSeries e = series_exp(u);
  for (int k = 0; k <= 8; ++k) CHECK(e.coeff({k}) == Rat(1) / Rat(factorial(k)));

  RationalSeries c({"u"}, {8});
  c.add_term({0}, 1);
  CHECK_THROWS_AS(series_exp(c), NonzeroConstantTerm);

  RationalSeries f({"u"}, {8});
  f.add_term({1}, 1);
  f.add_term({2}, 1);
  RationalSeries g({"u"}, {8});
  g.add_term({1}, 2);
  RationalSeries fg = series_compose(f, g);
  CHECK(fg.coeff({1}) == 2);
  CHECK(fg.coeff({2}) == 4);
  CHECK_THROWS_AS(series_compose(f, c), NonzeroConstantTerm);
}

TEST_CASE("series reversion") {
  // u * exp(u): inverse coefficients are (-n)^(n-1) / n!
  RationalSeries f({"u"}, {7});
  for (int k = 1; k <= 7; ++k) f.add_term({k}, Rat(1) / Rat(factorial(k - 1)));
  RationalSeries r = series_reversion(f);
  for (int n = 1; n <= 7; ++n)
    CHECK(r.coeff({n}) == Rat(pow_int(Int(-n), n - 1)) / Rat(factorial(n)));

  // composing back gives the identity
  RationalSeries id = series_compose(f, r);
  for (int k = 0; k <= 7; ++k) CHECK(id.coeff({k}) == (k == 1 ? Rat(1) : Rat(0)));
  RationalSeries id2 = series_compose(r, f);
  for (int k = 0; k <= 7; ++k) CHECK(id2.coeff({k}) == (k == 1 ? Rat(1) : Rat(0)));

  RationalSeries bad({"u"}, {5});
  bad.add_term({1}, 2);
  CHECK_THROWS_AS(series_reversion(bad), NotReversible);
}

TEST_CASE("series in two variables") {
  RationalSeries s({"x", "u"}, {2, 2});
  s.add_term({0, 0}, 1);
  s.add_term({1, 1}, 1);
  RationalSeries sq = s * s;
  CHECK(sq.coeff({0, 0}) == 1);
  CHECK(sq.coeff({1, 1}) == 2);
  CHECK(sq.coeff({2, 2}) == 1);
  // truncation drops exponents above the per-variable order
  RationalSeries cubed = sq * s;
  CHECK(cubed.coeff({2, 2}) == 3);
  CHECK(cubed.term_count() == 3);

  RationalSeries d({"x", "u"}, {2, 2});
  d.add_term({1, 1}, 5);
  d.add_term({1, 2}, 7);
  RationalSeries q = d.div_by_var("u");
  CHECK(q.coeff({1, 0}) == 5);
  CHECK(q.coeff({1, 1}) == 7);
  CHECK_THROWS_AS(s.div_by_var("u"), NotDivisible);
}
