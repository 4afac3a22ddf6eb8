#include <doctest.h>

#include <random>

#include "hecke/scalars.hpp"

using namespace hecke;

namespace {

LaurentPolynomial random_poly(std::mt19937& rng, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms), expo(-3, 4), coef(-4, 4), den(1, 3);
  std::vector<LaurentPolynomial::Term> t;
  for (int i = nterms(rng); i > 0; --i) {
    Rational c(coef(rng), den(rng));
    c.canonicalize();
    t.emplace_back(expo(rng), c);
  }
  return LaurentPolynomial::from_terms(std::move(t));
}

RationalFunction random_rf(std::mt19937& rng) {
  LaurentPolynomial d;
  while (d.is_zero()) d = random_poly(rng, 3);
  return RationalFunction(random_poly(rng, 3), d);
}

RationalFunction q(int k) { return q_pow(k); }

}  // namespace

TEST_CASE("exact cancellation and basic products") {
  CHECK((q(1) - q(-1)) / (q(2) - 1) == q(-1));
  CHECK((q(2) - 1) * (q(2) + 1) == q(4) - 1);
  RationalFunction x = (q(3) + 2) / (q(1) - 5);
  CHECK(x + 0 == x);
  CHECK_THROWS_AS(x / RationalFunction(), DivisionByZero);
}

TEST_CASE("canonical form: monic denominator with lowest exponent zero") {
  RationalFunction f(LaurentPolynomial(Rational(3), 2), LaurentPolynomial(Rational(6), 5) + LaurentPolynomial(Rational(2), 3));
  // 3q^2 / (6q^5 + 2q^3) = (1/2) q^-1 / (q^2 + 1/3)
  CHECK(f.den().low() == 0);
  CHECK(f.den().leading() == 1);
  CHECK(f.num() == LaurentPolynomial(Rational(1, 2), -1));
  RationalFunction g(f.num(), f.den());
  CHECK(g == f);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 60; ++trial) {
    RationalFunction a = random_rf(rng), b = random_rf(rng), c = random_rf(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == RationalFunction());
    if (!a.is_zero()) CHECK(a * a.inverse() == RationalFunction(1));
    CHECK(RationalFunction(a.num(), a.den()) == a);
  }
}

TEST_CASE("bar involution") {
  CHECK(bar(q(2) + q(-1)) == q(-2) + q(1));
  CHECK(bar(RationalFunction(1)) == RationalFunction(1));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    RationalFunction a = random_rf(rng), b = random_rf(rng);
    CHECK(bar(bar(a)) == a);
    CHECK(bar(a * b) == bar(a) * bar(b));
    CHECK(bar(a + b) == bar(a) + bar(b));
  }
}

TEST_CASE("evaluation at eps = 0") {
  EpsilonFunction e = eps();
  EpsilonFunction diff = EpsilonFunction(RationalFunction(5) - RationalFunction(2)) * e;
  CHECK(eval_eps_zero(diff / diff) == RationalFunction(1));
  CHECK(eval_eps_zero(EpsilonFunction(q(2)) + EpsilonFunction(RationalFunction(3)) * e) == q(2));
  CHECK_THROWS_AS(eval_eps_zero(e.inverse()), NotRegular);

  // a simple pole times a simple zero, in either association order
  EpsilonFunction pole = (EpsilonFunction(q(1)) + e) / (e * EpsilonFunction(q(2) - 1));
  EpsilonFunction zero = e * EpsilonFunction(q(3)) / (EpsilonFunction(RationalFunction(1)) - e);
  EpsilonFunction other = EpsilonFunction(q(-1)) + e * e;
  CHECK(eval_eps_zero((pole * zero) * other) == eval_eps_zero(pole * (zero * other)));
  CHECK(eval_eps_zero(pole * zero) == q(4) / (q(2) - 1));
}

TEST_CASE("specialization at numeric q") {
  CHECK(specialize_q(1 + q(-2), Rational(1)) == 2);
  CHECK(specialize_q(q(1), Rational(5)) == 5);
  CHECK_THROWS_AS(specialize_q(RationalFunction(1) / (q(1) - 1), Rational(1)), NotRegular);
  CHECK(specialize_q((q(4) - 1) / (q(2) - 1), Rational(1)) == 2);
}

TEST_CASE("text and parsing") {
  CHECK(to_text(q(-1) + 1) == "1*q^-1 + 1*q^0 / 1*q^0");
  CHECK(to_pretty((q(2) + 1) / (q(2) - 1)) == "(q^2 + 1)/(q^2 - 1)");
  CHECK(parse_monomial("5") == RationalFunction(5));
  CHECK(parse_monomial("-1/2") == RationalFunction(Rational(-1, 2)));
  CHECK(parse_monomial("q^-2") == q(-2));
  CHECK(parse_monomial("3*q^2") == q(2) * 3);
  CHECK(parse_monomial("-q") == -q(1));
  CHECK_THROWS_AS(parse_monomial("x"), InvalidInput);
}
