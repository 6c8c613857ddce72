#include <random>

#include "doctest.h"
#include "sptower/exact.hpp"

using namespace sptower;

namespace {

const RatFunc s = RatFunc::s();
const GaussianRational I = GaussianRational::imaginary_unit();

RatFunc random_laurent(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<int> low(-3, 2);
  std::vector<GaussianRational> c;
  int m = len(rng);
  for (int j = 0; j < m; ++j) c.emplace_back(mpq_class(coef(rng)), mpq_class(coef(rng) % 2));
  return RatFunc(HalfLaurent::from_coeffs(low(rng), c));
}

RatFunc random_ratfunc(std::mt19937_64& rng) {
  RatFunc d;
  while (d.is_zero()) d = random_laurent(rng);
  return random_laurent(rng) / d;
}

}  // namespace

TEST_CASE("gaussian arithmetic") {
  GaussianRational a(mpq_class(1, 2), mpq_class(-3));
  CHECK(a.str() == "(1/2-3*i)");
  CHECK((a * a.inverse()).is_one());
  CHECK((I * I) == GaussianRational(-1));
  CHECK(I.pow(-1) == -I);
  CHECK_THROWS_AS(GaussianRational().inverse(), std::domain_error);
  CHECK(GaussianRational::fraction(6, -4).str() == "-3/2");
}

TEST_CASE("normalize cancels common factors") {
  RatFunc r = normalize(HalfLaurent::monomial(1, 4) - HalfLaurent(1), HalfLaurent::monomial(1, 3) - HalfLaurent::s());
  CHECK(r == s + s.inverse());
  CHECK(r.is_laurent());

  RatFunc r2 = normalize(HalfLaurent::monomial(1, 2) - HalfLaurent::monomial(1, -2),
                         HalfLaurent::s() - HalfLaurent::monomial(1, -1));
  CHECK(r2.str() == "s+s^-1");

  RatFunc plus3 = q_number(QNumberKind::Plus, 3);
  CHECK(plus3 * (s - s.inverse()) == s.pow(3) - s.pow(-3));

  CHECK_THROWS_WITH_AS(normalize(HalfLaurent(1), HalfLaurent()), "division by zero polynomial", std::domain_error);
}

TEST_CASE("normalize is invariant under common multipliers") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 40; ++t) {
    RatFunc a = random_laurent(rng);
    RatFunc b;
    while (b.is_zero()) b = random_laurent(rng);
    RatFunc c;
    while (c.is_zero()) c = random_laurent(rng);
    CHECK(normalize(a.num() * c.num(), b.num() * c.num()) == normalize(a.num(), b.num()));
  }
}

TEST_CASE("evaluation") {
  CHECK(q_int(3).evaluate(2) == GaussianRational(mpq_class(273, 16)));
  CHECK(q_number(QNumberKind::Plus, 3).evaluate(I) == GaussianRational(-1));
  RatFunc pole = RatFunc(1) / (s - RatFunc(1));
  CHECK_THROWS_WITH_AS(pole.evaluate(1), "pole at evaluation point", std::domain_error);
  CHECK_THROWS_AS(s.evaluate(0), std::domain_error);
  CHECK(q_int(3).evaluate_q(4) == GaussianRational(mpq_class(273, 16)));
  CHECK_THROWS_AS(s.evaluate_q(4), std::invalid_argument);
}

TEST_CASE("evaluation agrees with unreduced representatives") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    RatFunc a = random_laurent(rng);
    RatFunc b;
    while (b.is_zero()) b = random_laurent(rng);
    RatFunc c;
    while (c.is_zero()) c = random_laurent(rng);
    HalfLaurent num = a.num() * c.num();
    HalfLaurent den = b.num() * c.num();
    GaussianRational pt(mpq_class(t + 2, 3), mpq_class(1, 5));
    GaussianRational d = den.evaluate(pt);
    if (d.is_zero()) continue;
    CHECK(normalize(num, den).evaluate(pt) == num.evaluate(pt) / d);
  }
}

TEST_CASE("substitution") {
  RatFunc f = s.pow(2) + s.pow(-2);
  CHECK(f.substitute(I) == -f);
  CHECK(q_number(QNumberKind::Plus, 3).substitute(I) == -s.pow(2) + RatFunc(1) - s.pow(-2));
  CHECK(q_int(3).substitute(I) == q_int(3));

  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    RatFunc g = random_ratfunc(rng);
    CHECK(g.substitute(I).substitute(I) == g.substitute(-1));
    RatFunc h = random_ratfunc(rng);
    CHECK((g * h).substitute(I) == g.substitute(I) * h.substitute(I));
    CHECK((g + h).substitute(-I) == g.substitute(-I) + h.substitute(-I));
    if (g.depends_only_on_q()) CHECK(g.substitute(-1) == g);
    CHECK(g.inverted().inverted() == g);
  }
  RatFunc beta_minus = (s.pow(3) + s.pow(-3)) / (s.pow(5) + s.pow(-5));
  CHECK(beta_minus.substitute(-1) == beta_minus);
}

TEST_CASE("q-numbers") {
  CHECK(q_int(2) == s.pow(2) + s.pow(-2));
  CHECK(q_number(QNumberKind::Plus, 5) == s.pow(4) + s.pow(2) + RatFunc(1) + s.pow(-2) + s.pow(-4));
  CHECK(q_number(QNumberKind::Minus, 3) == s.pow(2) - RatFunc(1) + s.pow(-2));
  RatFunc half = q_number(QNumberKind::HalfInteger, 1);
  CHECK(half == (s.pow(2) + RatFunc(1) + s.pow(-2)) / (s + s.inverse()));
  CHECK(!half.is_laurent());
  CHECK_THROWS_AS(q_int(0), std::invalid_argument);
  CHECK_THROWS_AS(q_number(QNumberKind::Minus, 4), std::invalid_argument);
  // [4]/[2] = q^2 + q^-2
  CHECK(q_int(4) / q_int(2) == s.pow(4) + s.pow(-4));
}

TEST_CASE("field axioms on random inputs") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 60; ++t) {
    RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("RatFuncSum matches direct accumulation") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 20; ++t) {
    RatFuncSum acc;
    RatFunc direct;
    for (int j = 0; j < 5; ++j) {
      RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng);
      acc.add_product(a, b);
      direct += a * b;
    }
    CHECK(acc.result() == direct);
  }
}

TEST_CASE("text round trip") {
  CHECK(RatFunc::parse("(s^2+1+s^-2)/(s+s^-1)") == q_number(QNumberKind::HalfInteger, 1));
  CHECK(RatFunc::parse("[3]") == q_int(3));
  CHECK(RatFunc::parse("q^2 - 3/2*i*s") == s.pow(4) - RatFunc(GaussianRational(0, mpq_class(3, 2))) * s);
  CHECK(RatFunc(0).str() == "0");
  CHECK_THROWS_AS(RatFunc::parse("s+"), std::invalid_argument);
  CHECK_THROWS_AS(RatFunc::parse("x"), std::invalid_argument);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    RatFunc f = random_ratfunc(rng);
    CHECK(RatFunc::parse(f.str()) == f);
  }
}
