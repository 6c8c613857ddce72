#include "doctest.h"
#include "sptower/rep.hpp"

using namespace sptower;

namespace {

const GaussianRational I = GaussianRational::imaginary_unit();

RepContext ctx(int N, int n, Variant v) {
  RepContext c;
  c.N = N;
  c.n = n;
  c.variant = v;
  return c;
}

}  // namespace

TEST_CASE("U on basis vectors") {
  auto c = ctx(3, 2, Variant::Plus);
  SymMatrix u = build_U(c, 1);
  // column of v1⊗v2 (index 1): q^-1 v1⊗v2 + v2⊗v1 (index 3)
  CHECK(u.at(1, 1) == RatFunc::q().inverse());
  CHECK(u.at(3, 1) == RatFunc(1));
  CHECK(u.at(1, 3) == RatFunc(1));
  CHECK(u.at(3, 3) == RatFunc::q());
  for (std::size_t i = 0; i < 9; ++i) CHECK(u.at(i, 0).is_zero());
  CHECK(u == u.transpose());

  auto m = specialize(build_U(ctx(3, 2, Variant::Minus), 1), 1);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      const std::size_t x = a * 3 + b, y = b * 3 + a;
      if (a == b) {
        CHECK(m.at(x, x).is_zero());
      } else {
        CHECK(m.at(x, x) == GaussianRational(1));
        CHECK(m.at(y, x) == GaussianRational(-1));
      }
    }
  }
  CHECK_THROWS_AS(build_U(c, 2), std::invalid_argument);
}

TEST_CASE("Hecke relations") {
  for (Variant v : {Variant::Plus, Variant::Minus}) {
    for (int N : {3, 5}) {
      auto c = ctx(N, 3, v);
      SymMatrix u1 = build_U(c, 1), u2 = build_U(c, 2);
      CHECK(u1 * u1 == u1.scaled(q_int(2)));
      CHECK(u1 * u2 * u1 - u1 == u2 * u1 * u2 - u2);
    }
    auto c4 = ctx(3, 4, v);
    SymMatrix u1 = build_U(c4, 1), u3 = build_U(c4, 3);
    CHECK(u1 * u3 == u3 * u1);
  }
}

TEST_CASE("E matrix") {
  auto c = ctx(3, 1, Variant::Plus);
  SymMatrix e = local_E(c);
  CHECK(e.at(0, 0) == RatFunc::s().pow(2) / q_number(QNumberKind::Plus, 3));
  CHECK(e.trace().is_one());
  CHECK(e * e == e);
  CHECK(e == e.transpose());
  for (Variant v : {Variant::Plus, Variant::Minus}) {
    auto c2 = ctx(5, 3, v);
    SymMatrix e2 = build_E_r(c2, 2);
    CHECK(e2 * e2 == e2);
    CHECK(build_E_r(c2, 0) == SymMatrix::identity(125));
  }
  // minus at s = 1: entries i^{2k+2-i-j} / [N]_+(i)
  auto cm = ctx(3, 1, Variant::Minus);
  GaussMatrix em = specialize(local_E(cm), 1);
  const GaussianRational norm = q_number(QNumberKind::Plus, 3).evaluate(I);
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) CHECK(em.at(i - 1, j - 1) == I.pow(4 - i - j) / norm);
  }
}

TEST_CASE("factored E products agree with plain ones") {
  for (Variant v : {Variant::Plus, Variant::Minus}) {
    const RepContext c = ctx(3, 3, v);
    const SymMatrix e = local_E(c);
    CHECK(build_E_r(c, 2) == embed(c, kron(e, e), 1, 2));
    CHECK(build_E_r(c, 3) == kron(kron(e, e), e));
    const SymMatrix x = build_U(c, 2) * build_U(c, 1) + build_G(c, 2);
    for (int r = 1; r <= 3; ++r) {
      const SymMatrix er = build_E_r(c, r);
      CHECK(e_sandwich(c, r, x) == er * x * er);
      CHECK(e_right(c, r, x) == x * er);
      CHECK(e_left(c, r, x) == er * x);
    }
  }
}

TEST_CASE("relation (b) for n = 2") {
  for (Variant v : {Variant::Plus, Variant::Minus}) {
    for (int N : {3, 5, 7}) {
      auto c = ctx(N, 2, v);
      SymMatrix e1 = build_E_r(c, 1), e2 = build_E_r(c, 2), u = build_U(c, 1);
      SymMatrix eue = e1 * u * e1;
      RatFunc beta = relation_b_constant(c);
      SymMatrix rhs = v == Variant::Plus ? eue - e1.scaled(beta) : e1.scaled(beta) - eue;
      CHECK(e2 == rhs);
    }
  }
}

TEST_CASE("scaled generators") {
  auto cm = ctx(3, 3, Variant::Minus);
  SymMatrix zl = build_scaled(cm, Side::Left, 1, 2);
  CHECK_NOTHROW(specialize(zl, 1));
  for (std::size_t i = 0; i < zl.rows(); ++i) {
    for (const auto& [j, f] : zl.row(i)) CHECK(!f.den().evaluate(1).is_zero());
  }
  CHECK(build_scaled(cm, Side::Right, 1, 2) == zl.transpose());
  auto cp = ctx(3, 3, Variant::Plus);
  CHECK(build_scaled(cp, Side::Left, 1, 2).scaled(scaled_divisor(Variant::Plus)) ==
        build_U(cp, 1) * build_E_r(cp, 2));
  CHECK_THROWS_AS(build_scaled(ctx(3, 2, Variant::Minus), Side::Left, 1, 2), std::invalid_argument);
}

TEST_CASE("u12, u21 and P") {
  for (Variant v : {Variant::Plus, Variant::Minus}) {
    for (int N : {3, 5}) {
      auto c = ctx(N, 2, v);
      U12Family f = build_u12_u21_P(c);
      CHECK(f.u12 * f.u21 == f.e2.scaled(q_int(N) - RatFunc(1)));
      CHECK((f.u21 * f.u12 * f.e2).is_zero());
      CHECK((f.e2 * f.u21 * f.u12).is_zero());
      CHECK(f.P * f.P == f.P.scaled(q_int(N)));
    }
  }
}

TEST_CASE("skew form") {
  for (int N : {3, 5, 7}) {
    SymMatrix a = build_skew_A(N);
    CHECK(a == -a.transpose());
    for (const auto& x : a.apply(v0_vector(N))) CHECK(x.is_zero());
  }
}

TEST_CASE("expression evaluation") {
  auto c = ctx(3, 3, Variant::Plus);
  Representation rep(c);
  CHECK(rep.evaluate(AlgebraExpr::parse("1")) == SymMatrix::identity(27));
  CHECK(rep.evaluate(AlgebraExpr::parse("e*e")) == rep.evaluate(AlgebraExpr::parse("e")));
  CHECK(rep.evaluate(AlgebraExpr::parse("u1*u2*u1-u1")) == rep.evaluate(AlgebraExpr::parse("u2*u1*u2-u2")));
  CHECK(rep.evaluate(AlgebraExpr::parse("g1")) == rep.evaluate(AlgebraExpr::parse("q-u1")));
  CHECK_THROWS_AS(rep.evaluate(AlgebraExpr::parse("u3")), std::invalid_argument);
}

TEST_CASE("specialization") {
  CHECK(specialize(SymMatrix::identity(5), GaussianRational(7)) == GaussMatrix::identity(5));
  SymMatrix m(2, 2);
  m.set(1, 0, RatFunc(1) / (RatFunc::s() - RatFunc(1)));
  CHECK_THROWS_WITH_AS(specialize(m, 1), doctest::Contains("entry (1, 0)"), std::domain_error);
}

TEST_CASE("reversal conjugation") {
  for (Variant v : {Variant::Plus, Variant::Minus}) {
    auto c = ctx(3, 3, v);
    SymMatrix w0 = reversal_matrix(c);
    CHECK(w0 * w0 == SymMatrix::identity(27));
    for (int i = 1; i < 3; ++i) {
      SymMatrix lhs = w0 * build_U(c, i) * w0;
      SymMatrix rhs = build_U(c, 3 - i).map<RatFunc>([](const RatFunc& f, std::size_t, std::size_t) {
        return f.inverted();
      });
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("export formats") {
  auto c = ctx(3, 1, Variant::Plus);
  std::string text = to_coordinate_list(SymMatrix::identity(2));
  CHECK(text == "(0, 0, 1)\n(1, 1, 1)\n");
  CHECK(to_json(SymMatrix::identity(1)) == "{\"rows\":1,\"cols\":1,\"entries\":[[0,0,\"1\"]]}");
}
