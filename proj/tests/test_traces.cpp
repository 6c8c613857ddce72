#include "doctest.h"
#include "sptower/traces.hpp"

using namespace sptower;

namespace {

const GaussianRational I = GaussianRational::imaginary_unit();

RepContext ctx(int N, int n, Variant v = Variant::Plus) {
  RepContext c;
  c.N = N;
  c.n = n;
  c.variant = v;
  return c;
}

RatFunc bracket(int m) { return q_int(m); }

}  // namespace

TEST_CASE("weight matrix") {
  SymMatrix d = weight_matrix(3);
  CHECK(d.at(0, 0) == RatFunc::s().pow(-4));
  CHECK(d.at(1, 1).is_one());
  CHECK(d.at(2, 2) == RatFunc::s().pow(4));
  CHECK(d.trace() == bracket(3));
  for (int N : {3, 5, 7}) {
    SymMatrix dn = weight_matrix(N);
    CHECK(dn.trace() == bracket(N));
    CHECK(dn.map<RatFunc>([](const RatFunc& f, std::size_t, std::size_t) { return f.substitute(I); }) == dn);
  }
  CHECK(weight_matrix(3, 1).at(0, 0) == RatFunc::s().pow(-3));
  CHECK_THROWS(weight_matrix(4));
}

TEST_CASE("qtrace") {
  for (Variant v : {Variant::Plus, Variant::Minus}) {
    for (int N : {3, 5}) {
      for (int n = 1; n <= 3; ++n) {
        auto c = ctx(N, n, v);
        CHECK(qtrace(c, SymMatrix::identity(c.dim())) == bracket(N).pow(n));
        CHECK(qtrace(c, build_E_r(c, 1)) == bracket(N).pow(n - 1));
      }
      auto c2 = ctx(N, 2, v);
      CHECK(qtrace(c2, build_U(c2, 1)) == bracket(N) * bracket(N - 1));
    }
  }
  // q = 4 (s = 2), N = 3: [3][2] = (16+1+1/16)(4+1/4)
  auto c = ctx(3, 2);
  CHECK(qtrace(c, build_U(c, 1)).evaluate(2) == GaussianRational::fraction(273 * 17, 16 * 4));
  CHECK_THROWS(qtrace(c, SymMatrix::identity(3)));
}

TEST_CASE("qtrace of products and at points") {
  auto c = ctx(3, 2, Variant::Minus);
  SymMatrix a = build_U(c, 1) * build_E_r(c, 1), b = build_G(c, 1) + build_E_r(c, 2);
  CHECK(qtrace_product(c, a, b) == qtrace(c, a * b));
  const GaussianRational p = GaussianRational::fraction(3, 2);
  GaussMatrix ap = specialize(a, p), bp = specialize(b, p);
  CHECK(qtrace(c, ap, p) == qtrace(c, a).evaluate(p));
  CHECK(qtrace_product(c, ap, bp, p) == qtrace(c, a * b).evaluate(p));
}

TEST_CASE("partial trace") {
  for (Variant v : {Variant::Plus, Variant::Minus}) {
    auto big = ctx(3, 3, v);
    SymMatrix one = partial_qtrace(big, SymMatrix::identity(27));
    CHECK(one == SymMatrix::identity(9).scaled(bracket(3)));
    SymMatrix pu = partial_qtrace(big, build_U(big, 2));
    CHECK(pu == SymMatrix::identity(9).scaled(pu.at(0, 0)));
    const SymMatrix x = build_U(big, 1) * build_G(big, 2) + build_E_r(big, 2);
    CHECK(qtrace(ctx(3, 2, v), partial_qtrace(big, x)) == qtrace(big, x));
    const GaussianRational p = GaussianRational::fraction(5, 3);
    CHECK(partial_qtrace(big, specialize(x, p), p) == specialize(partial_qtrace(big, x), p));
  }
}

TEST_CASE("Markov functional values") {
  for (Variant v : {Variant::Plus, Variant::Minus}) {
    for (int N : {3, 5}) {
      auto c = ctx(N, 3, v);
      Representation rep(c);
      CHECK(markov_phi(rep, AlgebraExpr::constant(1)).is_one());
      for (int r = 1; r <= 3; ++r) CHECK(markov_phi(rep, AlgebraExpr::e(r)) == bracket(N).pow(-r));
      CHECK(markov_phi(rep, AlgebraExpr::u(1)) == bracket(N - 1) / bracket(N));
      CHECK(markov_phi(rep, AlgebraExpr::g(1)) == RatFunc::q().pow(N) / bracket(N));
    }
  }
}

TEST_CASE("block coefficients") {
  for (int N : {3, 5, 7}) {
    auto b = block_coefficients(ctx(N, 2));
    auto closed = closed_form_block_coefficients(Variant::Plus, N);
    CHECK(b.c == closed.c);
    CHECK(b.a == closed.a);
    CHECK((b.a - b.c).is_one());
    auto bm = block_coefficients(ctx(N, 2, Variant::Minus));
    auto cm = closed_form_block_coefficients(Variant::Minus, N);
    CHECK(bm.c == cm.c);
    CHECK(bm.a == cm.a);
  }
  auto b3 = block_coefficients(ctx(3, 2));
  CHECK(b3.c.evaluate_q(2) == GaussianRational::fraction(2, 7));
  CHECK(b3.a.evaluate_q(2) == GaussianRational::fraction(9, 7));
  CHECK_THROWS(block_coefficients(ctx(3, 3)));
}

TEST_CASE("trace reports") {
  auto c = ctx(5, 2);
  auto r = trace_report(c, AlgebraExpr::e(2), bracket(5).pow(-2));
  CHECK(r.match);
  CHECK(r.to_json().find("\"match\":true") != std::string::npos);
  auto bad = trace_report(c, AlgebraExpr::u(1), RatFunc(1));
  CHECK_FALSE(bad.match);
  std::string csv = trace_reports_csv({r, bad});
  CHECK(csv.rfind("expression,value,expected,match\n", 0) == 0);
  CHECK(csv.find("false") != std::string::npos);
}
