#include "doctest.h"
#include "sptower/verify.hpp"

using namespace sptower;

namespace {

RepContext ctx(int N, int n, Variant v = Variant::Plus) {
  RepContext c;
  c.N = N;
  c.n = n;
  c.variant = v;
  return c;
}

std::string failures(const SuiteReport& r) {
  std::string out;
  for (const auto& c : r.claims) {
    if (!c.pass) out += c.id + ": " + c.witness + "\n";
  }
  return out;
}

}  // namespace

TEST_CASE("relations and Markov suites at N = 3") {
  for (Variant v : {Variant::Plus, Variant::Minus}) {
    for (int n : {2, 3}) {
      auto rel = relations_suite(ctx(3, n, v));
      CHECK_MESSAGE(rel.passed(), failures(rel));
    }
    auto mk = markov_suite(ctx(3, 2, v));
    CHECK_MESSAGE(mk.passed(), failures(mk));
  }
}

TEST_CASE("sampled Markov suite") {
  VerifyOptions o;
  o.points = 1;
  o.pairs = 20;
  o.jobs = 2;
  auto mk = markov_suite(ctx(3, 3, Variant::Minus), o);
  CHECK_MESSAGE(mk.passed(), failures(mk));
  CHECK(mk.to_json().find("\"seed\": 42") != std::string::npos);
}

TEST_CASE("broken beta is caught") {
  auto c = ctx(3, 3);
  c.perturbation.beta = relation_b_constant(c) + RatFunc(1);
  auto rel = relations_suite(c);
  REQUIRE_FALSE(rel.passed());
  CHECK(rel.first_failure()->id == "relation_b.1");
  CHECK(rel.first_failure()->witness.rfind("entry (", 0) == 0);
}

TEST_CASE("rank certificates") {
  for (RankStrategy s : {RankStrategy::Symbolic, RankStrategy::Evaluated, RankStrategy::Modular}) {
    auto cert = basis_rank(ctx(5, 2, Variant::Minus), s);
    CHECK(cert.family_size == 10);
    CHECK(cert.rank == 10);
    CHECK(cert.certified);
    // N <= 2n: end_dim(2, 3) = 9 forces a dependency
    auto low = basis_rank(ctx(3, 2), s);
    CHECK(low.rank == 9);
    CHECK_FALSE(low.certified);
  }
  auto big = basis_rank(ctx(3, 3), RankStrategy::Symbolic);
  CHECK_FALSE(big.certified);
  CHECK(big.note.find("budget") != std::string::npos);
  CHECK(parse_strategy("modular") == RankStrategy::Modular);
  CHECK_THROWS(parse_strategy("guess"));
}

TEST_CASE("classical limit, dimensions, variants, compression") {
  auto cl = classical_limit_suite(3, 2);
  CHECK_MESSAGE(cl.passed(), failures(cl));
  CHECK(classical_closure(3, 2).rank == 9);
  auto dims = dimension_suite(6);
  CHECK_MESSAGE(dims.passed(), failures(dims));
  auto iso = variant_iso_suite(3, 3);
  CHECK_MESSAGE(iso.passed(), failures(iso));
  for (Variant v : {Variant::Plus, Variant::Minus}) {
    auto cmp = compression_suite(ctx(3, 3, v), 1);
    CHECK_MESSAGE(cmp.passed(), failures(cmp));
  }
}

TEST_CASE("parallel_map keeps order and rethrows") {
  auto v = parallel_map<int>(4, 50, [](std::size_t i) { return static_cast<int>(i * i); });
  CHECK(v[7] == 49);
  CHECK_THROWS(parallel_map<int>(3, 10, [](std::size_t i) -> int {
    if (i == 5) throw std::runtime_error("x");
    return 0;
  }));
}
