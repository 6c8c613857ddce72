#include "doctest.h"
#include "sptower/combin.hpp"

using namespace sptower;

namespace {

YoungDiagram D(std::vector<int> rows) { return YoungDiagram(std::move(rows)); }

}  // namespace

TEST_CASE("fusion rule") {
  CHECK(fusion_step(D({}), std::nullopt) == std::vector<YoungDiagram>{D({}), D({1})});
  CHECK(fusion_step(D({1}), 1) == std::vector<YoungDiagram>{D({1}), D({}), D({2})});
  CHECK(fusion_step(D({1}), std::nullopt) == std::vector<YoungDiagram>{D({1}), D({}), D({2}), D({1, 1})});
  CHECK(fusion_step(D({2, 2}), std::nullopt) ==
        std::vector<YoungDiagram>{D({2, 2}), D({2, 1}), D({3, 2}), D({2, 2, 1})});
  CHECK_THROWS_AS(D({1, 2}), std::invalid_argument);
}

TEST_CASE("diagram order and text") {
  CHECK(D({}) < D({1}));
  CHECK(D({2}) < D({1, 1}));
  CHECK(D({3}) < D({2, 1}));
  CHECK(YoungDiagram::parse("[2,1]") == D({2, 1}));
  CHECK(YoungDiagram::parse("∅") == D({}));
  CHECK(D({2, 1}).str() == "[2,1]");
}

TEST_CASE("Bratteli levels") {
  auto g = bratteli(5, 3);
  CHECK(g.multiplicity(2, D({})) == 2);
  CHECK(g.multiplicity(2, D({1})) == 2);
  CHECK(g.multiplicity(2, D({2})) == 1);
  CHECK(g.multiplicity(2, D({1, 1})) == 1);
  CHECK(g.levels[2].size() == 4);
  CHECK(g.multiplicity(3, D({})) == 4);
  CHECK(g.multiplicity(3, D({1})) == 6);
  CHECK(bratteli(3, 3).multiplicity(3, D({1})) == 5);
  CHECK_THROWS_AS(bratteli(4, 2), std::invalid_argument);
  CHECK(g.level_csv(2) == "diagram,multiplicity\n\"∅\",2\n\"[1]\",2\n\"[2]\",1\n\"[1,1]\",1\n");
}

TEST_CASE("hook dimensions and involution numbers") {
  CHECK(hook_dim(D({4})) == 1);
  CHECK(hook_dim(D({2, 1})) == 2);
  CHECK(hook_dim(D({2, 2})) == 2);
  CHECK(hook_dim(D({3, 2, 1})) == 16);
  const std::uint64_t h[] = {1, 1, 2, 4, 10, 26, 76};
  for (int r = 0; r < 7; ++r) CHECK(involution_number(r) == h[r]);
  CHECK(partitions_of(4).size() == 5);
  CHECK(partitions_of(0).size() == 1);
}

TEST_CASE("multiplicities and dimensions") {
  CHECK(multiplicity(3, D({}), 7) == 4);
  CHECK(multiplicity(3, D({1}), 3) == 5);
  CHECK(multiplicity(4, D({2}), 9) == 12);
  CHECK(multiplicity_by_paths(4, D({2}), 9) == 12);
  CHECK(end_dim(2, 5) == 10);
  CHECK(end_dim(3, 7) == 76);
  CHECK(end_dim(3, 3) == 51);
  CHECK(end_dim(2, 3) == 9);
  CHECK(end_dim_by_paths(2, 5) == 10);
  CHECK(end_dim_closed_form(4) == 764);
  CHECK(end_dim_term(3, 0) == 6);
  CHECK(end_dim_term(3, 1) == 18);
  CHECK(end_dim_term(3, 2) == 36);
  CHECK(end_dim_term(3, 3) == 16);
}

TEST_CASE("q-dimensions") {
  const int N = 5;
  CHECK(qdim_gl(D({}), N).is_one());
  CHECK(qdim_gl(D({1}), N) == q_int(N));
  CHECK(qdim_gl(D({1, 1}), N) == q_int(N) * q_int(N - 1) / q_int(2));
  CHECK(qdim_sp(D({}), 2).is_one());
  CHECK(qdim_sp(D({1}), 1) == q_int(4) / q_int(2));
  CHECK(qdim_sp(D({1}), 1).evaluate(1) == GaussianRational(2));
  CHECK(qdim_sp(D({1, 1}), 2).evaluate(1) == GaussianRational(5));
  CHECK(qdim_sp(D({2}), 2).evaluate(1) == GaussianRational(10));
  CHECK_THROWS_AS(qdim_sp(D({1, 1}), 1), std::invalid_argument);
}

TEST_CASE("hyperoctahedral dimensions") {
  CHECK(wb_dim(2, 1, D({1}), D({1})) == 2);
  CHECK(wb_dim(3, 0, D({}), D({2, 1})) == 2);
  CHECK(wb_dim(4, 1, D({1}), D({2, 1})) == 4 * 2);
  CHECK_THROWS_AS(wb_dim(3, 1, D({2}), D({1})), std::invalid_argument);
}
