#include "doctest.h"
#include "sptower/combin.hpp"
#include "sptower/weave.hpp"

using namespace sptower;

TEST_CASE("reduced words") {
  CHECK(reduced_word(Permutation(3)).empty());
  CHECK(reduced_word(Permutation::simple(2, 1)) == Word{1});
  Word w0 = reduced_word(Permutation::longest(3));
  CHECK(w0.size() == 3);
  CHECK(Permutation::from_word(3, w0) == Permutation::longest(3));
  for (int n = 1; n <= 5; ++n) {
    for (const auto& w : all_permutations(n)) {
      Word word = reduced_word(w);
      CHECK(static_cast<int>(word.size()) == w.length());
      CHECK(Permutation::from_word(n, word) == w);
    }
  }
}

TEST_CASE("minimal coset representatives") {
  auto reps = min_coset_reps(2, 1, CosetKind::Left);
  CHECK(reps.size() == 2);
  CHECK(min_coset_reps(4, 2, CosetKind::Parabolic).size() == 6);
  CHECK(min_coset_reps(3, 3, CosetKind::Left) == std::vector<Permutation>{Permutation(3)});
  for (int n = 1; n <= 5; ++n) {
    for (int r = 0; r <= n; ++r) {
      auto left = min_coset_reps(n, r, CosetKind::Left);
      CHECK(left.size() == factorial(n) / factorial(r));
      CHECK(min_coset_reps(n, r, CosetKind::Parabolic).size() == binomial(n, r));
      // v ranges over S_r embedded on the first r letters
      std::vector<Permutation> sub;
      for (const auto& v : all_permutations(r)) {
        std::vector<int> img = v.images();
        for (int k = r + 1; k <= n; ++k) img.push_back(k);
        sub.push_back(Permutation::from_images(img));
      }
      for (const auto& w : left) {
        for (const auto& v : sub) {
          if (!v.is_identity()) CHECK((w * v).length() > w.length());
        }
      }
    }
  }
}

TEST_CASE("ladder sets") {
  CHECK(ladder_set(0) == std::vector<Word>{Word{}});
  CHECK(ladder_set(1) == std::vector<Word>{Word{}});
  CHECK(ladder_set(2) == std::vector<Word>{Word{}, Word{1}});
  CHECK(ladder_set(3) == std::vector<Word>{Word{}, Word{1}, Word{2}, Word{1, 2}});
  for (int r = 0; r <= 7; ++r) CHECK(ladder_set(r).size() == involution_number(r));
}

TEST_CASE("spanning family sizes") {
  CHECK(spanning_family(1).size() == 2);
  auto f2 = spanning_family(2);
  CHECK(f2.size() == 10);
  std::vector<std::string> names;
  for (const auto& x : f2) names.push_back(x.str());
  CHECK(names == std::vector<std::string>{"1", "g1", "e", "e*g1", "g1*e", "g1*e*g1", "e(2)", "e(2)*g1", "g1*e(2)",
                                          "g1*e(2)*g1"});
  for (int n = 1; n <= 5; ++n) CHECK(spanning_family(n).size() == end_dim_closed_form(n));
}

TEST_CASE("theta, transpose and shift") {
  CHECK(theta_word({1, 2}, 3) == Word{2, 1});
  CHECK(theta_word({1}, 2) == Word{1});
  CHECK(theta_word({1, 3}, 4) == Word{3, 1});
  CHECK(theta_word(theta_word({1, 3, 2}, 4), 4) == Word{1, 3, 2});
  CHECK_THROWS_AS(theta_word({3}, 3), std::invalid_argument);

  CHECK(transpose(AlgebraExpr::parse("g1*g2")).str() == "g2*g1");
  CHECK(transpose(AlgebraExpr::parse("g1*e(2)")).str() == "e(2)*g1");
  CHECK(transpose(AlgebraExpr::parse("e")).str() == "e");
  CHECK(transpose(AlgebraExpr::parse("zL(1,2)")).str() == "zR(1,2)");
  auto x = AlgebraExpr::parse("u1*g2 + 3*e(2)*zL(1,2)");
  CHECK(transpose(transpose(x)).str() == x.str());

  CHECK(shift(AlgebraExpr::g(1), 1, 3).str() == "g2");
  CHECK(shift(AlgebraExpr::parse("g1*g2"), 2, 5).str() == "g3*g4");
  CHECK_THROWS_AS(shift(AlgebraExpr::e(1), 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(shift(AlgebraExpr::g(2), 1, 3), std::invalid_argument);
}

TEST_CASE("expression grammar") {
  for (const char* text : {"g1*e(2)*g1", "zL(1,2)", "u1*u2*u1+(-1)*u1", "(s^2+1)*e", "[3]*u1", "1", "q*u2"}) {
    auto x = AlgebraExpr::parse(text);
    CHECK(AlgebraExpr::parse(x.str()).str() == x.str());
  }
  CHECK(AlgebraExpr::parse("g1*e(2)*g1").str() == "g1*e(2)*g1");
  CHECK(AlgebraExpr::parse("(u1+u2)*e").str() == "(u1+u2)*e");
  CHECK_THROWS_AS(AlgebraExpr::parse("g1*x"), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraExpr::parse("zL(1,2"), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraExpr::parse("u1").validate(1), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraExpr::parse("zL(1,2)").validate(2), std::invalid_argument);
  CHECK_NOTHROW(AlgebraExpr::parse("zL(1,2)").validate(3));
  CHECK_NOTHROW(AlgebraExpr::parse("e(3)").validate(3));
}
