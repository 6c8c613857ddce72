#pragma once

// Permutations, reduced words, coset representatives, ladder sets and the
// spanning family, plus the expression tree for elements of C_n.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sptower/exact.hpp"

namespace sptower {

/// Word in the simple reflections / Hecke generators g_i, 1-based.
using Word = std::vector<int>;

class Permutation {
 public:
  /// Identity of S_n.
  explicit Permutation(int n = 0);
  /// images[k-1] = w(k); throws unless a bijection of 1..n.
  static Permutation from_images(std::vector<int> images);
  /// s_{a_1} s_{a_2} ... s_{a_m}.
  static Permutation from_word(int n, const Word& word);
  static Permutation simple(int n, int i);
  static Permutation longest(int n);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[static_cast<std::size_t>(k - 1)]; }
  const std::vector<int>& images() const { return images_; }
  int length() const;
  bool is_identity() const;
  Permutation inverse() const;

  /// (a * b)(k) = a(b(k)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }

 private:
  std::vector<int> images_;
};

/// All of S_n in lexicographic order of image lists.
std::vector<Permutation> all_permutations(int n);

Word reduced_word(const Permutation& w);

enum class CosetKind { Left, Parabolic };
/// Minimal representatives of w S_r (Left) or w (S_r x S_{n-r}) (Parabolic).
std::vector<Permutation> min_coset_reps(int n, int r, CosetKind kind);

/// B_r as words in g_j, base cases B_0 = B_1 = {1}; shortlex order.
std::vector<Word> ladder_set(int r);

Word theta_word(const Word& word, int n);
Word reversed(const Word& word);

/// Reduced words of all of S_n, the standard basis of the Hecke algebra H_n.
std::vector<Word> hecke_basis(int n);

enum class GenKind { U, G, E, ZLeft, ZRight };

struct Generator {
  GenKind kind = GenKind::U;
  int i = 0;  // U, G, ZLeft, ZRight
  int r = 0;  // E, ZLeft, ZRight

  std::string str() const;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Element of C_n before representation.  g_i = q*1 - u_i; e(1) is written "e".
struct AlgebraExpr {
  enum class Kind { Gen, Scalar, Sum, Product };
  Kind kind = Kind::Scalar;
  Generator gen;
  RatFunc scalar{1};
  std::vector<AlgebraExpr> children;

  static AlgebraExpr generator(Generator g);
  static AlgebraExpr u(int i) { return generator({GenKind::U, i, 0}); }
  static AlgebraExpr g(int i) { return generator({GenKind::G, i, 0}); }
  static AlgebraExpr e(int r) { return generator({GenKind::E, 0, r}); }
  static AlgebraExpr zl(int i, int r) { return generator({GenKind::ZLeft, i, r}); }
  static AlgebraExpr zr(int i, int r) { return generator({GenKind::ZRight, i, r}); }
  static AlgebraExpr constant(RatFunc c);
  static AlgebraExpr sum(std::vector<AlgebraExpr> terms);
  static AlgebraExpr product(std::vector<AlgebraExpr> factors);
  /// Product of g_{a_1} ... g_{a_m}; the empty word is 1.
  static AlgebraExpr hecke_word(const Word& word);

  /// Throws std::invalid_argument naming the first generator out of range for C_n.
  void validate(int n) const;
  bool hecke_only() const;
  std::string str() const;
  static AlgebraExpr parse(std::string_view text);

  friend AlgebraExpr operator*(const AlgebraExpr& a, const AlgebraExpr& b) { return product({a, b}); }
  friend AlgebraExpr operator+(const AlgebraExpr& a, const AlgebraExpr& b) { return sum({a, b}); }
  friend AlgebraExpr operator-(const AlgebraExpr& a, const AlgebraExpr& b) {
    return sum({a, product({constant(-1), b})});
  }
};

/// Anti-automorphism: reverses products, fixes generators except zL <-> zR.
AlgebraExpr transpose(const AlgebraExpr& x);
/// u_i -> u_{i+m} (and g_i likewise) on Hecke-only expressions.
AlgebraExpr shift(const AlgebraExpr& x, int m, int new_n);

/// w_1 b_1 e_(r) b_2^T w_2^T with the two Hecke words already concatenated.
struct SpanningElement {
  Word left;
  int r = 0;
  Word right;

  AlgebraExpr to_expr() const;
  std::string str() const { return to_expr().str(); }
};

/// Union over r of C_{n,r} B_r e_(r) B_r^T D_{n,r}^T, ordered by r then lexicographically.
std::vector<SpanningElement> spanning_family(int n);

}  // namespace sptower
