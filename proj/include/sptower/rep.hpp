#pragma once

// The tensor representation of C_{n,±} on V^{⊗n}, V = C^N, N = 2k+1.
// Basis index of v_{i_1}⊗...⊗v_{i_n} is sum (i_t - 1) N^{n-t}; matrices act on
// column vectors.  The minus variant is obtained from the plus one by
// s -> i*s together with u -> -u.

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "sptower/matrix.hpp"
#include "sptower/weave.hpp"

namespace sptower {

enum class Variant { Plus, Minus };

std::string variant_name(Variant v);
Variant parse_variant(const std::string& text);

/// Deliberate corruptions for negative controls.
struct Perturbation {
  std::optional<RatFunc> beta;  // replaces the relation (b) constant
  int d_exponent_shift = 0;     // added to the exponent of D_11
  bool u_entry = false;         // adds 1 to U on v_1⊗v_2

  bool any() const { return beta.has_value() || d_exponent_shift != 0 || u_entry; }
};

struct RepContext {
  int N = 3;
  int n = 1;
  Variant variant = Variant::Plus;
  Perturbation perturbation;

  int k() const { return (N - 1) / 2; }
  std::size_t dim() const;
  /// Throws std::invalid_argument unless N is odd, N >= 3 and n >= 1.
  void validate() const;
  RepContext with_n(int new_n) const {
    RepContext c = *this;
    c.n = new_n;
    return c;
  }
};

/// Constant of relation (b) (beta_±), honoring a perturbation.
RatFunc relation_b_constant(const RepContext& ctx);
RatFunc relation_b_constant(Variant v, int N);
/// s + 1/s (plus) or s - 1/s (minus).
RatFunc scaled_divisor(Variant v);
/// Scalar in front of (1-e_(2)) u_1 e_(2).
RatFunc u21_scalar(Variant v, int N);

struct BlockCoefficients {
  RatFunc a;
  RatFunc c;
};
/// Plus: c = [k-1/2]/[k+1/2], a = c + 1.  Minus: c = beta_-, a = c - 1.
BlockCoefficients closed_form_block_coefficients(Variant v, int N);

/// N^2 x N^2 matrix of u on V⊗V.
SymMatrix local_U(const RepContext& ctx);
/// N x N rank-one idempotent E = v v^T / <v, v>.
SymMatrix local_E(const RepContext& ctx);
/// Unnormalized image vector of E: entries s^{k+1-i} (plus), with s -> i*s for minus.
std::vector<RatFunc> e_image_vector(const RepContext& ctx);
/// <v, v> = v^T v, so E = v v^T / norm.
RatFunc e_image_norm(const RepContext& ctx);

/// 1^{⊗(first-1)} ⊗ local ⊗ 1^{⊗(rest)} where local acts on `width` factors.
SymMatrix embed(const RepContext& ctx, const SymMatrix& local, int first, int width);

// E_(r) = (w ⊗ 1)(w^T ⊗ 1) / norm^r with w = v^{⊗r}, which has monomial
// entries.  These helpers let E_(r)-heavy products skip the generic kernel.

/// (w^T ⊗ 1) X (w ⊗ 1), an N^{n-r} square matrix.
SymMatrix e_compress(const RepContext& ctx, int r, const SymMatrix& X);
/// (w ⊗ 1) K (w^T ⊗ 1), an N^n square matrix.
SymMatrix e_expand(const RepContext& ctx, int r, const SymMatrix& K);
/// First entry where e_expand(K) and M differ, built one row at a time.
std::optional<EntryWitness<RatFunc>> e_expand_difference(const RepContext& ctx, int r, const SymMatrix& K,
                                                         const SymMatrix& M);
/// X (w ⊗ 1) / norm^r, an N^n x N^{n-r} matrix.  X E_(r) = e_half(X) (w^T ⊗ 1) and
/// w^T ⊗ 1 has full row rank, so X E_(r) = Y E_(r) iff e_half(X) = e_half(Y).
SymMatrix e_half(const RepContext& ctx, int r, const SymMatrix& X);
/// X E_(r) and E_(r) X.
SymMatrix e_right(const RepContext& ctx, int r, const SymMatrix& X);
SymMatrix e_left(const RepContext& ctx, int r, const SymMatrix& X);
/// E_(r) X E_(r), entrywise equal to the plain product.
SymMatrix e_sandwich(const RepContext& ctx, int r, const SymMatrix& X);

SymMatrix build_U(const RepContext& ctx, int i);
/// q*1 - U_i.
SymMatrix build_G(const RepContext& ctx, int i);
SymMatrix build_E_r(const RepContext& ctx, int r);
enum class Side { Left, Right };
/// U_i E_(r) / d (Left) or E_(r) U_i / d (Right), 1 <= i < r < n.
SymMatrix build_scaled(const RepContext& ctx, Side side, int i, int r);

struct U12Family {
  SymMatrix e2;
  SymMatrix u12;
  SymMatrix u21;
  SymMatrix P;
};
U12Family build_u12_u21_P(const RepContext& ctx);

/// Skew form with a_ij = (i/s)^{2k+2-i-j} for i<j, negated below the diagonal.
SymMatrix build_skew_A(int N);
/// Kernel vector entries (i*s)^{k+1-j}.
std::vector<RatFunc> v0_vector(int N);

/// Permutation matrix reversing the order of the tensor factors.
SymMatrix reversal_matrix(const RepContext& ctx);

/// Memoizing evaluator of algebra expressions in the representation.
/// generator() is safe to call from several threads.
class Representation {
 public:
  explicit Representation(RepContext ctx);

  const RepContext& context() const { return ctx_; }
  const SymMatrix& generator(const Generator& g);
  SymMatrix evaluate(const AlgebraExpr& x);
  SymMatrix hecke_word(const Word& w);

 private:
  RepContext ctx_;
  std::mutex mutex_;
  std::map<std::tuple<int, int, int>, SymMatrix> cache_;
};

/// The representation with every entry pushed through `eval` (evaluation at a
/// point, possibly reduced mod p).  Generators are specialized once; products
/// are then formed over F.
template <class F>
class PointRepresentation {
 public:
  using Eval = std::function<F(const RatFunc&)>;
  PointRepresentation(Representation& symbolic, Eval eval) : sym_(symbolic), eval_(std::move(eval)) {}

  const SparseMatrix<F>& generator(const Generator& g) {
    auto key = std::make_tuple(static_cast<int>(g.kind), g.i, g.r);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    SparseMatrix<F> m = sym_.generator(g).template map<F>(
        [&](const RatFunc& f, std::size_t, std::size_t) { return eval_(f); });
    return cache_.emplace(key, std::move(m)).first->second;
  }

  SparseMatrix<F> evaluate(const AlgebraExpr& x) {
    const std::size_t dim = sym_.context().dim();
    switch (x.kind) {
      case AlgebraExpr::Kind::Gen:
        x.validate(sym_.context().n);
        return generator(x.gen);
      case AlgebraExpr::Kind::Scalar:
        return SparseMatrix<F>::identity(dim).scaled(eval_(x.scalar));
      case AlgebraExpr::Kind::Sum: {
        SparseMatrix<F> acc(dim, dim);
        for (const auto& c : x.children) acc += evaluate(c);
        return acc;
      }
      case AlgebraExpr::Kind::Product: {
        SparseMatrix<F> acc = evaluate(x.children.front());
        for (std::size_t j = 1; j < x.children.size(); ++j) {
          const auto& c = x.children[j];
          acc = c.kind == AlgebraExpr::Kind::Scalar ? acc.scaled(eval_(c.scalar)) : acc * evaluate(c);
        }
        return acc;
      }
    }
    throw std::invalid_argument("malformed expression");
  }

  F scalar(const RatFunc& f) const { return eval_(f); }
  const RepContext& context() const { return sym_.context(); }

 private:
  Representation& sym_;
  Eval eval_;
  std::map<std::tuple<int, int, int>, SparseMatrix<F>> cache_;
};

SymMatrix evaluate_expr(const RepContext& ctx, const AlgebraExpr& x);

/// "(row, col, scalar)" lines in row-major order.
std::string to_coordinate_list(const SymMatrix& m);
std::string to_json(const SymMatrix& m);

}  // namespace sptower
