#pragma once

// Weighted trace Tr_q(a) = Tr(a D^{⊗n}), the unnormalized partial trace over
// the last tensor factor, and the Markov functional phi = Tr_q / [N]^n.

#include <optional>
#include <string>
#include <vector>

#include "sptower/rep.hpp"

namespace sptower {

/// D = diag(s^{2(2i-N-1)}), with `shift` added to the exponent of D_11.
SymMatrix weight_matrix(int N, int shift = 0);
/// Exponents of the diagonal of D^{⊗n}, honoring ctx.perturbation.
std::vector<int> weight_exponents(const RepContext& ctx);

RatFunc qtrace(const RepContext& ctx, const SymMatrix& m);
/// Tr_q(a b) without forming the product.
RatFunc qtrace_product(const RepContext& ctx, const SymMatrix& a, const SymMatrix& b);
/// Same at s = point, for matrices already specialized there.
GaussianRational qtrace(const RepContext& ctx, const GaussMatrix& m, const GaussianRational& point);
GaussianRational qtrace_product(const RepContext& ctx, const GaussMatrix& a, const GaussMatrix& b,
                                const GaussianRational& point);

/// Contracts the last factor against D.  ctx describes the n+1 factor input.
SymMatrix partial_qtrace(const RepContext& ctx, const SymMatrix& m);
GaussMatrix partial_qtrace(const RepContext& ctx, const GaussMatrix& m, const GaussianRational& point);

RatFunc markov_phi(Representation& rep, const AlgebraExpr& x);
RatFunc markov_phi(const RepContext& ctx, const AlgebraExpr& x);

/// Reads a and c off e_(2) u_1 e_(2) = a e_(2) and
/// (e - e_(2)) u_1 (e - e_(2)) = c (e - e_(2)); throws std::runtime_error
/// naming the entry if either compression is not proportional.
BlockCoefficients block_coefficients(const RepContext& ctx);

struct TraceReport {
  std::string expression;
  Variant variant = Variant::Plus;
  int N = 0;
  int n = 0;
  RatFunc value;
  std::optional<RatFunc> expected;
  bool match = true;

  std::string to_json() const;
};

TraceReport trace_report(const RepContext& ctx, const AlgebraExpr& x, std::optional<RatFunc> expected = std::nullopt);
/// "expression,value,expected,match" rows.
std::string trace_reports_csv(const std::vector<TraceReport>& reports);

}  // namespace sptower
