#include "sptower/traces.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sptower {

namespace {

std::vector<int> local_exponents(int N, int shift) {
  std::vector<int> e;
  for (int i = 1; i <= N; ++i) e.push_back(2 * (2 * i - N - 1) + (i == 1 ? shift : 0));
  return e;
}

void check_square(const RepContext& ctx, std::size_t rows, std::size_t cols) {
  if (rows != ctx.dim() || cols != ctx.dim()) throw std::invalid_argument("matrix dimension mismatch in trace");
}

// Powers point^e for every exponent that occurs.
struct PowerTable {
  PowerTable(const GaussianRational& point, const std::vector<int>& exps) {
    if (point.is_zero()) throw std::domain_error("evaluation point must be nonzero");
    for (int e : exps) {
      if (!cache.count(e)) cache.emplace(e, point.pow(e));
    }
  }
  const GaussianRational& operator()(int e) const { return cache.at(e); }
  std::map<int, GaussianRational> cache;
};

}  // namespace

SymMatrix weight_matrix(int N, int shift) {
  if (N < 1 || N % 2 == 0) throw std::invalid_argument("N must be odd");
  std::vector<RatFunc> d;
  for (int e : local_exponents(N, shift)) d.emplace_back(HalfLaurent::monomial(1, e));
  return SymMatrix::diagonal(d);
}

std::vector<int> weight_exponents(const RepContext& ctx) {
  const auto local = local_exponents(ctx.N, ctx.perturbation.d_exponent_shift);
  std::vector<int> w{0};
  for (int t = 0; t < ctx.n; ++t) {
    std::vector<int> next;
    next.reserve(w.size() * local.size());
    for (int a : w) {
      for (int b : local) next.push_back(a + b);
    }
    w = std::move(next);
  }
  return w;
}

RatFunc qtrace(const RepContext& ctx, const SymMatrix& m) {
  check_square(ctx, m.rows(), m.cols());
  const auto w = weight_exponents(ctx);
  RatFuncSum sum;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const RatFunc d = m.at(i, i);
    if (!d.is_zero()) sum.add(d.times_monomial(1, w[i]));
  }
  return sum.result();
}

RatFunc qtrace_product(const RepContext& ctx, const SymMatrix& a, const SymMatrix& b) {
  check_square(ctx, a.rows(), a.cols());
  check_square(ctx, b.rows(), b.cols());
  const auto w = weight_exponents(ctx);
  // sum over (i, k) of a_ik b_ki w_i, walking the sparser factor
  RatFuncSum sum;
  if (a.nnz() <= b.nnz()) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (const auto& [k, av] : a.row(i)) {
        if (const RatFunc* bv = b.find(k, i)) sum.add_product(av.times_monomial(1, w[i]), *bv);
      }
    }
  } else {
    for (std::size_t k = 0; k < b.rows(); ++k) {
      for (const auto& [i, bv] : b.row(k)) {
        if (const RatFunc* av = a.find(i, k)) sum.add_product(av->times_monomial(1, w[i]), bv);
      }
    }
  }
  return sum.result();
}

GaussianRational qtrace(const RepContext& ctx, const GaussMatrix& m, const GaussianRational& point) {
  check_square(ctx, m.rows(), m.cols());
  const auto w = weight_exponents(ctx);
  const PowerTable pw(point, w);
  GaussianRational t;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const GaussianRational d = m.at(i, i);
    if (!d.is_zero()) t += d * pw(w[i]);
  }
  return t;
}

GaussianRational qtrace_product(const RepContext& ctx, const GaussMatrix& a, const GaussMatrix& b,
                                const GaussianRational& point) {
  check_square(ctx, a.rows(), a.cols());
  check_square(ctx, b.rows(), b.cols());
  const auto w = weight_exponents(ctx);
  const PowerTable pw(point, w);
  std::vector<GaussianRational> col(a.rows());  // sum over k of a_ik b_ki, by i
  if (a.nnz() <= b.nnz()) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (const auto& [k, av] : a.row(i)) {
        if (const GaussianRational* bv = b.find(k, i)) col[i] += av * *bv;
      }
    }
  } else {
    for (std::size_t k = 0; k < b.rows(); ++k) {
      for (const auto& [i, bv] : b.row(k)) {
        if (const GaussianRational* av = a.find(i, k)) col[i] += *av * bv;
      }
    }
  }
  GaussianRational t;
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (!col[i].is_zero()) t += col[i] * pw(w[i]);
  }
  return t;
}

SymMatrix partial_qtrace(const RepContext& ctx, const SymMatrix& m) {
  check_square(ctx, m.rows(), m.cols());
  if (ctx.n < 2) throw std::invalid_argument("partial trace needs at least two factors");
  const auto N = static_cast<std::size_t>(ctx.N);
  const auto w = local_exponents(ctx.N, ctx.perturbation.d_exponent_shift);
  const std::size_t small = m.rows() / N;
  SymMatrix out(small, small);
  for (std::size_t x = 0; x < small; ++x) {
    std::map<std::uint32_t, RatFuncSum> acc;
    for (std::size_t t = 0; t < N; ++t) {
      for (const auto& [j, f] : m.row(x * N + t)) {
        if (j % N != t) continue;
        acc[static_cast<std::uint32_t>(j / N)].add(f.times_monomial(1, w[t]));
      }
    }
    for (auto& [y, sum] : acc) out.set(x, y, sum.result());
  }
  return out;
}

GaussMatrix partial_qtrace(const RepContext& ctx, const GaussMatrix& m, const GaussianRational& point) {
  check_square(ctx, m.rows(), m.cols());
  if (ctx.n < 2) throw std::invalid_argument("partial trace needs at least two factors");
  const auto N = static_cast<std::size_t>(ctx.N);
  const auto w = local_exponents(ctx.N, ctx.perturbation.d_exponent_shift);
  const PowerTable pw(point, w);
  const std::size_t small = m.rows() / N;
  GaussMatrix out(small, small);
  for (std::size_t x = 0; x < small; ++x) {
    std::map<std::uint32_t, GaussianRational> acc;
    for (std::size_t t = 0; t < N; ++t) {
      for (const auto& [j, f] : m.row(x * N + t)) {
        if (j % N == t) acc[static_cast<std::uint32_t>(j / N)] += f * pw(w[t]);
      }
    }
    for (auto& [y, v] : acc) out.set(x, y, v);
  }
  return out;
}

RatFunc markov_phi(Representation& rep, const AlgebraExpr& x) {
  const RepContext& ctx = rep.context();
  return qtrace(ctx, rep.evaluate(x)) * q_number(QNumberKind::Integer, ctx.N).pow(-ctx.n);
}

RatFunc markov_phi(const RepContext& ctx, const AlgebraExpr& x) {
  Representation rep(ctx);
  return markov_phi(rep, x);
}

namespace {

RatFunc proportionality(const SymMatrix& m, const SymMatrix& idem, const char* what) {
  RatFunc ratio;
  bool found = false;
  for (std::size_t i = 0; i < idem.rows() && !found; ++i) {
    if (idem.row(i).empty()) continue;
    const auto& [j, f] = idem.row(i).front();
    ratio = m.at(i, j) / f;
    found = true;
  }
  if (!found) throw std::runtime_error(std::string(what) + ": idempotent is zero");
  if (auto w = m.first_difference(idem.scaled(ratio))) {
    throw std::runtime_error(std::string(what) + " is not proportional to its idempotent at entry (" +
                             std::to_string(w->row) + ", " + std::to_string(w->col) + "): " + w->lhs.str() +
                             " vs " + w->rhs.str());
  }
  return ratio;
}

}  // namespace

BlockCoefficients block_coefficients(const RepContext& ctx) {
  if (ctx.n != 2) throw std::invalid_argument("block coefficients need n = 2");
  const SymMatrix u = build_U(ctx, 1);
  const SymMatrix e2 = build_E_r(ctx, 2);
  const SymMatrix comp = build_E_r(ctx, 1) - e2;
  BlockCoefficients b;
  b.a = proportionality(e_sandwich(ctx, 2, u), e2, "e(2) u1 e(2)");
  b.c = proportionality(comp * u * comp, comp, "(e - e(2)) u1 (e - e(2))");
  return b;
}

std::string TraceReport::to_json() const {
  nlohmann::ordered_json j;
  j["expression"] = expression;
  j["variant"] = variant_name(variant);
  j["N"] = N;
  j["n"] = n;
  j["value"] = value.str();
  j["expected"] = expected ? nlohmann::ordered_json(expected->str()) : nlohmann::ordered_json(nullptr);
  j["match"] = match;
  return j.dump();
}

TraceReport trace_report(const RepContext& ctx, const AlgebraExpr& x, std::optional<RatFunc> expected) {
  TraceReport r;
  r.expression = x.str();
  r.variant = ctx.variant;
  r.N = ctx.N;
  r.n = ctx.n;
  r.value = markov_phi(ctx, x);
  r.expected = std::move(expected);
  r.match = !r.expected || (r.value - *r.expected).is_zero();
  return r;
}

std::string trace_reports_csv(const std::vector<TraceReport>& reports) {
  std::ostringstream out;
  out << "expression,value,expected,match\n";
  for (const auto& r : reports) {
    out << "\"" << r.expression << "\",\"" << r.value.str() << "\",\"" << (r.expected ? r.expected->str() : "")
        << "\"," << (r.match ? "true" : "false") << "\n";
  }
  return out.str();
}

}  // namespace sptower
