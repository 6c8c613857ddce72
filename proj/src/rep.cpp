#include "sptower/rep.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace sptower {

namespace {

const GaussianRational kI = GaussianRational::imaginary_unit();

RatFunc s_pow(int e) { return RatFunc(HalfLaurent::monomial(1, e)); }

std::size_t ipow(std::size_t base, int e) {
  std::size_t r = 1;
  for (int j = 0; j < e; ++j) r *= base;
  return r;
}

// Applies the +/- isomorphism to a plus-variant matrix.
SymMatrix to_minus(const SymMatrix& m, bool negate) {
  return m.map<RatFunc>([&](const RatFunc& f, std::size_t, std::size_t) {
    RatFunc g = f.substitute(kI);
    return negate ? -g : g;
  });
}

struct Mono {
  GaussianRational c;
  int e = 0;
};

// Entries of v^{⊗r}, first factor most significant.
std::vector<Mono> tensor_image(const RepContext& ctx, int r) {
  std::vector<Mono> v1;
  for (const RatFunc& x : e_image_vector(ctx)) v1.push_back({x.num().leading(), x.num().low()});
  std::vector<Mono> w{{GaussianRational(1), 0}};
  for (int t = 0; t < r; ++t) {
    std::vector<Mono> next;
    next.reserve(w.size() * v1.size());
    for (const auto& a : w) {
      for (const auto& b : v1) next.push_back({a.c * b.c, a.e + b.e});
    }
    w = std::move(next);
  }
  return w;
}

}  // namespace

std::string variant_name(Variant v) { return v == Variant::Plus ? "plus" : "minus"; }

Variant parse_variant(const std::string& text) {
  if (text == "plus" || text == "+") return Variant::Plus;
  if (text == "minus" || text == "-") return Variant::Minus;
  throw std::invalid_argument("variant must be 'plus' or 'minus', got '" + text + "'");
}

std::size_t RepContext::dim() const { return ipow(static_cast<std::size_t>(N), n); }

void RepContext::validate() const {
  if (N < 3 || N % 2 == 0) throw std::invalid_argument("N must be odd and at least 3");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
}

RatFunc relation_b_constant(Variant v, int N) {
  if (v == Variant::Plus) return (s_pow(N - 2) - s_pow(2 - N)) / (s_pow(N) - s_pow(-N));
  return (s_pow(N - 2) + s_pow(2 - N)) / (s_pow(N) + s_pow(-N));
}

RatFunc relation_b_constant(const RepContext& ctx) {
  if (ctx.perturbation.beta) return *ctx.perturbation.beta;
  return relation_b_constant(ctx.variant, ctx.N);
}

RatFunc scaled_divisor(Variant v) {
  return v == Variant::Plus ? s_pow(1) + s_pow(-1) : s_pow(1) - s_pow(-1);
}

RatFunc u21_scalar(Variant v, int N) {
  RatFunc minus = q_number(QNumberKind::Minus, N) / (RatFunc(-kI) * (s_pow(1) - s_pow(-1)));
  if (v == Variant::Minus) return minus;
  return -minus.substitute(-kI);
}

BlockCoefficients closed_form_block_coefficients(Variant v, int N) {
  const int k = (N - 1) / 2;
  if (v == Variant::Plus) {
    RatFunc c = q_number(QNumberKind::HalfInteger, k - 1) / q_number(QNumberKind::HalfInteger, k);
    return {c + RatFunc(1), c};
  }
  RatFunc c = relation_b_constant(Variant::Minus, N);
  return {c - RatFunc(1), c};
}

SymMatrix local_U(const RepContext& ctx) {
  const std::size_t N = static_cast<std::size_t>(ctx.N);
  SymMatrix u(N * N, N * N);
  const RatFunc q = RatFunc::q();
  const RatFunc qinv = q.inverse();
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = a + 1; b < N; ++b) {
      const std::size_t x = a * N + b;  // v_a ⊗ v_b
      const std::size_t y = b * N + a;  // v_b ⊗ v_a
      u.set(x, x, qinv);
      u.set(x, y, 1);
      u.set(y, x, 1);
      u.set(y, y, q);
    }
  }
  if (ctx.variant == Variant::Minus) u = to_minus(u, true);
  if (ctx.perturbation.u_entry) u.set(1, 1, u.at(1, 1) + RatFunc(1));
  return u;
}

std::vector<RatFunc> e_image_vector(const RepContext& ctx) {
  std::vector<RatFunc> v;
  for (int i = 1; i <= ctx.N; ++i) {
    RatFunc x = s_pow(ctx.k() + 1 - i);
    v.push_back(ctx.variant == Variant::Minus ? x.substitute(kI) : x);
  }
  return v;
}

RatFunc e_image_norm(const RepContext& ctx) {
  RatFunc plus = q_number(QNumberKind::Plus, ctx.N);
  return ctx.variant == Variant::Minus ? plus.substitute(kI) : plus;
}

SymMatrix local_E(const RepContext& ctx) {
  const std::size_t N = static_cast<std::size_t>(ctx.N);
  SymMatrix e(N, N);
  const RatFunc inv_norm = q_number(QNumberKind::Plus, ctx.N).inverse();
  for (std::size_t i = 1; i <= N; ++i) {
    for (std::size_t j = 1; j <= N; ++j) {
      e.set(i - 1, j - 1, s_pow(2 * ctx.k() + 2 - static_cast<int>(i + j)) * inv_norm);
    }
  }
  if (ctx.variant == Variant::Minus) e = to_minus(e, false);
  return e;
}

SymMatrix embed(const RepContext& ctx, const SymMatrix& local, int first, int width) {
  if (first < 1 || first + width - 1 > ctx.n) throw std::invalid_argument("tensor factor range out of bounds");
  const std::size_t N = static_cast<std::size_t>(ctx.N);
  SymMatrix m = local;
  if (first > 1) m = kron(SymMatrix::identity(ipow(N, first - 1)), m);
  const int rest = ctx.n - (first + width - 1);
  if (rest > 0) m = kron(m, SymMatrix::identity(ipow(N, rest)));
  return m;
}

SymMatrix e_compress(const RepContext& ctx, int r, const SymMatrix& X) {
  const std::size_t m = ipow(static_cast<std::size_t>(ctx.N), ctx.n - r);
  if (X.rows() != ctx.dim() || X.cols() != ctx.dim()) throw std::invalid_argument("matrix dimension mismatch in e_compress");
  const auto w = tensor_image(ctx, r);
  std::vector<std::vector<std::pair<std::uint32_t, RatFuncSum>>> acc(m);
  for (std::size_t i = 0; i < X.rows(); ++i) {
    const Mono& wx = w[i / m];
    auto& row = acc[i % m];
    for (const auto& [j, f] : X.row(i)) {
      const Mono& wy = w[j / m];
      const auto b = static_cast<std::uint32_t>(j % m);
      auto it = std::find_if(row.begin(), row.end(), [&](const auto& p) { return p.first == b; });
      if (it == row.end()) it = row.insert(row.end(), {b, RatFuncSum()});
      it->second.add(f.times_monomial(wx.c * wy.c, wx.e + wy.e));
    }
  }
  SymMatrix K(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (auto& [b, sum] : acc[a]) K.set(a, b, sum.result());
  }
  return K;
}

SymMatrix e_expand(const RepContext& ctx, int r, const SymMatrix& K) {
  const std::size_t m = ipow(static_cast<std::size_t>(ctx.N), ctx.n - r);
  if (K.rows() != m || K.cols() != m) throw std::invalid_argument("matrix dimension mismatch in e_expand");
  const auto w = tensor_image(ctx, r);
  SymMatrix out(ctx.dim(), ctx.dim());
  for (std::size_t x = 0; x < w.size(); ++x) {
    for (std::size_t a = 0; a < m; ++a) {
      auto& row = out.mutable_row(x * m + a);
      for (std::size_t y = 0; y < w.size(); ++y) {
        const GaussianRational c = w[x].c * w[y].c;
        const int e = w[x].e + w[y].e;
        for (const auto& [b, f] : K.row(a)) row.emplace_back(static_cast<std::uint32_t>(y * m + b), f.times_monomial(c, e));
      }
    }
  }
  return out;
}

std::optional<EntryWitness<RatFunc>> e_expand_difference(const RepContext& ctx, int r, const SymMatrix& K,
                                                         const SymMatrix& M) {
  const std::size_t m = ipow(static_cast<std::size_t>(ctx.N), ctx.n - r);
  if (K.rows() != m || K.cols() != m || M.rows() != ctx.dim() || M.cols() != ctx.dim()) {
    throw std::invalid_argument("matrix dimension mismatch in e_expand_difference");
  }
  const auto w = tensor_image(ctx, r);
  for (std::size_t x = 0; x < w.size(); ++x) {
    for (std::size_t a = 0; a < m; ++a) {
      const std::size_t i = x * m + a;
      std::map<std::uint32_t, RatFunc> row;  // row i of (w ⊗ 1) K (w^T ⊗ 1)
      for (std::size_t y = 0; y < w.size(); ++y) {
        for (const auto& [b, f] : K.row(a)) {
          row.emplace(static_cast<std::uint32_t>(y * m + b), f.times_monomial(w[x].c * w[y].c, w[x].e + w[y].e));
        }
      }
      for (const auto& [j, f] : M.row(i)) {
        auto it = row.find(j);
        const RatFunc lhs = it == row.end() ? RatFunc() : it->second;
        if (!(lhs == f)) return EntryWitness<RatFunc>{i, j, lhs, f};
        if (it != row.end()) row.erase(it);
      }
      for (const auto& [j, f] : row) {
        if (!f.is_zero()) return EntryWitness<RatFunc>{i, j, f, RatFunc()};
      }
    }
  }
  return std::nullopt;
}

SymMatrix e_half(const RepContext& ctx, int r, const SymMatrix& X) {
  const std::size_t m = ipow(static_cast<std::size_t>(ctx.N), ctx.n - r);
  if (X.cols() != ctx.dim()) throw std::invalid_argument("matrix dimension mismatch in e_half");
  const auto w = tensor_image(ctx, r);
  const RatFunc scale = e_image_norm(ctx).pow(-r);
  SymMatrix out(X.rows(), m);
  std::vector<RatFuncSum> acc(m);
  for (std::size_t i = 0; i < X.rows(); ++i) {
    for (const auto& [j, f] : X.row(i)) acc[j % m].add(f.times_monomial(w[j / m].c, w[j / m].e));
    for (std::size_t b = 0; b < m; ++b) {
      if (acc[b].empty()) continue;
      RatFunc f = acc[b].result();
      acc[b].clear();
      if (!f.is_zero()) out.set(i, b, f * scale);
    }
  }
  return out;
}

SymMatrix e_right(const RepContext& ctx, int r, const SymMatrix& X) {
  if (r == 0) return X;
  const std::size_t m = ipow(static_cast<std::size_t>(ctx.N), ctx.n - r);
  const auto w = tensor_image(ctx, r);
  const SymMatrix half = e_half(ctx, r, X);
  SymMatrix out(X.rows(), ctx.dim());
  for (std::size_t i = 0; i < half.rows(); ++i) {
    if (half.row(i).empty()) continue;
    auto& row = out.mutable_row(i);
    for (std::size_t y = 0; y < w.size(); ++y) {
      for (const auto& [b, f] : half.row(i)) row.emplace_back(static_cast<std::uint32_t>(y * m + b), f.times_monomial(w[y].c, w[y].e));
    }
  }
  return out;
}

SymMatrix e_left(const RepContext& ctx, int r, const SymMatrix& X) {
  return e_right(ctx, r, X.transpose()).transpose();
}

SymMatrix e_sandwich(const RepContext& ctx, int r, const SymMatrix& X) {
  if (r == 0) return X;
  const RatFunc scale = e_image_norm(ctx).pow(-2 * r);
  return e_expand(ctx, r, e_compress(ctx, r, X).scaled(scale));
}

SymMatrix build_U(const RepContext& ctx, int i) {
  if (i < 1 || i >= ctx.n) throw std::invalid_argument("U index out of range: " + std::to_string(i));
  return embed(ctx, local_U(ctx), i, 2);
}

SymMatrix build_G(const RepContext& ctx, int i) {
  return SymMatrix::identity(ctx.dim()).scaled(RatFunc::q()) - build_U(ctx, i);
}

SymMatrix build_E_r(const RepContext& ctx, int r) {
  if (r < 0 || r > ctx.n) throw std::invalid_argument("E index out of range: " + std::to_string(r));
  if (r == 0) return SymMatrix::identity(ctx.dim());
  const std::size_t m = ipow(static_cast<std::size_t>(ctx.N), ctx.n - r);
  return e_expand(ctx, r, SymMatrix::identity(m).scaled(e_image_norm(ctx).pow(-r)));
}

SymMatrix build_scaled(const RepContext& ctx, Side side, int i, int r) {
  if (!(1 <= i && i < r && r < ctx.n)) {
    throw std::invalid_argument("scaled generator needs 1 <= i < r < n");
  }
  const SymMatrix u = build_U(ctx, i);
  const SymMatrix e = build_E_r(ctx, r);
  const SymMatrix prod = side == Side::Left ? u * e : e * u;
  return prod.scaled(scaled_divisor(ctx.variant).inverse());
}

U12Family build_u12_u21_P(const RepContext& ctx) {
  if (ctx.n < 2) throw std::invalid_argument("u12/u21 need n >= 2");
  U12Family f;
  f.e2 = build_E_r(ctx, 2);
  const SymMatrix u = build_U(ctx, 1);
  const SymMatrix eue = e_sandwich(ctx, 2, u);
  const RatFunc c = u21_scalar(ctx.variant, ctx.N);
  // (1 - E) U E and E U (1 - E)
  f.u21 = (e_right(ctx, 2, u) - eue).scaled(c);
  f.u12 = (e_left(ctx, 2, u) - eue).scaled(c);
  f.P = f.e2 + f.u12 + f.u21 + f.u21 * f.u12;
  return f;
}

SymMatrix build_skew_A(int N) {
  if (N < 3 || N % 2 == 0) throw std::invalid_argument("N must be odd and at least 3");
  const int k = (N - 1) / 2;
  const RatFunc base = RatFunc(kI) * s_pow(-1);
  SymMatrix a(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; j <= N; ++j) {
      if (i == j) continue;
      RatFunc x = base.pow(2 * k + 2 - i - j);
      a.set(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), i < j ? x : -x);
    }
  }
  return a;
}

std::vector<RatFunc> v0_vector(int N) {
  const int k = (N - 1) / 2;
  const RatFunc base = RatFunc(kI) * s_pow(1);
  std::vector<RatFunc> v;
  for (int j = 1; j <= N; ++j) v.push_back(base.pow(k + 1 - j));
  return v;
}

SymMatrix reversal_matrix(const RepContext& ctx) {
  const std::size_t N = static_cast<std::size_t>(ctx.N);
  const std::size_t dim = ctx.dim();
  SymMatrix m(dim, dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t rest = x, y = 0;
    for (int t = 0; t < ctx.n; ++t) {
      y = y * N + rest % N;
      rest /= N;
    }
    m.set(y, x, 1);
  }
  return m;
}

Representation::Representation(RepContext ctx) : ctx_(std::move(ctx)) { ctx_.validate(); }

const SymMatrix& Representation::generator(const Generator& g) {
  auto key = std::make_tuple(static_cast<int>(g.kind), g.i, g.r);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  SymMatrix m;
  switch (g.kind) {
    case GenKind::U:
      m = build_U(ctx_, g.i);
      break;
    case GenKind::G:
      m = build_G(ctx_, g.i);
      break;
    case GenKind::E:
      m = build_E_r(ctx_, g.r);
      break;
    case GenKind::ZLeft:
      m = build_scaled(ctx_, Side::Left, g.i, g.r);
      break;
    case GenKind::ZRight:
      m = build_scaled(ctx_, Side::Right, g.i, g.r);
      break;
  }
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.emplace(key, std::move(m)).first->second;
}

SymMatrix Representation::evaluate(const AlgebraExpr& x) {
  switch (x.kind) {
    case AlgebraExpr::Kind::Gen:
      x.validate(ctx_.n);
      return generator(x.gen);
    case AlgebraExpr::Kind::Scalar:
      return SymMatrix::identity(ctx_.dim()).scaled(x.scalar);
    case AlgebraExpr::Kind::Sum: {
      SymMatrix acc(ctx_.dim(), ctx_.dim());
      for (const auto& c : x.children) acc += evaluate(c);
      return acc;
    }
    case AlgebraExpr::Kind::Product: {
      SymMatrix acc = evaluate(x.children.front());
      for (std::size_t j = 1; j < x.children.size(); ++j) {
        const auto& c = x.children[j];
        if (c.kind == AlgebraExpr::Kind::Scalar) {
          acc = acc.scaled(c.scalar);
        } else {
          acc = acc * evaluate(c);
        }
      }
      return acc;
    }
  }
  throw std::invalid_argument("malformed expression");
}

SymMatrix Representation::hecke_word(const Word& w) { return evaluate(AlgebraExpr::hecke_word(w)); }

SymMatrix evaluate_expr(const RepContext& ctx, const AlgebraExpr& x) { return Representation(ctx).evaluate(x); }

std::string to_coordinate_list(const SymMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& [j, v] : m.row(i)) {
      out += "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + v.str() + ")\n";
    }
  }
  return out;
}

std::string to_json(const SymMatrix& m) {
  nlohmann::ordered_json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto entries = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& [c, v] : m.row(i)) entries.push_back({i, c, v.str()});
  }
  j["entries"] = entries;
  return j.dump();
}

}  // namespace sptower
