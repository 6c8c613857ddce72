// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
//
//   acceptance            all criteria
//   acceptance 2 5        only criteria 2 and 5

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "sptower/combin.hpp"
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

// Collects the first problem; the criterion passes iff none was noted.
struct Check {
  std::string problem;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && problem.empty()) problem = what;
  }
  void suite(const SuiteReport& r) {
    if (const ClaimResult* f = r.first_failure()) {
      require(false, r.suite + "/" + r.variant + " N=" + std::to_string(r.N) + " n=" + std::to_string(r.n) + " " +
                         f->id + ": " + f->witness);
    }
  }
};

const ClaimResult* claim(const SuiteReport& r, const std::string& id) {
  for (const auto& c : r.claims) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

const std::uint64_t kSeed = 42;

void c1(Check& ck) {
  const std::uint64_t want[] = {2, 10, 76, 764};
  for (int n = 1; n <= 4; ++n) {
    const auto closed = end_dim_closed_form(n);
    const auto paths = end_dim_by_paths(n, 2 * n + 3);
    ck.require(closed == want[n - 1] && paths == closed,
               "n = " + std::to_string(n) + ": closed " + std::to_string(closed) + ", paths " + std::to_string(paths));
    ck.detail << (n > 1 ? ", " : "") << closed;
  }
}

void c2(Check& ck) {
  int suites = 0;
  for (int N : {3, 5, 7}) {
    for (int n = 1; n <= 3; ++n) {
      for (Variant v : {Variant::Plus, Variant::Minus}) {
        auto r = relations_suite(ctx(N, n, v));
        ck.suite(r);
        ++suites;
        if (N == 7 && n == 3) {
          for (const char* id : {"relation_b.2", "relation_c.r3.j2", "cor_addrelation", "u12.product",
                                 "p.quasi_idempotent", "reversal.u1"}) {
            ck.require(claim(r, id) != nullptr, std::string("missing claim ") + id);
          }
        }
      }
    }
  }
  ck.detail << suites << " suites, N in {3,5,7}, n <= 3, both variants";
}

void c3(Check& ck) {
  for (int N : {3, 5, 7}) {
    const auto b = block_coefficients(ctx(N, 2));
    const auto closed = closed_form_block_coefficients(Variant::Plus, N);
    ck.require(b.a == closed.a && b.c == closed.c, "N = " + std::to_string(N) + ": a = " + b.a.str() + ", c = " + b.c.str());
    ck.require((b.a - b.c).is_one(), "a - c != 1 at N = " + std::to_string(N));
  }
  const GaussianRational c3 = block_coefficients(ctx(3, 2)).c.evaluate_q(2);
  ck.require(c3 == GaussianRational::fraction(2, 7), "c(N=3, q=2) = " + c3.str());
  ck.detail << "a - c = 1 for N = 3, 5, 7; c(3, q=2) = " << c3.str();
}

void c4(Check& ck) {
  VerifyOptions o;
  o.seed = kSeed;
  o.points = 5;
  o.pairs = 200;
  for (int N : {3, 5, 7}) {
    for (int n = 1; n <= 3; ++n) {
      for (Variant v : {Variant::Plus, Variant::Minus}) {
        auto r = markov_suite(ctx(N, n, v), o);
        ck.suite(r);
        if (n == 3) {
          for (const char* id : {"phi.e3", "phi.u1", "phi.g1", "markov.property", "trace.property", "theta.compression"}) {
            ck.require(claim(r, id) != nullptr, std::string("missing claim ") + id);
          }
        }
      }
    }
  }
  ck.detail << "N in {3,5,7}, n <= 3, both variants, n = 3 at 5 points and 200 pairs";
}

void c5(Check& ck) {
  VerifyOptions o;
  o.seed = kSeed;
  o.rank_seeds = 3;
  for (Variant v : {Variant::Plus, Variant::Minus}) {
    const auto a = basis_rank(ctx(5, 2, v), RankStrategy::Symbolic, o);
    ck.require(a.certified && a.rank == 10, "(5, 2) " + variant_name(v) + ": " + a.to_json());
    const auto low = basis_rank(ctx(3, 2, v), RankStrategy::Symbolic, o);
    ck.require(!low.certified && low.rank == 9, "(3, 2) " + variant_name(v) + ": " + low.to_json());
  }
  const auto big = basis_rank(ctx(7, 3), RankStrategy::Evaluated, o);
  ck.require(big.certified && big.rank == 76 && big.ranks.size() == 3, "(7, 3): " + big.to_json());
  ck.detail << "10/10 at (5,2) symbolic; " << big.rank << "/" << big.family_size << " at (7,3) over " << big.ranks.size()
            << " points; 9/10 at (3,2)";
}

void c6(Check& ck) {
  VerifyOptions o;
  o.seed = kSeed;
  const std::pair<int, int> cases[] = {{3, 2}, {3, 3}, {5, 2}, {7, 1}};
  for (auto [N, n] : cases) ck.suite(classical_limit_suite(N, n, o));
  const std::size_t want[] = {9, 51, 10};
  for (int t = 0; t < 3; ++t) {
    const auto res = classical_closure(cases[t].first, cases[t].second);
    ck.require(res.rank == want[t], "closure rank " + std::to_string(res.rank) + " at N = " +
                                        std::to_string(cases[t].first) + ", n = " + std::to_string(cases[t].second));
    ck.detail << (t ? ", " : "closure ranks ") << res.rank;
  }
  ck.detail << "; A v0 = 0 and rank A(1) = N - 1 for N = 3, 5, 7";
}

void c7(Check& ck) {
  for (int N : {5, 7}) {
    const BratteliGraph g = bratteli(N, 4);
    for (int n = 1; n <= 4; ++n) {
      RatFunc total;
      for (const auto& [lambda, m] : g.levels[static_cast<std::size_t>(n)]) {
        total += qdim_sp(lambda, (N - 1) / 2) * RatFunc(static_cast<long>(m));
      }
      ck.require(total == q_int(N).pow(n), "N = " + std::to_string(N) + ", n = " + std::to_string(n) + ": " + total.str());
    }
  }
  ck.detail << "n <= 4, N in {5,7}";
}

void c8(Check& ck) {
  const auto r = dimension_suite(8);
  ck.suite(r);
  ck.detail << r.claims.size() << " claims";
}

void c9(Check& ck) {
  auto located = [](const SuiteReport& r, const std::string& needle) {
    const ClaimResult* f = r.first_failure();
    return f && f->witness.find(needle) != std::string::npos ? f : nullptr;
  };
  // beta
  auto cb = ctx(5, 3);
  cb.perturbation.beta = relation_b_constant(cb) + RatFunc(1);
  const auto rb = relations_suite(cb);
  const ClaimResult* fb = located(rb, "entry (");
  ck.require(fb && fb->id == "relation_b.1", "perturbed beta not caught at relation_b.1");
  // D exponent
  auto cd = ctx(5, 2, Variant::Minus);
  cd.perturbation.d_exponent_shift = 2;
  const auto rd = markov_suite(cd);
  const ClaimResult* ft = claim(rd, "trace.property");
  ck.require(!rd.passed() && ft && !ft->pass && ft->witness.find("x = ") != std::string::npos,
             "perturbed D exponent not caught by the trace property");
  // U entry
  auto cu = ctx(3, 3);
  cu.perturbation.u_entry = true;
  const auto ru = relations_suite(cu);
  const ClaimResult* fu = located(ru, "entry (");
  ck.require(fu != nullptr, "perturbed U entry not caught");
  if (fb && ft && fu) {
    ck.detail << "beta -> " << fb->id << "; D -> " << rd.first_failure()->id << " and trace.property; U -> " << fu->id;
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::pair<const char*, std::function<void(Check&)>> criteria[] = {
      {"dimension table", c1},       {"relations suite", c2},   {"block coefficients", c3},
      {"Markov suite", c4},          {"basis certification", c5}, {"classical limit", c6},
      {"weight consistency", c7},    {"combinatorics", c8},     {"negative controls", c9},
  };
  std::set<int> only;
  for (int a = 1; a < argc; ++a) only.insert(std::stoi(argv[a]));

  std::cout << "seed " << kSeed << "\n";
  bool all = true;
  for (int i = 0; i < 9; ++i) {
    if (!only.empty() && !only.count(i + 1)) continue;
    Check ck;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(ck);
    } catch (const std::exception& e) {
      ck.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = ck.problem.empty();
    all = all && ok;
    std::cout << (ok ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << ": "
              << (ok ? ck.detail.str() : ck.problem) << " [" << static_cast<int>(secs + 0.5) << " s]" << std::endl;
  }
  return all ? 0 : 1;
}
