// sptower: command-line front end.
//
//   sptower bratteli --N 5 --depth 2 --format csv
//   sptower dims --n-max 4
//   sptower verify --suite relations --variant plus --N 5 --n 3
//   sptower trace --expr "e(2)" --N 5 --n 2
//   sptower matrix --expr "u1" --N 3 --n 2
//
// Exit codes: 0 success, 1 a verification claim failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sptower/combin.hpp"
#include "sptower/verify.hpp"

using namespace sptower;
using nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int N = 3;
  int n = 2;
  int depth = 3;
  int n_max = 4;
  int r = 1;
  std::string variant = "both";
  std::string suite = "all";
  std::string strategy = "evaluated";
  std::string format;
  std::string output;
  std::string expr;
  std::string perturb;  // negative controls: beta, d-exponent or u-entry
  std::uint64_t seed = 42;
  int jobs = 1;
  int points = 5;
  int pairs = 200;
  int rank_seeds = 3;
};

std::vector<Variant> variants_of(const std::string& v) {
  if (v == "both") return {Variant::Plus, Variant::Minus};
  return {parse_variant(v)};
}

RepContext make_ctx(int N, int n, Variant v, const std::string& perturb = "") {
  RepContext c;
  c.N = N;
  c.n = n;
  c.variant = v;
  c.validate();
  if (perturb == "beta") c.perturbation.beta = relation_b_constant(c) + RatFunc(1);
  if (perturb == "d-exponent") c.perturbation.d_exponent_shift = 2;
  if (perturb == "u-entry") c.perturbation.u_entry = true;
  return c;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw UsageError("cannot write " + cfg.output);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

int cmd_bratteli(const RunConfig& cfg) {
  const BratteliGraph g = bratteli(cfg.N, cfg.depth);
  const std::string fmt = cfg.format.empty() ? "csv" : cfg.format;
  const std::string seed = std::to_string(cfg.seed);
  if (fmt == "dot") {
    emit(cfg, "// seed=" + seed + "\n" + g.to_dot());
  } else if (fmt == "json") {
    ordered_json j;
    j["seed"] = cfg.seed;
    j["depth"] = cfg.depth;
    j["graph"] = ordered_json::parse(g.to_json());
    emit(cfg, j.dump(2));
  } else if (fmt == "csv") {
    emit(cfg, "# seed=" + seed + " N=" + std::to_string(cfg.N) + " level=" + std::to_string(cfg.depth) + "\n" +
                  g.level_csv(cfg.depth));
  } else {
    std::ostringstream out;
    out << "# seed=" << seed << " N=" << cfg.N << "\n";
    for (std::size_t l = 0; l < g.levels.size(); ++l) {
      out << "level " << l << ":";
      for (const auto& [d, m] : g.levels[l]) out << "  " << d.str() << " x" << m;
      out << "\n";
    }
    emit(cfg, out.str());
  }
  return 0;
}

int cmd_dims(const RunConfig& cfg) {
  if (cfg.n_max < 1 || cfg.n_max > 8) throw UsageError("n-max must be between 1 and 8");
  const std::string fmt = cfg.format.empty() ? "text" : cfg.format;
  ordered_json rows = ordered_json::array();
  for (int m = 1; m <= cfg.n_max; ++m) {
    ordered_json row;
    row["n"] = m;
    row["dim"] = end_dim_closed_form(m);
    auto terms = ordered_json::array();
    for (int r = 0; r <= m; ++r) terms.push_back(end_dim_term(m, r));
    row["terms"] = terms;
    rows.push_back(row);
  }
  auto h = ordered_json::array();
  for (int r = 0; r <= cfg.n_max; ++r) h.push_back(involution_number(r));

  if (fmt == "json") {
    ordered_json j;
    j["seed"] = cfg.seed;
    j["dims"] = rows;
    j["h"] = h;
    emit(cfg, j.dump(2));
    return 0;
  }
  std::ostringstream out;
  if (fmt == "csv") {
    out << "# seed=" << cfg.seed << "\nn,dim,terms\n";
    for (const auto& row : rows) {
      out << row["n"] << "," << row["dim"] << ",\"";
      for (std::size_t r = 0; r < row["terms"].size(); ++r) out << (r ? " " : "") << row["terms"][r];
      out << "\"\n";
    }
  } else {
    out << "# seed=" << cfg.seed << "\n";
    out << "h_r:";
    for (const auto& x : h) out << " " << x;
    out << "\n";
    for (const auto& row : rows) {
      out << "n=" << row["n"] << "  dim=" << row["dim"] << "  by r:";
      for (const auto& t : row["terms"]) out << " " << t;
      out << "\n";
    }
  }
  emit(cfg, out.str());
  return 0;
}

std::vector<std::string> suite_names(const std::string& s) {
  static const std::vector<std::string> all{"relations", "markov",  "basis",      "classical",
                                            "dimensions", "variant-iso", "compression"};
  if (s == "all") return all;
  if (std::find(all.begin(), all.end(), s) == all.end()) throw UsageError("unknown suite '" + s + "'");
  return {s};
}

int cmd_verify(const RunConfig& cfg) {
  VerifyOptions opts;
  opts.seed = cfg.seed;
  opts.jobs = cfg.jobs;
  opts.points = cfg.points;
  opts.pairs = cfg.pairs;
  opts.rank_seeds = cfg.rank_seeds;
  const auto names = suite_names(cfg.suite);
  const RankStrategy strategy = parse_strategy(cfg.strategy);
  const auto variants = variants_of(cfg.variant);
  make_ctx(cfg.N, cfg.n, Variant::Plus);  // validates N and n up front

  std::vector<SuiteReport> reports;
  for (const auto& s : names) {
    if (s == "relations" || s == "markov" || s == "basis" || s == "compression") {
      for (Variant v : variants) {
        const RepContext c = make_ctx(cfg.N, cfg.n, v, cfg.perturb);
        if (s == "relations") reports.push_back(relations_suite(c, opts));
        if (s == "markov") reports.push_back(markov_suite(c, opts));
        if (s == "basis") reports.push_back(basis_suite(c, strategy, opts));
        if (s == "compression") {
          if (cfg.suite != "all" && (cfg.r < 1 || cfg.r >= cfg.n)) throw UsageError("compression needs 1 <= r < n");
          if (cfg.suite == "all") {
            for (int r = 1; r < cfg.n; ++r) reports.push_back(compression_suite(c, r));
          } else {
            reports.push_back(compression_suite(c, cfg.r));
          }
        }
      }
    } else if (s == "classical") {
      reports.push_back(classical_limit_suite(cfg.N, cfg.n, opts));
    } else if (s == "dimensions") {
      reports.push_back(dimension_suite(cfg.suite == "all" ? 8 : std::min(cfg.n_max, 8)));
    } else if (s == "variant-iso") {
      reports.push_back(variant_iso_suite(cfg.N, cfg.n));
    }
  }
  for (auto& r : reports) r.seed = cfg.seed;

  bool ok = true;
  ordered_json j;
  j["seed"] = cfg.seed;
  j["N"] = cfg.N;
  j["n"] = cfg.n;
  if (!cfg.perturb.empty()) j["perturbation"] = cfg.perturb;
  j["reports"] = ordered_json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    j["reports"].push_back(ordered_json::parse(r.to_json()));
  }
  j["passed"] = ok;

  if (cfg.format == "text") {
    std::ostringstream out;
    out << "# seed=" << cfg.seed << (cfg.perturb.empty() ? "" : " perturbation=" + cfg.perturb) << "\n";
    for (const auto& r : reports) {
      for (const auto& c : r.claims) {
        out << (c.pass ? "ok   " : "FAIL ") << r.suite << "/" << r.variant << " N=" << r.N << " n=" << r.n << " "
            << c.id << ": " << c.statement << (c.pass ? "" : "\n     witness: " + c.witness) << "\n";
      }
      if (r.certificate) out << "     certificate " << r.certificate->to_json() << "\n";
    }
    emit(cfg, out.str());
  } else {
    emit(cfg, j.dump(2));
  }
  return ok ? 0 : 1;
}

AlgebraExpr parse_for(const RunConfig& cfg) {
  AlgebraExpr x;
  try {
    x = AlgebraExpr::parse(cfg.expr);
    x.validate(cfg.n);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad expression: ") + e.what());
  }
  return x;
}

int cmd_trace(const RunConfig& cfg) {
  const AlgebraExpr x = parse_for(cfg);
  const auto variants = variants_of(cfg.variant == "both" ? "plus" : cfg.variant);
  const RepContext c = make_ctx(cfg.N, cfg.n, variants.front());
  const TraceReport r = trace_report(c, x);
  if (cfg.format == "json") {
    ordered_json j = ordered_json::parse(r.to_json());
    j["seed"] = cfg.seed;
    emit(cfg, j.dump(2));
  } else if (cfg.format == "csv") {
    emit(cfg, "# seed=" + std::to_string(cfg.seed) + "\n" + trace_reports_csv({r}));
  } else {
    emit(cfg, r.value.str());
  }
  return 0;
}

int cmd_matrix(const RunConfig& cfg) {
  const AlgebraExpr x = parse_for(cfg);
  const auto variants = variants_of(cfg.variant == "both" ? "plus" : cfg.variant);
  const RepContext c = make_ctx(cfg.N, cfg.n, variants.front());
  Representation rep(c);
  const SymMatrix m = rep.evaluate(x);
  ordered_json j;
  j["seed"] = cfg.seed;
  j["expression"] = x.str();
  j["variant"] = variant_name(c.variant);
  j["N"] = c.N;
  j["n"] = c.n;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  auto entries = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& [k, f] : m.row(i)) entries.push_back({i, k, f.str()});
  }
  j["entries"] = entries;
  emit(cfg, j.dump(cfg.format == "text" ? -1 : 2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Centralizer tower C_n: combinatorics, representation, traces and verification"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file; flags override it");
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "random seed, recorded in every output")->capture_default_str();
    sub->add_option("--output,-o", cfg.output, "write to this path instead of stdout");
  };
  auto ctx_opts = [&](CLI::App* sub) {
    sub->add_option("--N", cfg.N, "odd dimension N >= 3")->capture_default_str();
    sub->add_option("--n", cfg.n, "number of tensor factors")->capture_default_str();
    sub->add_option("--variant", cfg.variant, "plus, minus or both")
        ->check(CLI::IsMember({"plus", "minus", "both"}))
        ->capture_default_str();
  };

  auto* br = app.add_subcommand("bratteli", "Bratteli diagram and multiplicities");
  br->add_option("--N", cfg.N, "odd dimension N >= 3")->capture_default_str();
  br->add_option("--depth", cfg.depth, "number of levels")->capture_default_str();
  br->add_option("--format", cfg.format, "csv (last level), dot, json or text")
      ->check(CLI::IsMember({"csv", "dot", "json", "text"}));
  common(br);

  auto* dims = app.add_subcommand("dims", "dim C_n with its breakdown by r");
  dims->add_option("--n-max", cfg.n_max, "largest n, at most 8")->capture_default_str();
  dims->add_option("--format", cfg.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  common(dims);

  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", cfg.suite,
                  "relations, markov, basis, classical, dimensions, variant-iso, compression or all")
      ->capture_default_str();
  ctx_opts(ver);
  ver->add_option("--strategy", cfg.strategy, "rank strategy: symbolic, evaluated or modular")->capture_default_str();
  ver->add_option("--jobs,-j", cfg.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  ver->add_option("--points", cfg.points, "rational points for sampled Markov checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ver->add_option("--pairs", cfg.pairs, "sampled trace-property pairs")->check(CLI::PositiveNumber)->capture_default_str();
  ver->add_option("--rank-seeds", cfg.rank_seeds, "evaluation points for rank certification")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ver->add_option("--r", cfg.r, "compression depth")->capture_default_str();
  ver->add_option("--n-max", cfg.n_max, "largest n for the dimensions suite")->capture_default_str();
  ver->add_option("--perturb", cfg.perturb, "corrupt the representation on purpose: beta, d-exponent or u-entry")
      ->check(CLI::IsMember({"beta", "d-exponent", "u-entry"}));
  ver->add_option("--format", cfg.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  common(ver);

  auto* tr = app.add_subcommand("trace", "Markov trace phi of an expression");
  tr->add_option("--expr", cfg.expr, "expression such as \"e(2)\" or \"g1*u2 + 3\"")->required();
  ctx_opts(tr);
  tr->add_option("--format", cfg.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  common(tr);

  auto* mx = app.add_subcommand("matrix", "matrix of an expression on V^{⊗n}");
  mx->add_option("--expr", cfg.expr, "expression")->required();
  ctx_opts(mx);
  mx->add_option("--format", cfg.format, "json or text (single line)")->check(CLI::IsMember({"json", "text"}));
  common(mx);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*br) return cmd_bratteli(cfg);
    if (*dims) return cmd_dims(cfg);
    if (*ver) return cmd_verify(cfg);
    if (*tr) return cmd_trace(cfg);
    if (*mx) return cmd_matrix(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
