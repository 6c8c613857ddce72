#include "sptower/combin.hpp"

#include "json.hpp"
#include <sstream>
#include <stdexcept>

namespace sptower {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw std::invalid_argument("Young diagram rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1]) throw std::invalid_argument("Young diagram rows must be weakly decreasing");
  }
}

int YoungDiagram::size() const {
  int n = 0;
  for (int r : rows_) n += r;
  return n;
}

std::string YoungDiagram::str() const {
  if (rows_.empty()) return "∅";
  std::string out = "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(rows_[i]);
  }
  return out + "]";
}

YoungDiagram YoungDiagram::parse(const std::string& text) {
  if (text == "∅" || text == "[]" || text.empty()) return YoungDiagram();
  if (text.front() != '[' || text.back() != ']') throw std::invalid_argument("cannot parse diagram '" + text + "'");
  std::vector<int> rows;
  std::stringstream ss(text.substr(1, text.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      rows.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse diagram '" + text + "'");
    }
  }
  return YoungDiagram(std::move(rows));
}

bool operator<(const YoungDiagram& a, const YoungDiagram& b) {
  const int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.rows_ > b.rows_;
}

std::vector<YoungDiagram> fusion_step(const YoungDiagram& lambda, std::optional<int> row_limit) {
  std::vector<YoungDiagram> out{lambda};
  const auto& rows = lambda.rows();
  const int m = lambda.num_rows();
  for (int i = 0; i < m; ++i) {
    if (i + 1 < m && rows[static_cast<std::size_t>(i + 1)] == rows[static_cast<std::size_t>(i)]) continue;
    std::vector<int> r = rows;
    if (--r[static_cast<std::size_t>(i)] == 0) r.pop_back();
    out.emplace_back(std::move(r));
  }
  for (int i = 0; i <= m; ++i) {
    if (i > 0 && lambda.part(i) == lambda.part(i - 1)) continue;
    if (row_limit && i + 1 > *row_limit) continue;
    std::vector<int> r = rows;
    if (i == m) {
      r.push_back(1);
    } else {
      ++r[static_cast<std::size_t>(i)];
    }
    out.emplace_back(std::move(r));
  }
  return out;
}

std::uint64_t BratteliGraph::multiplicity(int level, const YoungDiagram& lambda) const {
  if (level < 0 || level >= static_cast<int>(levels.size())) throw std::out_of_range("Bratteli level out of range");
  const auto& lv = levels[static_cast<std::size_t>(level)];
  auto it = lv.find(lambda);
  return it == lv.end() ? 0 : it->second;
}

std::string BratteliGraph::to_dot() const {
  std::ostringstream out;
  out << "digraph bratteli {\n  rankdir=TB;\n";
  auto id = [](std::size_t level, const YoungDiagram& d) { return "\"" + std::to_string(level) + "/" + d.str() + "\""; };
  for (std::size_t l = 0; l < levels.size(); ++l) {
    for (const auto& [d, m] : levels[l]) {
      out << "  " << id(l, d) << " [label=\"" << d.str() << " (" << m << ")\"];\n";
    }
  }
  const int row_limit = (N - 1) / 2;
  for (std::size_t l = 0; l + 1 < levels.size(); ++l) {
    for (const auto& [d, m] : levels[l]) {
      for (const auto& next : fusion_step(d, row_limit)) {
        out << "  " << id(l, d) << " -> " << id(l + 1, next) << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

std::string BratteliGraph::to_json() const {
  nlohmann::ordered_json j;
  j["N"] = N;
  j["levels"] = nlohmann::ordered_json::array();
  for (const auto& lv : levels) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [d, m] : lv) arr.push_back({{"diagram", d.rows()}, {"label", d.str()}, {"multiplicity", m}});
    j["levels"].push_back(arr);
  }
  return j.dump(2);
}

std::string BratteliGraph::level_csv(int level) const {
  std::ostringstream out;
  out << "diagram,multiplicity\n";
  for (const auto& [d, m] : levels.at(static_cast<std::size_t>(level))) out << "\"" << d.str() << "\"," << m << "\n";
  return out.str();
}

BratteliGraph bratteli(int N, int depth) {
  if (N < 3 || N % 2 == 0) throw std::invalid_argument("N must be odd and at least 3");
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");
  BratteliGraph g;
  g.N = N;
  const int row_limit = (N - 1) / 2;
  g.levels.push_back({{YoungDiagram(), 1}});
  for (int l = 0; l < depth; ++l) {
    std::map<YoungDiagram, std::uint64_t> next;
    for (const auto& [d, m] : g.levels.back()) {
      for (const auto& nb : fusion_step(d, row_limit)) next[nb] += m;
    }
    g.levels.push_back(std::move(next));
  }
  return g;
}

std::uint64_t hook_dim(const YoungDiagram& lambda) {
  const auto& rows = lambda.rows();
  mpz_class num = 1, den = 1;
  for (int k = 2; k <= lambda.size(); ++k) num *= k;
  for (int i = 0; i < lambda.num_rows(); ++i) {
    for (int j = 0; j < rows[static_cast<std::size_t>(i)]; ++j) {
      int below = 0;
      while (i + below + 1 < lambda.num_rows() && rows[static_cast<std::size_t>(i + below + 1)] > j) ++below;
      den *= rows[static_cast<std::size_t>(i)] - j + below;
    }
  }
  mpz_class q = num / den;
  return q.get_ui();
}

std::uint64_t involution_number(int r) {
  if (r < 0) throw std::invalid_argument("r must be nonnegative");
  std::uint64_t prev = 1, cur = 1;  // h_0, h_1
  for (int j = 1; j < r; ++j) {
    std::uint64_t next = cur + static_cast<std::uint64_t>(j) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t b = 1;
  for (int j = 1; j <= k; ++j) b = b * static_cast<std::uint64_t>(n - k + j) / static_cast<std::uint64_t>(j);
  return b;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial argument out of range");
  std::uint64_t f = 1;
  for (int j = 2; j <= n; ++j) f *= static_cast<std::uint64_t>(j);
  return f;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<YoungDiagram>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> partitions_of(int size) {
  std::vector<YoungDiagram> out;
  std::vector<int> cur;
  partitions_rec(size, size, cur, out);
  return out;
}

std::uint64_t multiplicity_closed_form(int n, const YoungDiagram& lambda) {
  const int l = lambda.size();
  if (l > n) return 0;
  return involution_number(n - l) * binomial(n, l) * hook_dim(lambda);
}

std::uint64_t multiplicity_by_paths(int n, const YoungDiagram& lambda, int N) {
  return bratteli(N, n).multiplicity(n, lambda);
}

std::uint64_t multiplicity(int n, const YoungDiagram& lambda, int N) {
  if (N % 2 == 0) throw std::invalid_argument("N must be odd");
  if (N > 2 * n) return multiplicity_closed_form(n, lambda);
  return multiplicity_by_paths(n, lambda, N);
}

std::uint64_t end_dim_term(int n, int r) {
  const std::uint64_t h = involution_number(r);
  return h * h * (factorial(n) / factorial(r)) * binomial(n, r);
}

std::uint64_t end_dim_closed_form(int n) {
  std::uint64_t total = 0;
  for (int r = 0; r <= n; ++r) total += end_dim_term(n, r);
  return total;
}

std::uint64_t end_dim_by_paths(int n, int N) {
  std::uint64_t total = 0;
  const BratteliGraph g = bratteli(N, n);
  for (const auto& [d, m] : g.levels.back()) total += m * m;
  return total;
}

std::uint64_t end_dim(int n, int N) {
  if (N % 2 == 0) throw std::invalid_argument("N must be odd");
  if (N > 2 * n) return end_dim_closed_form(n);
  return end_dim_by_paths(n, N);
}

RatFunc qdim_gl(const YoungDiagram& mu, int N) {
  if (mu.num_rows() > N) throw std::invalid_argument("diagram has more than N rows");
  RatFunc num(1), den(1);
  for (int i = 1; i <= N; ++i) {
    for (int j = i + 1; j <= N; ++j) {
      const int a = mu.part(i - 1) - mu.part(j - 1) + j - i;
      if (a == j - i) continue;
      num *= q_int(a);
      den *= q_int(j - i);
    }
  }
  return num / den;
}

RatFunc qdim_sp(const YoungDiagram& lambda, int k) {
  if (lambda.num_rows() > k) throw std::invalid_argument("diagram has more than k rows");
  RatFunc num(1), den(1);
  for (int i = 1; i <= k; ++i) {
    const int li = lambda.part(i - 1);
    for (int j = i + 1; j <= k; ++j) {
      const int lj = lambda.part(j - 1);
      num *= q_int(li - lj + j - i) * q_int(li + lj + 2 * k + 2 - i - j);
      den *= q_int(j - i) * q_int(2 * k + 2 - i - j);
    }
    num *= q_int(2 * li + 2 * k + 2 - 2 * i);
    den *= q_int(2 * k + 2 - 2 * i);
  }
  return num / den;
}

std::uint64_t wb_dim(int n, int r, const YoungDiagram& lambda, const YoungDiagram& mu) {
  if (lambda.size() != r || mu.size() != n - r) throw std::invalid_argument("diagram sizes do not match (r, n-r)");
  return binomial(n, r) * hook_dim(lambda) * hook_dim(mu);
}

}  // namespace sptower
