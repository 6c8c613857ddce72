#pragma once

// Young-diagram combinatorics for the centralizer tower: the fusion rule with
// V, Bratteli levels, multiplicities, dimension counts and q-dimensions.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sptower/exact.hpp"

namespace sptower {

class YoungDiagram {
 public:
  YoungDiagram() = default;
  /// Throws std::invalid_argument unless rows are positive and weakly decreasing.
  explicit YoungDiagram(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int size() const;
  bool empty() const { return rows_.empty(); }
  /// Row length with zero padding past the last row.
  int part(int i) const { return i < num_rows() ? rows_[static_cast<std::size_t>(i)] : 0; }

  /// "∅", "[2,1]".
  std::string str() const;
  static YoungDiagram parse(const std::string& text);

  friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) { return a.rows_ == b.rows_; }
  /// Size first, then larger first rows first: ∅, [1], [2], [1,1], [3], [2,1], ...
  friend bool operator<(const YoungDiagram& a, const YoungDiagram& b);

 private:
  std::vector<int> rows_;
};

/// λ itself, then remove-a-box neighbors, then add-a-box neighbors (top row
/// first), restricted to at most row_limit rows when given.
std::vector<YoungDiagram> fusion_step(const YoungDiagram& lambda, std::optional<int> row_limit);

struct BratteliGraph {
  int N = 0;
  std::vector<std::map<YoungDiagram, std::uint64_t>> levels;

  std::uint64_t multiplicity(int level, const YoungDiagram& lambda) const;
  std::string to_dot() const;
  std::string to_json() const;
  /// "diagram,multiplicity" rows of one level.
  std::string level_csv(int level) const;
};

/// N odd and at least 3; rows limited to (N-1)/2.
BratteliGraph bratteli(int N, int depth);

std::uint64_t hook_dim(const YoungDiagram& lambda);
std::uint64_t involution_number(int r);
std::uint64_t binomial(int n, int k);
std::uint64_t factorial(int n);

/// All diagrams of the given size, in YoungDiagram order.
std::vector<YoungDiagram> partitions_of(int size);

/// Closed formula when N > 2n, Bratteli path count otherwise.
std::uint64_t multiplicity(int n, const YoungDiagram& lambda, int N);
std::uint64_t multiplicity_closed_form(int n, const YoungDiagram& lambda);
std::uint64_t multiplicity_by_paths(int n, const YoungDiagram& lambda, int N);

/// dim End(V^{⊗n}): closed formula when N > 2n, sum of squared multiplicities otherwise.
std::uint64_t end_dim(int n, int N);
std::uint64_t end_dim_closed_form(int n);
std::uint64_t end_dim_by_paths(int n, int N);
/// Summand h_r^2 n!/r! C(n,r) of the closed formula.
std::uint64_t end_dim_term(int n, int r);

RatFunc qdim_gl(const YoungDiagram& mu, int N);
RatFunc qdim_sp(const YoungDiagram& lambda, int k);

std::uint64_t wb_dim(int n, int r, const YoungDiagram& lambda, const YoungDiagram& mu);

}  // namespace sptower
