#pragma once

// Executable checks of the algebra's claims, grouped into suites, and the
// rank certification of the spanning family.

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "sptower/traces.hpp"

namespace sptower {

struct ClaimResult {
  std::string id;
  std::string statement;
  bool pass = false;
  std::string witness;  // empty iff pass
};

enum class RankStrategy { Symbolic, Evaluated, Modular };
std::string strategy_name(RankStrategy s);
RankStrategy parse_strategy(const std::string& text);

struct RankCertificate {
  std::size_t family_size = 0;
  RankStrategy strategy = RankStrategy::Symbolic;
  std::vector<std::string> points;          // one per seed
  std::vector<std::size_t> ranks;           // rank at each point
  std::optional<std::uint64_t> modulus;     // modular strategy and modular pre-pass
  std::uint64_t seed = 0;
  std::size_t rank = 0;                     // best rank over the points
  bool certified = false;                   // rank == family_size
  std::string note;                         // budget messages

  std::string to_json() const;
};

struct SuiteReport {
  std::string suite;
  std::string variant;
  int N = 0;
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<ClaimResult> claims;
  std::optional<RankCertificate> certificate;

  bool passed() const;
  const ClaimResult* first_failure() const;
  std::string to_json() const;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  int jobs = 1;
  int points = 5;        // random rational points for sampled Markov checks
  int pairs = 200;       // sampled trace-property pairs
  int rank_seeds = 3;    // evaluation points for rank certification
};

/// Runs fn(0..count-1) on up to `jobs` threads; results keep index order.
/// The first exception thrown by any task is rethrown.
template <class T, class Fn>
std::vector<T> parallel_map(int jobs, std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, jobs)), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

/// Seeded rational evaluation points s = a/b, away from +-1.
std::vector<GaussianRational> random_points(std::uint64_t seed, int count);

SuiteReport relations_suite(const RepContext& ctx, const VerifyOptions& opts = {});
SuiteReport markov_suite(const RepContext& ctx, const VerifyOptions& opts = {});
RankCertificate basis_rank(const RepContext& ctx, RankStrategy strategy, const VerifyOptions& opts = {});
/// Wraps basis_rank; the claim passes iff the certificate is certified.
SuiteReport basis_suite(const RepContext& ctx, RankStrategy strategy, const VerifyOptions& opts = {});
/// Minus variant at s = 1.
SuiteReport classical_limit_suite(int N, int n, const VerifyOptions& opts = {});
SuiteReport dimension_suite(int n_max);
SuiteReport variant_iso_suite(int N, int n);
SuiteReport compression_suite(const RepContext& ctx, int r);

/// Rank of the span of the matrices after specializing at s = 1, closed under
/// left multiplication by the seeds.  Reports the number of rounds taken.
struct ClosureResult {
  std::size_t rank = 0;
  int rounds = 0;
};
ClosureResult classical_closure(int N, int n);

}  // namespace sptower
