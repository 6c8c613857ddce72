#include "sptower/modular.hpp"

#include <random>
#include <stdexcept>

namespace sptower {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

thread_local PrimeField current_field;

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These bases are a deterministic witness set below 3.3e24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int j = 1; j < r; ++j) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField choose_prime_field(u64 seed) {
  std::mt19937_64 rng(seed);
  const u64 lo = u64{1} << 61;
  std::uniform_int_distribution<u64> dist(lo, (u64{1} << 62) - 1);
  u64 candidate = dist(rng);
  candidate -= (candidate % 4) - 1;  // candidate = 1 (mod 4)
  if (candidate < lo) candidate += 4;
  while (!is_prime_u64(candidate)) candidate += 4;

  PrimeField f;
  f.p = candidate;
  // A non-residue a gives a^((p-1)/4) with square -1.
  for (u64 a = 2;; ++a) {
    u64 root = pow_mod(a, (candidate - 1) / 4, candidate);
    if (mul_mod(root, root, candidate) == candidate - 1) {
      f.sqrt_minus_one = root;
      break;
    }
  }
  return f;
}

ModP::Scope::Scope(const PrimeField& f) : saved_(current_field) { current_field = f; }

ModP::Scope::~Scope() { current_field = saved_; }

const PrimeField& ModP::field() {
  if (current_field.p == 0) throw std::logic_error("no prime field installed");
  return current_field;
}

ModP::ModP(int v) {
  const u64 p = field().p;
  if (v >= 0) {
    v_ = static_cast<u64>(v) % p;
  } else {
    u64 m = static_cast<u64>(-static_cast<long long>(v)) % p;
    v_ = m == 0 ? 0 : p - m;
  }
}

ModP ModP::from_rational(const mpq_class& x) {
  const u64 p = field().p;
  mpz_class pz;
  mpz_import(pz.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
  auto reduce = [&](const mpz_class& z) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t());
    u64 out = 0;
    mpz_export(&out, nullptr, 1, sizeof(u64), 0, 0, r.get_mpz_t());
    return raw(out);
  };
  ModP den = reduce(x.get_den());
  if (den.is_zero()) throw std::domain_error("denominator vanishes modulo p");
  return reduce(x.get_num()) * den.inverse();
}

ModP ModP::from_gaussian(const GaussianRational& x) {
  ModP re = from_rational(x.re());
  if (x.is_real()) return re;
  return re + from_rational(x.im()) * imaginary_unit();
}

ModP ModP::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return raw(pow_mod(v_, field().p - 2, field().p));
}

ModP ModP::pow(u64 e) const { return raw(pow_mod(v_, e, field().p)); }

ModP& ModP::operator+=(ModP o) {
  const u64 p = field().p;
  v_ += o.v_;
  if (v_ >= p) v_ -= p;
  return *this;
}

ModP& ModP::operator*=(ModP o) {
  v_ = mul_mod(v_, o.v_, field().p);
  return *this;
}

namespace {

ModP evaluate_laurent_mod(const HalfLaurent& f, ModP point) {
  ModP acc;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= point;
    acc += ModP::from_gaussian(*it);
  }
  if (f.low() > 0) acc *= point.pow(static_cast<std::uint64_t>(f.low()));
  if (f.low() < 0) acc *= point.inverse().pow(static_cast<std::uint64_t>(-f.low()));
  return acc;
}

}  // namespace

ModP evaluate_mod(const RatFunc& f, ModP point) {
  if (point.is_zero()) throw std::domain_error("evaluation point must be nonzero");
  ModP d = evaluate_laurent_mod(f.den(), point);
  if (d.is_zero()) throw std::domain_error("pole at evaluation point");
  return evaluate_laurent_mod(f.num(), point) / d;
}

}  // namespace sptower
