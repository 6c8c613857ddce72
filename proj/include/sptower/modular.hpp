#pragma once

// Arithmetic modulo a 62-bit prime p = 1 (mod 4), where i has a square root.
// The modulus is thread-local and installed with ModP::Scope, so ModP values
// carry no per-value state and fit the generic matrix kernel.

#include <cstdint>
#include <string>

#include "sptower/exact.hpp"

namespace sptower {

struct PrimeField {
  std::uint64_t p = 0;
  std::uint64_t sqrt_minus_one = 0;  // a fixed root of x^2 + 1
};

/// Deterministic for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Seeded search for p = 1 (mod 4) in [2^61, 2^62) with a square root of -1.
PrimeField choose_prime_field(std::uint64_t seed);

class ModP {
 public:
  class Scope {
   public:
    explicit Scope(const PrimeField& f);
    ~Scope();
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    PrimeField saved_;
  };

  static const PrimeField& field();

  ModP() = default;
  ModP(int v);
  static ModP raw(std::uint64_t v) {
    ModP x;
    x.v_ = v;
    return x;
  }
  static ModP imaginary_unit() { return raw(field().sqrt_minus_one); }
  /// Reduction of a rational; throws std::domain_error if p divides the denominator.
  static ModP from_rational(const mpq_class& x);
  static ModP from_gaussian(const GaussianRational& x);

  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  ModP inverse() const;
  ModP pow(std::uint64_t e) const;

  ModP operator-() const { return raw(v_ == 0 ? 0 : field().p - v_); }
  ModP& operator+=(ModP o);
  ModP& operator-=(ModP o) { return *this += -o; }
  ModP& operator*=(ModP o);
  ModP& operator/=(ModP o) { return *this *= o.inverse(); }
  friend ModP operator+(ModP a, ModP b) { return a += b; }
  friend ModP operator-(ModP a, ModP b) { return a -= b; }
  friend ModP operator*(ModP a, ModP b) { return a *= b; }
  friend ModP operator/(ModP a, ModP b) { return a /= b; }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

  std::string str() const { return std::to_string(v_); }

 private:
  std::uint64_t v_ = 0;
};

/// f(s = point) in the current field; throws std::domain_error at a pole.
ModP evaluate_mod(const RatFunc& f, ModP point);

}  // namespace sptower
