#pragma once

// Exact scalar tower: Gaussian rationals, Laurent polynomials in s = q^(1/2)
// and reduced rational functions in s.  No floating point anywhere.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sptower {

/// Complex number a + b*i with arbitrary-precision rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}
  GaussianRational(long v) : re_(v) {}
  GaussianRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }
  GaussianRational(mpq_class re, mpq_class im);

  static GaussianRational imaginary_unit() { return GaussianRational(0, 1); }
  /// p/q as a real Gaussian rational; throws on q == 0.
  static GaussianRational fraction(long p, long q);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return is_real() && re_ == 1; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }
  /// Throws std::domain_error for zero.
  GaussianRational inverse() const;
  GaussianRational pow(int e) const;

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }
  /// *this -= a * b without temporaries on the heap.
  void sub_mul(const GaussianRational& a, const GaussianRational& b);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Total order (re first, then im); only used for deterministic keys.
  int compare(const GaussianRational& o) const;

  /// "3/4", "-i", "2*i", "(1/2-3*i)".
  std::string str() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Finite Laurent polynomial in s with Gaussian-rational coefficients.
/// Stored densely from the lowest exponent; no leading or trailing zeros.
class HalfLaurent {
 public:
  HalfLaurent() = default;
  HalfLaurent(int c) : HalfLaurent(GaussianRational(c)) {}
  HalfLaurent(GaussianRational c);

  static HalfLaurent monomial(GaussianRational c, int exponent);
  static HalfLaurent s() { return monomial(1, 1); }
  static HalfLaurent q() { return monomial(1, 2); }
  /// coeffs[j] multiplies s^(low + j).
  static HalfLaurent from_coeffs(int low, std::vector<GaussianRational> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  bool is_constant() const { return is_zero() || (is_monomial() && low_ == 0); }
  bool is_one() const { return is_constant() && !is_zero() && coeffs_[0].is_one(); }
  /// Lowest / highest exponent; zero polynomial reports 0.
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  GaussianRational coeff(int exponent) const;
  const GaussianRational& leading() const { return coeffs_.back(); }
  bool all_exponents_even() const;

  HalfLaurent shifted(int k) const;
  /// s -> unit * s.
  HalfLaurent substitute(const GaussianRational& unit) const;
  /// s -> s^-1.
  HalfLaurent inverted() const;
  GaussianRational evaluate(const GaussianRational& point) const;

  HalfLaurent operator-() const;
  HalfLaurent& operator+=(const HalfLaurent& o);
  HalfLaurent& operator-=(const HalfLaurent& o);
  HalfLaurent& operator*=(const GaussianRational& c);
  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator-(HalfLaurent a, const HalfLaurent& b) { return a -= b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  friend HalfLaurent operator*(HalfLaurent a, const GaussianRational& c) { return a *= c; }
  friend bool operator==(const HalfLaurent& a, const HalfLaurent& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }
  int compare(const HalfLaurent& o) const;

  std::string str() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<GaussianRational> coeffs_;
};

/// Reduced quotient num/den of Laurent polynomials.  Canonical form: den has
/// lowest exponent 0 and leading coefficient 1, gcd(num, den) is a unit, so
/// equality is coefficient-wise.
class RatFunc {
 public:
  RatFunc() = default;
  RatFunc(int c) : num_(c) {}
  RatFunc(GaussianRational c) : num_(std::move(c)) {}
  RatFunc(HalfLaurent p) : num_(std::move(p)) {}

  static RatFunc s() { return RatFunc(HalfLaurent::s()); }
  static RatFunc q() { return RatFunc(HalfLaurent::q()); }
  /// Parses the textual grammar produced by str(); throws std::invalid_argument.
  static RatFunc parse(std::string_view text);

  const HalfLaurent& num() const { return num_; }
  const HalfLaurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }

  RatFunc inverse() const;
  RatFunc pow(int e) const;
  /// s -> unit * s (unit a fourth root of unity in practice).
  RatFunc substitute(const GaussianRational& unit) const;
  /// s -> s^-1.
  RatFunc inverted() const;
  /// c * s^e * this; monomials are units, so no reduction is needed.
  RatFunc times_monomial(const GaussianRational& c, int e) const;
  /// Value at s = point; throws on point == 0 or a pole.
  GaussianRational evaluate(const GaussianRational& point) const;
  /// Value at q = q_value for functions of q alone (even s-exponents only).
  GaussianRational evaluate_q(const GaussianRational& q_value) const;
  bool depends_only_on_q() const { return num_.all_exponents_even() && den_.all_exponents_even(); }

  RatFunc operator-() const;
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o) { return *this *= o.inverse(); }
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str() const;

 private:
  friend RatFunc normalize(HalfLaurent num, HalfLaurent den);
  HalfLaurent num_;
  HalfLaurent den_{1};
};

/// Reduces num/den to canonical form; throws std::domain_error
/// "division by zero polynomial" when den == 0.
RatFunc normalize(HalfLaurent num, HalfLaurent den);

/// Sum of products of RatFuncs that defers reduction: terms are grouped by
/// the pair of factor denominators, each group is normalized once in result().
class RatFuncSum {
 public:
  void add(const RatFunc& a);
  void add_product(const RatFunc& a, const RatFunc& b);
  RatFunc result() const;
  bool empty() const { return groups_.empty(); }
  void clear() { groups_.clear(); }

 private:
  struct Group {
    HalfLaurent den_a;
    HalfLaurent den_b;
    HalfLaurent num;
  };
  void add_raw(HalfLaurent num, const HalfLaurent& den_a, const HalfLaurent& den_b);
  std::vector<Group> groups_;
};

enum class QNumberKind { Integer, HalfInteger, Plus, Minus };

/// Integer: [m] = (q^m - q^-m)/(q - q^-1).
/// HalfInteger: [m + 1/2], argument m >= 0.
/// Plus:  [N]_+ = (s^N - s^-N)/(s - s^-1).
/// Minus: [N]_- = (s^N + s^-N)/(s + s^-1), N odd.
RatFunc q_number(QNumberKind kind, int arg);
inline RatFunc q_int(int m) { return q_number(QNumberKind::Integer, m); }

}  // namespace sptower
