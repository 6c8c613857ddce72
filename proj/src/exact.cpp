#include "sptower/exact.hpp"

#include <algorithm>
#include <optional>

#include "sptower/modular.hpp"
#include <cctype>
#include <stdexcept>
#include <utility>

namespace sptower {

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::fraction(long p, long q) {
  if (q == 0) throw std::domain_error("division by zero");
  mpq_class v(p, q);
  v.canonicalize();
  return GaussianRational(v);
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_real()) return GaussianRational(mpq_class(1) / re_);
  mpq_class norm = re_ * re_ + im_ * im_;
  return GaussianRational(re_ / norm, -im_ / norm);
}

GaussianRational GaussianRational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  GaussianRational result(1);
  GaussianRational base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

void GaussianRational::sub_mul(const GaussianRational& a, const GaussianRational& b) {
  thread_local mpq_class t;
  if (a.is_real() && b.is_real()) {
    mpq_mul(t.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
    re_ -= t;
    return;
  }
  mpq_mul(t.get_mpq_t(), a.re_.get_mpq_t(), b.re_.get_mpq_t());
  re_ -= t;
  mpq_mul(t.get_mpq_t(), a.im_.get_mpq_t(), b.im_.get_mpq_t());
  re_ += t;
  mpq_mul(t.get_mpq_t(), a.re_.get_mpq_t(), b.im_.get_mpq_t());
  im_ -= t;
  mpq_mul(t.get_mpq_t(), a.im_.get_mpq_t(), b.re_.get_mpq_t());
  im_ -= t;
}

int GaussianRational::compare(const GaussianRational& o) const {
  int c = cmp(re_, o.re_);
  if (c != 0) return c < 0 ? -1 : 1;
  c = cmp(im_, o.im_);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

namespace {

std::string imaginary_part_str(const mpq_class& magnitude) {
  if (magnitude == 1) return "i";
  return magnitude.get_str() + "*i";
}

}  // namespace

std::string GaussianRational::str() const {
  if (is_real()) return re_.get_str();
  if (sgn(re_) == 0) {
    if (sgn(im_) < 0) return "-" + imaginary_part_str(abs(im_));
    return imaginary_part_str(im_);
  }
  std::string out = "(" + re_.get_str();
  out += sgn(im_) < 0 ? "-" : "+";
  out += imaginary_part_str(abs(im_));
  return out + ")";
}

// ---------------------------------------------------------------------------
// Dense ordinary polynomials over Q(i), used for gcd computations.

namespace {

using Poly = std::vector<GaussianRational>;  // ascending degree, trimmed

void trim_poly(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void make_monic(Poly& p) {
  if (p.empty() || p.back().is_one()) return;
  GaussianRational inv = p.back().inverse();
  for (auto& c : p) c *= inv;
}

// Remainder of a modulo a monic b.
Poly poly_rem_monic(Poly a, const Poly& b) {
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i].is_zero()) continue;
    GaussianRational c = a[i];
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j].sub_mul(c, b[j]);
  }
  a.resize(std::min(a.size(), db));
  trim_poly(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  if (a.size() < b.size()) std::swap(a, b);
  make_monic(b);
  while (!b.empty()) {
    Poly r = poly_rem_monic(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
    make_monic(b);
  }
  make_monic(a);
  return a;
}

// Quotient a / b for monic b, or nullopt when the remainder is nonzero.
std::optional<Poly> poly_div_monic(Poly rem, const Poly& b) {
  const std::size_t db = b.size() - 1;
  if (rem.size() < b.size()) return std::nullopt;
  Poly quo(rem.size() - db);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].is_zero()) continue;
    quo[i - db] = rem[i];
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j].sub_mul(quo[i - db], b[j]);
  }
  for (std::size_t j = 0; j < db; ++j) {
    if (!rem[j].is_zero()) return std::nullopt;
  }
  trim_poly(quo);
  return quo;
}

// Modular shortcut for gcd computations.  The gcd degree is read off modulo
// a fixed prime; when it is positive, the monic gcd is rebuilt from its images
// under both embeddings i -> +-sqrt(-1) by rational reconstruction and then
// confirmed by exact division.  Any failure falls back to Euclid.

using u64 = std::uint64_t;
using u128 = unsigned __int128;

const PrimeField& gcd_field() {
  static const PrimeField f = choose_prime_field(0x9e3779b97f4a7c15ULL);
  return f;
}

u64 mulm(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powm(u64 a, u64 e, u64 p) {
  u64 r = 1;
  while (e > 0) {
    if (e & 1) r = mulm(r, a, p);
    a = mulm(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invm(u64 a, u64 p) { return powm(a, p - 2, p); }

bool rational_mod(const mpq_class& x, u64 p, u64& out) {
  u64 den = mpz_fdiv_ui(x.get_den_mpz_t(), p);
  if (den == 0) return false;
  u64 num = mpz_fdiv_ui(x.get_num_mpz_t(), p);
  out = mulm(num, invm(den, p), p);
  return true;
}

bool image_mod(const Poly& a, u64 p, u64 iota, std::vector<u64>& out) {
  out.assign(a.size(), 0);
  for (std::size_t j = 0; j < a.size(); ++j) {
    u64 re = 0, im = 0;
    if (!rational_mod(a[j].re(), p, re)) return false;
    if (!a[j].is_real() && !rational_mod(a[j].im(), p, im)) return false;
    out[j] = (re + mulm(im, iota, p)) % p;
  }
  return out.back() != 0;
}

void trim_mod(std::vector<u64>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<u64> gcd_mod(std::vector<u64> a, std::vector<u64> b, u64 p) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const u64 inv = invm(b.back(), p);
    const std::size_t db = b.size() - 1;
    for (std::size_t i = a.size(); i-- > db;) {
      if (a[i] == 0) continue;
      const u64 c = mulm(a[i], inv, p);
      for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] + p - mulm(c, b[j], p)) % p;
    }
    a.resize(db);
    trim_mod(a);
    std::swap(a, b);
  }
  const u64 inv = invm(a.back(), p);
  for (auto& x : a) x = mulm(x, inv, p);
  return a;
}

// x = num/den mod p with |num|, den below sqrt(p/2).
bool reconstruct(u64 x, u64 p, mpq_class& out) {
  const __int128 bound = static_cast<__int128>(1) << 30;
  __int128 r0 = p, r1 = x, t0 = 0, t1 = 1;
  while (r1 >= bound) {
    __int128 q = r0 / r1;
    __int128 r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    __int128 t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  if (t1 == 0 || t1 >= bound || t1 <= -bound) return false;
  long long num = static_cast<long long>(r1), den = static_cast<long long>(t1);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  out = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  out.canonicalize();
  return true;
}

// Divides p and d by their gcd in place; false means "use Euclid instead".
bool cancel_modular(Poly& p, Poly& d) {
  const PrimeField& f = gcd_field();
  std::vector<u64> pa, da, pb, db;
  if (!image_mod(p, f.p, f.sqrt_minus_one, pa) || !image_mod(d, f.p, f.sqrt_minus_one, da)) return false;
  std::vector<u64> ga = gcd_mod(pa, da, f.p);
  if (ga.size() == 1) return true;
  const u64 iota_bar = f.p - f.sqrt_minus_one;
  if (!image_mod(p, f.p, iota_bar, pb) || !image_mod(d, f.p, iota_bar, db)) return false;
  std::vector<u64> gb = gcd_mod(pb, db, f.p);
  if (gb.size() != ga.size()) return false;
  const u64 inv2 = invm(2, f.p);
  const u64 inv2i = invm(mulm(2, f.sqrt_minus_one, f.p), f.p);
  Poly g(ga.size());
  for (std::size_t j = 0; j < ga.size(); ++j) {
    const u64 re = mulm((ga[j] + gb[j]) % f.p, inv2, f.p);
    const u64 im = mulm((ga[j] + f.p - gb[j]) % f.p, inv2i, f.p);
    mpq_class a, b;
    if (!reconstruct(re, f.p, a) || !reconstruct(im, f.p, b)) return false;
    g[j] = GaussianRational(a, b);
  }
  if (!g.back().is_one()) return false;
  auto qp = poly_div_monic(p, g);
  if (!qp) return false;
  auto qd = poly_div_monic(d, g);
  if (!qd) return false;
  p = std::move(*qp);
  d = std::move(*qd);
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// HalfLaurent

HalfLaurent::HalfLaurent(GaussianRational c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

HalfLaurent HalfLaurent::monomial(GaussianRational c, int exponent) {
  HalfLaurent p(std::move(c));
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

HalfLaurent HalfLaurent::from_coeffs(int low, std::vector<GaussianRational> coeffs) {
  HalfLaurent p;
  p.low_ = low;
  p.coeffs_ = std::move(coeffs);
  p.trim();
  return p;
}

void HalfLaurent::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    low_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) low_ = 0;
}

GaussianRational HalfLaurent::coeff(int exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return {};
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

bool HalfLaurent::all_exponents_even() const {
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (!coeffs_[j].is_zero() && ((low_ + static_cast<int>(j)) % 2 != 0)) return false;
  }
  return true;
}

HalfLaurent HalfLaurent::shifted(int k) const {
  HalfLaurent p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

HalfLaurent HalfLaurent::substitute(const GaussianRational& unit) const {
  HalfLaurent p = *this;
  if (is_zero()) return p;
  GaussianRational power = unit.pow(low_);
  for (auto& c : p.coeffs_) {
    c *= power;
    power *= unit;
  }
  p.trim();
  return p;
}

HalfLaurent HalfLaurent::inverted() const {
  HalfLaurent p;
  if (is_zero()) return p;
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  p.low_ = -high();
  return p;
}

GaussianRational HalfLaurent::evaluate(const GaussianRational& point) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= point;
    acc += *it;
  }
  if (low_ != 0 && !acc.is_zero()) acc *= point.pow(low_);
  return acc;
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), GaussianRational());
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
    coeffs_[static_cast<std::size_t>(o.low_ - lo) + j] += o.coeffs_[j];
  }
  trim();
  return *this;
}

HalfLaurent& HalfLaurent::operator-=(const HalfLaurent& o) { return *this += -o; }

HalfLaurent& HalfLaurent::operator*=(const GaussianRational& c) {
  if (c.is_zero()) return *this = HalfLaurent();
  if (c.is_one()) return *this;
  for (auto& x : coeffs_) x *= c;
  return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent p;
  if (a.is_zero() || b.is_zero()) return p;
  if (a.is_monomial()) {
    p = b * a.coeffs_[0];
    p.low_ += a.low_;
    return p;
  }
  if (b.is_monomial()) {
    p = a * b.coeffs_[0];
    p.low_ += b.low_;
    return p;
  }
  p.low_ = a.low_ + b.low_;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, GaussianRational());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  p.trim();
  return p;
}

int HalfLaurent::compare(const HalfLaurent& o) const {
  if (low_ != o.low_) return low_ < o.low_ ? -1 : 1;
  if (coeffs_.size() != o.coeffs_.size()) return coeffs_.size() < o.coeffs_.size() ? -1 : 1;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    int c = coeffs_[j].compare(o.coeffs_[j]);
    if (c != 0) return c;
  }
  return 0;
}

std::string HalfLaurent::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t j = coeffs_.size(); j-- > 0;) {
    const GaussianRational& c = coeffs_[j];
    if (c.is_zero()) continue;
    const int e = low_ + static_cast<int>(j);
    bool negative = false;
    std::string magnitude;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      mpq_class m = abs(c.re());
      magnitude = (m == 1) ? "" : m.get_str();
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      mpq_class m = abs(c.im());
      magnitude = (m == 1) ? "i" : m.get_str() + "*i";
    } else {
      magnitude = c.str();
    }
    std::string mono;
    if (e == 1) {
      mono = "s";
    } else if (e != 0) {
      mono = "s^" + std::to_string(e);
    }
    std::string term;
    if (magnitude.empty() && mono.empty()) {
      term = "1";
    } else if (magnitude.empty()) {
      term = mono;
    } else if (mono.empty()) {
      term = magnitude;
    } else {
      term = magnitude + "*" + mono;
    }
    if (first) {
      out += negative ? "-" : "";
    } else {
      out += negative ? "-" : "+";
    }
    out += term;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// RatFunc

namespace {

// Builds num/den assuming gcd(num, den) is already a unit.
RatFunc from_coprime(HalfLaurent num, HalfLaurent den) { return normalize(std::move(num), std::move(den)); }

}  // namespace

RatFunc normalize(HalfLaurent num, HalfLaurent den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  RatFunc out;
  if (num.is_zero()) return out;
  if (den.is_monomial()) {
    out.num_ = num.shifted(-den.low()) * den.leading().inverse();
    return out;
  }
  const int offset = num.low() - den.low();
  Poly p = num.coeffs();
  Poly d = den.coeffs();
  if (p.size() > 1 && !cancel_modular(p, d)) {
    Poly g = poly_gcd(p, d);
    if (g.size() > 1) {
      p = *poly_div_monic(std::move(p), g);
      d = *poly_div_monic(std::move(d), g);
    }
  }
  if (!d.back().is_one()) {
    GaussianRational inv = d.back().inverse();
    for (auto& c : p) c *= inv;
    for (auto& c : d) c *= inv;
  }
  out.num_ = HalfLaurent::from_coeffs(offset, std::move(p));
  out.den_ = HalfLaurent::from_coeffs(0, std::move(d));
  return out;
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero polynomial");
  return from_coprime(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFunc result(1);
  RatFunc base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

RatFunc RatFunc::substitute(const GaussianRational& unit) const {
  return from_coprime(num_.substitute(unit), den_.substitute(unit));
}

RatFunc RatFunc::inverted() const { return from_coprime(num_.inverted(), den_.inverted()); }

RatFunc RatFunc::times_monomial(const GaussianRational& c, int e) const {
  RatFunc out;
  if (c.is_zero() || is_zero()) return out;
  out.num_ = num_.shifted(e);
  if (!c.is_one()) out.num_ *= c;
  out.den_ = den_;
  return out;
}

GaussianRational RatFunc::evaluate(const GaussianRational& point) const {
  if (point.is_zero()) throw std::domain_error("evaluation point must be nonzero");
  GaussianRational d = den_.evaluate(point);
  if (d.is_zero()) throw std::domain_error("pole at evaluation point");
  if (den_.is_one()) return num_.evaluate(point);
  return num_.evaluate(point) / d;
}

GaussianRational RatFunc::evaluate_q(const GaussianRational& q_value) const {
  if (!depends_only_on_q()) throw std::invalid_argument("function involves odd powers of s");
  if (q_value.is_zero()) throw std::domain_error("evaluation point must be nonzero");
  auto eval_in_q = [&](const HalfLaurent& p) {
    GaussianRational acc;
    for (int e = p.high(); e >= p.low(); e -= 2) {
      acc *= q_value;
      acc += p.coeff(e);
    }
    if (!p.is_zero() && p.low() != 0) acc *= q_value.pow(p.low() / 2);
    return acc;
  };
  GaussianRational d = eval_in_q(den_);
  if (d.is_zero()) throw std::domain_error("pole at evaluation point");
  return eval_in_q(num_) / d;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) return *this = normalize(num_ + o.num_, den_);
  if (o.den_.is_one()) return *this = normalize(num_ + o.num_ * den_, den_);
  if (den_.is_one()) return *this = normalize(num_ * o.den_ + o.num_, o.den_);
  return *this = normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = RatFunc();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  return *this = normalize(num_ * o.num_, den_ * o.den_);
}

std::string RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// RatFuncSum

void RatFuncSum::add_raw(HalfLaurent num, const HalfLaurent& den_a, const HalfLaurent& den_b) {
  for (auto& g : groups_) {
    if ((g.den_a == den_a && g.den_b == den_b) || (g.den_a == den_b && g.den_b == den_a)) {
      g.num += num;
      return;
    }
  }
  groups_.push_back(Group{den_a, den_b, std::move(num)});
}

void RatFuncSum::add(const RatFunc& a) {
  if (a.is_zero()) return;
  static const HalfLaurent one(1);
  add_raw(a.num(), a.den(), one);
}

void RatFuncSum::add_product(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return;
  add_raw(a.num() * b.num(), a.den(), b.den());
}

RatFunc RatFuncSum::result() const {
  RatFunc total;
  for (const auto& g : groups_) {
    if (g.num.is_zero()) continue;
    if (g.den_b.is_one()) {
      total += normalize(g.num, g.den_a);
    } else if (g.den_a.is_one()) {
      total += normalize(g.num, g.den_b);
    } else {
      total += normalize(g.num, g.den_a * g.den_b);
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// q-numbers

RatFunc q_number(QNumberKind kind, int arg) {
  switch (kind) {
    case QNumberKind::Integer: {
      if (arg <= 0) throw std::invalid_argument("q-number argument must be positive");
      std::vector<GaussianRational> c(static_cast<std::size_t>(4 * (arg - 1) + 1));
      for (int j = 0; j < arg; ++j) c[static_cast<std::size_t>(4 * j)] = 1;
      return RatFunc(HalfLaurent::from_coeffs(-2 * (arg - 1), std::move(c)));
    }
    case QNumberKind::HalfInteger: {
      if (arg < 0) throw std::invalid_argument("half-integer q-number argument must be positive");
      HalfLaurent num = HalfLaurent::monomial(1, 2 * arg + 1) - HalfLaurent::monomial(1, -2 * arg - 1);
      HalfLaurent den = HalfLaurent::monomial(1, 2) - HalfLaurent::monomial(1, -2);
      return normalize(num, den);
    }
    case QNumberKind::Plus:
    case QNumberKind::Minus: {
      if (arg <= 0) throw std::invalid_argument("bracket argument must be positive");
      if (kind == QNumberKind::Minus && arg % 2 == 0) {
        throw std::invalid_argument("[N]_- is a Laurent polynomial only for odd N");
      }
      std::vector<GaussianRational> c(static_cast<std::size_t>(2 * (arg - 1) + 1));
      for (int j = 0; j < arg; ++j) {
        c[static_cast<std::size_t>(2 * j)] = (kind == QNumberKind::Minus && j % 2 == 1) ? -1 : 1;
      }
      return RatFunc(HalfLaurent::from_coeffs(-(arg - 1), std::move(c)));
    }
  }
  throw std::invalid_argument("unknown q-number kind");
}

// ---------------------------------------------------------------------------
// Parser for the scalar grammar:
//   expr  := ['+'|'-'] term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary)*
//   unary := '-' unary | power
//   power := atom ['^' ['-'] integer]
//   atom  := integer | 's' | 'q' | 'i' | '[' integer ']' | '(' expr ')'

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  RatFunc parse_all() {
    RatFunc v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse scalar '" + std::string(text_) + "': " + what + " at offset " +
                                std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  int small_integer() {
    mpz_class v = integer();
    if (!v.fits_sint_p()) fail("integer too large");
    return static_cast<int>(v.get_si());
  }

  RatFunc expr() {
    RatFunc v;
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    v = term();
    if (negate) v = -v;
    while (true) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  RatFunc term() {
    RatFunc v = unary();
    while (true) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        RatFunc d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  RatFunc unary() {
    if (accept('-')) return -unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (accept('^')) {
      bool negative = accept('-');
      int e = small_integer();
      if (negative && base.is_zero()) fail("negative power of zero");
      return base.pow(negative ? -e : e);
    }
    return base;
  }

  RatFunc atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(GaussianRational(mpq_class(integer())));
    if (c == 's') {
      ++pos_;
      return RatFunc::s();
    }
    if (c == 'q') {
      ++pos_;
      return RatFunc::q();
    }
    if (c == 'i') {
      ++pos_;
      return RatFunc(GaussianRational::imaginary_unit());
    }
    if (accept('[')) {
      int m = small_integer();
      if (!accept(']')) fail("expected ']'");
      return q_int(m);
    }
    if (accept('(')) {
      RatFunc v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc RatFunc::parse(std::string_view text) { return ScalarParser(text).parse_all(); }

}  // namespace sptower
