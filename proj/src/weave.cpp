#include "sptower/weave.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sptower {

// ---------------------------------------------------------------------------
// Permutations

Permutation::Permutation(int n) : images_(static_cast<std::size_t>(n)) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v - 1)]) {
      throw std::invalid_argument("not a permutation");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::simple(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("simple reflection index out of range");
  Permutation p(n);
  std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
  return p;
}

Permutation Permutation::from_word(int n, const Word& word) {
  Permutation p(n);
  for (int i : word) p = p * simple(n, i);
  return p;
}

Permutation Permutation::longest(int n) {
  Permutation p(n);
  std::reverse(p.images_.begin(), p.images_.end());
  return p;
}

int Permutation::length() const {
  int inv = 0;
  for (std::size_t a = 0; a < images_.size(); ++a) {
    for (std::size_t b = a + 1; b < images_.size(); ++b) inv += images_[a] > images_[b];
  }
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != static_cast<int>(k + 1)) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p(degree());
  for (std::size_t k = 0; k < images_.size(); ++k) p.images_[static_cast<std::size_t>(images_[k] - 1)] = static_cast<int>(k + 1);
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("permutation degree mismatch");
  Permutation p(a.degree());
  for (std::size_t k = 0; k < b.images_.size(); ++k) p.images_[k] = a(b.images_[k]);
  return p;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Word reduced_word(const Permutation& w) {
  Word word;
  Permutation cur = w;
  const int n = w.degree();
  while (!cur.is_identity()) {
    int i = 1;
    while (cur(i) < cur(i + 1)) ++i;
    cur = cur * Permutation::simple(n, i);
    word.push_back(i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<Permutation> min_coset_reps(int n, int r, CosetKind kind) {
  if (r < 0 || r > n) throw std::invalid_argument("coset parameter r out of range");
  std::vector<Permutation> out;
  for (const auto& w : all_permutations(n)) {
    bool ok = true;
    for (int k = 1; k < r && ok; ++k) ok = w(k) < w(k + 1);
    if (kind == CosetKind::Parabolic) {
      for (int k = r + 1; k < n && ok; ++k) ok = w(k) < w(k + 1);
    }
    if (ok) out.push_back(w);
  }
  return out;
}

namespace {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<Word> ladder_set(int r) {
  if (r < 0) throw std::invalid_argument("ladder index must be nonnegative");
  std::vector<Word> prev{Word{}};  // B_0
  std::vector<Word> cur{Word{}};   // B_1
  if (r <= 1) return cur;
  for (int k = 1; k < r; ++k) {  // build B_{k+1} from B_k, B_{k-1}
    std::vector<Word> next = cur;
    for (int j = 1; j <= k; ++j) {
      Word prefix;
      for (int t = j; t <= k; ++t) prefix.push_back(t);
      for (const auto& b : prev) {
        Word w = prefix;
        w.insert(w.end(), b.begin(), b.end());
        next.push_back(std::move(w));
      }
    }
    std::sort(next.begin(), next.end(), shortlex_less);
    next.erase(std::unique(next.begin(), next.end()), next.end());
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Word theta_word(const Word& word, int n) {
  Word out;
  out.reserve(word.size());
  for (int i : word) {
    if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range for theta");
    out.push_back(n - i);
  }
  return out;
}

Word reversed(const Word& word) { return Word(word.rbegin(), word.rend()); }

std::vector<Word> hecke_basis(int n) {
  std::vector<Word> out;
  for (const auto& w : all_permutations(n)) out.push_back(reduced_word(w));
  return out;
}

// ---------------------------------------------------------------------------
// Expressions

std::string Generator::str() const {
  switch (kind) {
    case GenKind::U:
      return "u" + std::to_string(i);
    case GenKind::G:
      return "g" + std::to_string(i);
    case GenKind::E:
      return r == 1 ? "e" : "e(" + std::to_string(r) + ")";
    case GenKind::ZLeft:
      return "zL(" + std::to_string(i) + "," + std::to_string(r) + ")";
    case GenKind::ZRight:
      return "zR(" + std::to_string(i) + "," + std::to_string(r) + ")";
  }
  return "?";
}

AlgebraExpr AlgebraExpr::generator(Generator g) {
  AlgebraExpr x;
  x.kind = Kind::Gen;
  x.gen = g;
  return x;
}

AlgebraExpr AlgebraExpr::constant(RatFunc c) {
  AlgebraExpr x;
  x.kind = Kind::Scalar;
  x.scalar = std::move(c);
  return x;
}

AlgebraExpr AlgebraExpr::sum(std::vector<AlgebraExpr> terms) {
  if (terms.size() == 1) return std::move(terms.front());
  AlgebraExpr x;
  x.kind = Kind::Sum;
  if (terms.empty()) return constant(0);
  x.children = std::move(terms);
  return x;
}

AlgebraExpr AlgebraExpr::product(std::vector<AlgebraExpr> factors) {
  if (factors.empty()) return constant(1);
  if (factors.size() == 1) return std::move(factors.front());
  AlgebraExpr x;
  x.kind = Kind::Product;
  x.children = std::move(factors);
  return x;
}

AlgebraExpr AlgebraExpr::hecke_word(const Word& word) {
  std::vector<AlgebraExpr> f;
  for (int i : word) f.push_back(g(i));
  return product(std::move(f));
}

void AlgebraExpr::validate(int n) const {
  switch (kind) {
    case Kind::Scalar:
      return;
    case Kind::Sum:
    case Kind::Product:
      for (const auto& c : children) c.validate(n);
      return;
    case Kind::Gen:
      break;
  }
  bool ok = true;
  switch (gen.kind) {
    case GenKind::U:
    case GenKind::G:
      ok = gen.i >= 1 && gen.i < n;
      break;
    case GenKind::E:
      ok = gen.r >= 0 && gen.r <= n;
      break;
    case GenKind::ZLeft:
    case GenKind::ZRight:
      ok = gen.i >= 1 && gen.i < gen.r && gen.r < n;
      break;
  }
  if (!ok) throw std::invalid_argument("generator " + gen.str() + " out of range for n=" + std::to_string(n));
}

bool AlgebraExpr::hecke_only() const {
  if (kind == Kind::Gen) return gen.kind == GenKind::U || gen.kind == GenKind::G;
  for (const auto& c : children) {
    if (!c.hecke_only()) return false;
  }
  return true;
}

namespace {

bool scalar_is_atomic(const RatFunc& c) {
  if (!c.is_laurent()) return false;
  const HalfLaurent& p = c.num();
  if (!p.is_monomial()) return false;
  const GaussianRational& k = p.leading();
  return k.is_real() && sgn(k.re()) > 0 && k.re().get_den() == 1;
}

}  // namespace

std::string AlgebraExpr::str() const {
  switch (kind) {
    case Kind::Gen:
      return gen.str();
    case Kind::Scalar:
      return scalar_is_atomic(scalar) ? scalar.str() : "(" + scalar.str() + ")";
    case Kind::Sum: {
      std::string out;
      for (std::size_t j = 0; j < children.size(); ++j) {
        if (j > 0) out += "+";
        out += children[j].str();
      }
      return out;
    }
    case Kind::Product: {
      std::string out;
      for (std::size_t j = 0; j < children.size(); ++j) {
        if (j > 0) out += "*";
        const auto& c = children[j];
        out += c.kind == Kind::Sum ? "(" + c.str() + ")" : c.str();
      }
      return out;
    }
  }
  return "";
}

AlgebraExpr transpose(const AlgebraExpr& x) {
  AlgebraExpr y = x;
  switch (x.kind) {
    case AlgebraExpr::Kind::Scalar:
      return y;
    case AlgebraExpr::Kind::Gen:
      if (x.gen.kind == GenKind::ZLeft) y.gen.kind = GenKind::ZRight;
      if (x.gen.kind == GenKind::ZRight) y.gen.kind = GenKind::ZLeft;
      return y;
    case AlgebraExpr::Kind::Sum:
      for (auto& c : y.children) c = transpose(c);
      return y;
    case AlgebraExpr::Kind::Product:
      std::reverse(y.children.begin(), y.children.end());
      for (auto& c : y.children) c = transpose(c);
      return y;
  }
  return y;
}

AlgebraExpr shift(const AlgebraExpr& x, int m, int new_n) {
  if (!x.hecke_only()) throw std::invalid_argument("shift is defined on Hecke generators only");
  AlgebraExpr y = x;
  if (y.kind == AlgebraExpr::Kind::Gen) {
    y.gen.i += m;
  }
  for (auto& c : y.children) c = shift(c, m, new_n);
  y.validate(new_n);
  return y;
}

// Grammar:
//   sum     := ['-'] product (('+'|'-') product)*
//   product := factor ('*' factor)*
//   factor  := 'u'INT | 'g'INT | 'e' ['(' INT ')'] | 'zL(' INT ',' INT ')' | 'zR(' INT ',' INT ')'
//            | '(' sum ')' | scalar atom (INT, 's', 'q', 'i', '[' INT ']') ['^' ['-'] INT]
namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  AlgebraExpr parse_all() {
    AlgebraExpr x = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse expression '" + std::string(text_) + "': " + what + " at offset " +
                                std::to_string(pos_));
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  AlgebraExpr sum() {
    std::vector<AlgebraExpr> terms;
    bool negate = accept('-');
    terms.push_back(negated(product(), negate));
    while (true) {
      if (accept('+')) {
        terms.push_back(product());
      } else if (accept('-')) {
        terms.push_back(negated(product(), true));
      } else {
        break;
      }
    }
    return AlgebraExpr::sum(std::move(terms));
  }

  static AlgebraExpr negated(AlgebraExpr x, bool negate) {
    if (!negate) return x;
    if (x.kind == AlgebraExpr::Kind::Scalar) return AlgebraExpr::constant(-x.scalar);
    return AlgebraExpr::product({AlgebraExpr::constant(-1), std::move(x)});
  }

  AlgebraExpr product() {
    std::vector<AlgebraExpr> f{factor()};
    while (accept('*')) f.push_back(factor());
    return AlgebraExpr::product(std::move(f));
  }

  AlgebraExpr factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'u' || c == 'g') {
      ++pos_;
      int i = integer();
      return c == 'u' ? AlgebraExpr::u(i) : AlgebraExpr::g(i);
    }
    if (c == 'e') {
      ++pos_;
      int r = 1;
      if (accept('(')) {
        r = integer();
        expect(')');
      }
      return AlgebraExpr::e(r);
    }
    if (c == 'z') {
      ++pos_;
      bool left;
      if (accept('L')) {
        left = true;
      } else if (accept('R')) {
        left = false;
      } else {
        fail("expected zL or zR");
      }
      expect('(');
      int i = integer();
      expect(',');
      int r = integer();
      expect(')');
      return left ? AlgebraExpr::zl(i, r) : AlgebraExpr::zr(i, r);
    }
    if (c == '(') {
      // Either a parenthesized algebra expression or a scalar; try the scalar grammar first.
      std::size_t close = matching_paren(pos_);
      std::string_view inner = text_.substr(pos_ + 1, close - pos_ - 1);
      try {
        RatFunc v = RatFunc::parse(inner);
        pos_ = close + 1;
        return AlgebraExpr::constant(apply_power(std::move(v)));
      } catch (const std::invalid_argument&) {
      }
      ++pos_;
      AlgebraExpr x = sum();
      expect(')');
      return x;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == 's' || c == 'q' || c == 'i' || c == '[') {
      std::size_t start = pos_;
      if (c == '[') {
        ++pos_;
        integer();
        expect(']');
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        integer();
      } else {
        ++pos_;
      }
      RatFunc v = RatFunc::parse(text_.substr(start, pos_ - start));
      return AlgebraExpr::constant(apply_power(std::move(v)));
    }
    fail("unknown symbol");
  }

  RatFunc apply_power(RatFunc v) {
    if (!accept('^')) return v;
    bool negative = accept('-');
    int e = integer();
    if (negative && v.is_zero()) fail("negative power of zero");
    return v.pow(negative ? -e : e);
  }

  std::size_t matching_paren(std::size_t open) const {
    int depth = 0;
    for (std::size_t k = open; k < text_.size(); ++k) {
      if (text_[k] == '(') ++depth;
      if (text_[k] == ')' && --depth == 0) return k;
    }
    throw std::invalid_argument("cannot parse expression '" + std::string(text_) + "': unbalanced parentheses");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraExpr AlgebraExpr::parse(std::string_view text) { return ExprParser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Spanning family

AlgebraExpr SpanningElement::to_expr() const {
  std::vector<AlgebraExpr> f;
  for (int i : left) f.push_back(AlgebraExpr::g(i));
  if (r > 0) f.push_back(AlgebraExpr::e(r));
  for (int i : right) f.push_back(AlgebraExpr::g(i));
  return AlgebraExpr::product(std::move(f));
}

std::vector<SpanningElement> spanning_family(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<SpanningElement> out;
  for (int r = 0; r <= n; ++r) {
    const auto lefts = min_coset_reps(n, r, CosetKind::Left);
    const auto rights = min_coset_reps(n, r, CosetKind::Parabolic);
    const auto ladder = ladder_set(r);
    for (const auto& w1 : lefts) {
      const Word lw = reduced_word(w1);
      for (const auto& b1 : ladder) {
        for (const auto& b2 : ladder) {
          for (const auto& w2 : rights) {
            SpanningElement el;
            el.r = r;
            el.left = lw;
            el.left.insert(el.left.end(), b1.begin(), b1.end());
            el.right = reversed(b2);
            const Word rw = reversed(reduced_word(w2));
            el.right.insert(el.right.end(), rw.begin(), rw.end());
            out.push_back(std::move(el));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace sptower
