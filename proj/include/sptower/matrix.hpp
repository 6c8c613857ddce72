#pragma once

// Sparse row-major matrices over an exact scalar type F (RatFunc,
// GaussianRational or ModP).  Rows hold (column, value) pairs in increasing
// column order; zero values are never stored.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sptower/exact.hpp"

namespace sptower {

/// Accumulates sum a_k * b_k for one output entry of a matrix product.
template <class F>
class ProductAccumulator {
 public:
  void add_product(const F& a, const F& b) {
    value_ += a * b;
    used_ = true;
  }
  bool used() const { return used_; }
  F take() {
    used_ = false;
    return std::exchange(value_, F());
  }

 private:
  F value_{};
  bool used_ = false;
};

template <>
class ProductAccumulator<RatFunc> {
 public:
  void add_product(const RatFunc& a, const RatFunc& b) { sum_.add_product(a, b); }
  bool used() const { return !sum_.empty(); }
  RatFunc take() {
    RatFunc r = sum_.result();
    sum_.clear();
    return r;
  }

 private:
  RatFuncSum sum_;
};

/// First entry where two matrices differ.
template <class F>
struct EntryWitness {
  std::size_t row = 0;
  std::size_t col = 0;
  F lhs{};
  F rhs{};
};

template <class F>
class SparseMatrix {
 public:
  using Entry = std::pair<std::uint32_t, F>;
  using Row = std::vector<Entry>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace_back(static_cast<std::uint32_t>(i), F(1));
    return m;
  }

  static SparseMatrix diagonal(const std::vector<F>& d) {
    SparseMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!d[i].is_zero()) m.rows_[i].emplace_back(static_cast<std::uint32_t>(i), d[i]);
    }
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const Row& row(std::size_t i) const { return rows_[i]; }
  Row& mutable_row(std::size_t i) { return rows_[i]; }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }
  bool is_zero() const { return nnz() == 0; }

  F at(std::size_t i, std::size_t j) const {
    const Row& r = rows_.at(i);
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it != r.end() && it->first == j) return it->second;
    return F();
  }

  /// Pointer to the stored entry, or nullptr for a structural zero.
  const F* find(std::size_t i, std::size_t j) const {
    const Row& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const Entry& e, std::size_t c) { return e.first < c; });
    return it != r.end() && it->first == j ? &it->second : nullptr;
  }

  void set(std::size_t i, std::size_t j, F v) {
    if (i >= rows() || j >= cols_) throw std::out_of_range("matrix index out of range");
    Row& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it != r.end() && it->first == j) {
      if (v.is_zero()) {
        r.erase(it);
      } else {
        it->second = std::move(v);
      }
    } else if (!v.is_zero()) {
      r.insert(it, Entry(static_cast<std::uint32_t>(j), std::move(v)));
    }
  }

  SparseMatrix& operator+=(const SparseMatrix& o) { return combine(o, false); }
  SparseMatrix& operator-=(const SparseMatrix& o) { return combine(o, true); }
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }

  SparseMatrix operator-() const { return scaled(F(-1)); }

  SparseMatrix scaled(const F& c) const {
    SparseMatrix m(rows(), cols_);
    if (c.is_zero()) return m;
    for (std::size_t i = 0; i < rows(); ++i) {
      m.rows_[i].reserve(rows_[i].size());
      for (const auto& [j, v] : rows_[i]) {
        F x = v * c;
        if (!x.is_zero()) m.rows_[i].emplace_back(j, std::move(x));
      }
    }
    return m;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows()) throw std::invalid_argument("matrix dimension mismatch in product");
    SparseMatrix m(a.rows(), b.cols_);
    std::vector<ProductAccumulator<F>> acc(b.cols_);
    std::vector<std::uint32_t> touched;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      touched.clear();
      for (const auto& [k, av] : a.rows_[i]) {
        for (const auto& [j, bv] : b.rows_[k]) {
          if (!acc[j].used()) touched.push_back(j);
          acc[j].add_product(av, bv);
        }
      }
      std::sort(touched.begin(), touched.end());
      Row& out = m.rows_[i];
      for (std::uint32_t j : touched) {
        F x = acc[j].take();
        if (!x.is_zero()) out.emplace_back(j, std::move(x));
      }
    }
    return m;
  }

  SparseMatrix transpose() const {
    SparseMatrix m(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i) {
      for (const auto& [j, v] : rows_[i]) m.rows_[j].emplace_back(static_cast<std::uint32_t>(i), v);
    }
    return m;
  }

  /// Kronecker product; the left factor indexes the most significant digit.
  friend SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix m(a.rows() * b.rows(), a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < b.rows(); ++k) {
        Row& out = m.rows_[i * b.rows() + k];
        for (const auto& [j, av] : a.rows_[i]) {
          for (const auto& [l, bv] : b.rows_[k]) {
            F x = av * bv;
            if (!x.is_zero()) out.emplace_back(static_cast<std::uint32_t>(j * b.cols_ + l), std::move(x));
          }
        }
      }
    }
    return m;
  }

  F trace() const {
    F t{};
    for (std::size_t i = 0; i < rows(); ++i) t += at(i, i);
    return t;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector dimension mismatch");
    std::vector<F> out(rows());
    for (std::size_t i = 0; i < rows(); ++i) {
      F acc{};
      for (const auto& [j, x] : rows_[i]) {
        if (!v[j].is_zero()) acc += x * v[j];
      }
      out[i] = std::move(acc);
    }
    return out;
  }

  template <class G, class Fn>
  SparseMatrix<G> map(Fn&& fn) const {
    SparseMatrix<G> m(rows(), cols_);
    for (std::size_t i = 0; i < rows(); ++i) {
      for (const auto& [j, v] : rows_[i]) {
        G x = fn(v, i, j);
        if (!x.is_zero()) m.mutable_row(i).emplace_back(j, std::move(x));
      }
    }
    return m;
  }

  /// Row-major first disagreement, or nullopt when equal.
  std::optional<EntryWitness<F>> first_difference(const SparseMatrix& o) const {
    if (rows() != o.rows() || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < rows(); ++i) {
      const Row& a = rows_[i];
      const Row& b = o.rows_[i];
      std::size_t p = 0, q = 0;
      while (p < a.size() || q < b.size()) {
        std::size_t ja = p < a.size() ? a[p].first : cols_;
        std::size_t jb = q < b.size() ? b[q].first : cols_;
        if (ja == jb) {
          if (!(a[p].second == b[q].second)) return EntryWitness<F>{i, ja, a[p].second, b[q].second};
          ++p;
          ++q;
        } else if (ja < jb) {
          return EntryWitness<F>{i, ja, a[p].second, F()};
        } else {
          return EntryWitness<F>{i, jb, F(), b[q].second};
        }
      }
    }
    return std::nullopt;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows() == b.rows() && a.cols_ == b.cols_ && !a.first_difference(b).has_value();
  }

 private:
  SparseMatrix& combine(const SparseMatrix& o, bool subtract) {
    if (rows() != o.rows() || cols_ != o.cols_) throw std::invalid_argument("matrix dimension mismatch in sum");
    for (std::size_t i = 0; i < rows(); ++i) {
      const Row& b = o.rows_[i];
      if (b.empty()) continue;
      Row& a = rows_[i];
      Row merged;
      merged.reserve(a.size() + b.size());
      std::size_t p = 0, q = 0;
      while (p < a.size() || q < b.size()) {
        std::size_t ja = p < a.size() ? a[p].first : cols_;
        std::size_t jb = q < b.size() ? b[q].first : cols_;
        if (ja == jb) {
          F x = subtract ? a[p].second - b[q].second : a[p].second + b[q].second;
          if (!x.is_zero()) merged.emplace_back(a[p].first, std::move(x));
          ++p;
          ++q;
        } else if (ja < jb) {
          merged.push_back(std::move(a[p++]));
        } else {
          merged.emplace_back(b[q].first, subtract ? -b[q].second : b[q].second);
          ++q;
        }
      }
      a = std::move(merged);
    }
    return *this;
  }

  std::size_t cols_ = 0;
  std::vector<Row> rows_;
};

using SymMatrix = SparseMatrix<RatFunc>;
using GaussMatrix = SparseMatrix<GaussianRational>;

/// Entrywise value at s = point; a pole names the offending entry.
GaussMatrix specialize(const SymMatrix& m, const GaussianRational& point);

}  // namespace sptower
