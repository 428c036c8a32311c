#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "extquot/checked.hpp"
#include "extquot/rational.hpp"

namespace extquot {

/// Dense row-major integer matrix with overflow-checked arithmetic.
class IntMatrix {
public:
  using Int = checked::Int;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw InvalidArgument("ragged matrix rows");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Int>& data() const { return data_; }

  std::vector<std::vector<Int>> to_rows() const {
    std::vector<std::vector<Int>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      out[i].assign(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                    data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    return out;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        Int aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) = checked::add(c(i, j), checked::mul(aik, b(k, j)));
      }
    return c;
  }

  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix difference shape mismatch");
    IntMatrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = checked::sub(a.data_[i], b.data_[i]);
    return c;
  }

  std::vector<Int> operator*(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw InvalidArgument("matrix-vector shape mismatch");
    std::vector<Int> out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        out[i] = checked::add(out[i], checked::mul((*this)(i, j), v[j]));
    return out;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix negated() const {
    IntMatrix m = *this;
    for (auto& x : m.data_) x = checked::neg(x);
    return m;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Int x) { return x == 0; });
  }

  /// Submatrix on the given row and column index sets.
  IntMatrix block(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    IntMatrix m(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
    return m;
  }

  /// Bareiss fraction-free determinant.
  Int determinant() const {
    if (!square()) throw InvalidArgument("determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix m = *this;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m(k, k) == 0) {
        std::size_t p = k + 1;
        while (p < n && m(p, k) == 0) ++p;
        if (p == n) return 0;
        for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j) {
          __int128 v = static_cast<__int128>(m(i, j)) * m(k, k) - static_cast<__int128>(m(i, k)) * m(k, j);
          v /= prev;
          if (v > INT64_MAX || v < INT64_MIN) throw ArithmeticOverflow("overflow in determinant");
          m(i, j) = static_cast<Int>(v);
        }
      prev = m(k, k);
    }
    return checked::mul(sign, m(n - 1, n - 1));
  }

  /// Exact inverse of a unimodular matrix (|det| = 1) by rational Gauss-Jordan.
  IntMatrix unimodular_inverse() const {
    if (!square()) throw InvalidArgument("inverse of non-square matrix");
    const std::size_t n = rows_;
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational((*this)(i, j));
      a[i][n + i] = Rational(1);
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t p = c;
      while (p < n && a[p][c] == Rational(0)) ++p;
      if (p == n) throw NonUnimodular("singular matrix has no inverse");
      std::swap(a[p], a[c]);
      Rational piv = a[c][c];
      for (auto& x : a[c]) x /= piv;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || a[r][c] == Rational(0)) continue;
        Rational f = a[r][c];
        for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
      }
    }
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!a[i][n + j].is_integer()) throw NonUnimodular("inverse is not integral");
        inv(i, j) = a[i][n + j].num();
      }
    return inv;
  }

  /// Rank over the rationals.
  std::size_t rank() const {
    std::vector<std::vector<Rational>> a(rows_, std::vector<Rational>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) a[i][j] = Rational((*this)(i, j));
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t p = r;
      while (p < rows_ && a[p][c] == Rational(0)) ++p;
      if (p == rows_) continue;
      std::swap(a[p], a[r]);
      for (std::size_t i = r + 1; i < rows_; ++i) {
        if (a[i][c] == Rational(0)) continue;
        Rational f = a[i][c] / a[r][c];
        for (std::size_t j = c; j < cols_; ++j) a[i][j] -= f * a[r][j];
      }
      ++r;
    }
    return r;
  }

  /// Shape first, then row-major lexicographic on entries.
  friend std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.data_.begin(), a.data_.end(), b.data_.begin(), b.data_.end());
  }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? "," : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Block-diagonal sum diag(a, b).
inline IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

} // namespace extquot

template <>
struct std::hash<extquot::IntMatrix> {
  std::size_t operator()(const extquot::IntMatrix& m) const noexcept {
    std::size_t h = m.rows() * 0x9e3779b97f4a7c15ULL + m.cols();
    for (auto x : m.data()) h ^= std::hash<std::int64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};
