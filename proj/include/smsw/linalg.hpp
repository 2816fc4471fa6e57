#pragma once

// Dense exact linear algebra over a field.
//
// Two scalar types are used across the project: ModP (arithmetic in the prime
// field F_p, p = 2^31 - 1) for the hot paths, and Rational (arbitrary
// precision) for rechecks. Both satisfy the small Field interface below.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace smsw {

class ModP {
 public:
  static constexpr std::int64_t kPrime = 2147483647;

  constexpr ModP() = default;
  constexpr ModP(std::int64_t v) : v_(normalize(v)) {}  // NOLINT(implicit)

  constexpr std::int64_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr ModP operator+(ModP a, ModP b) { return ModP(a.v_ + b.v_); }
  friend constexpr ModP operator-(ModP a, ModP b) { return ModP(a.v_ - b.v_); }
  friend constexpr ModP operator*(ModP a, ModP b) { return ModP(a.v_ * b.v_); }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  constexpr ModP operator-() const { return ModP(-v_); }
  ModP& operator+=(ModP o) { return *this = *this + o; }
  ModP& operator-=(ModP o) { return *this = *this - o; }
  ModP& operator*=(ModP o) { return *this = *this * o; }
  friend constexpr bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

  ModP inverse() const {
    if (v_ == 0) throw std::domain_error("ModP: inverse of zero");
    // Fermat: a^(p-2).
    std::int64_t result = 1, base = v_, e = kPrime - 2;
    while (e > 0) {
      if (e & 1) result = result * base % kPrime;
      base = base * base % kPrime;
      e >>= 1;
    }
    return ModP(result);
  }

  friend std::ostream& operator<<(std::ostream& os, ModP a) { return os << a.v_; }

 private:
  static constexpr std::int64_t normalize(std::int64_t v) {
    v %= kPrime;
    return v < 0 ? v + kPrime : v;
  }
  std::int64_t v_ = 0;
};

using Rational = boost::multiprecision::cpp_rational;

inline bool is_zero(const ModP& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x == 0; }

template <typename F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch in product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("Matrix: dimension mismatch in sum");
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Columns of `other` appended on the right.
  Matrix hconcat(const Matrix& other) const {
    if (rows_ != other.rows_) throw std::invalid_argument("Matrix: hconcat row mismatch");
    Matrix m(rows_, cols_ + other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
      for (std::size_t j = 0; j < other.cols_; ++j) m(i, cols_ + j) = other(i, j);
    }
    return m;
  }

  Matrix vconcat(const Matrix& other) const {
    if (cols_ != other.cols_) throw std::invalid_argument("Matrix: vconcat column mismatch");
    Matrix m(rows_ + other.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
    for (std::size_t i = 0; i < other.rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(rows_ + i, j) = other(i, j);
    return m;
  }

  Matrix column(std::size_t j) const {
    Matrix c(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  Matrix columns(std::size_t first, std::size_t count) const {
    Matrix c(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < count; ++j) c(i, j) = (*this)(i, first + j);
    return c;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

// Reduced row echelon form in place; returns pivot columns.
template <typename F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const F inv = F(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const F factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename F>
std::size_t rank(Matrix<F> m) {
  return rref(m).size();
}

// Basis of {x : m x = 0}, as columns.
template <typename F>
Matrix<F> nullspace(Matrix<F> m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix<F> basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], k) = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], k) = -m(r, free_cols[k]);
  }
  return basis;
}

// Rows spanning {y : y m = 0}. A matrix whose kernel is exactly col(m).
template <typename F>
Matrix<F> left_nullspace(const Matrix<F>& m) {
  return nullspace(m.transpose()).transpose();
}

// A basis (as columns) of the column space of m, chosen among m's columns.
template <typename F>
Matrix<F> column_basis(const Matrix<F>& m) {
  Matrix<F> r = m;
  const auto pivots = rref(r);
  Matrix<F> out(m.rows(), pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, k) = m(i, pivots[k]);
  return out;
}

// Indices of columns of `extra` that extend col(base) to a basis of
// col(base) + col(extra), scanning left to right.
template <typename F>
std::vector<std::size_t> complement_columns(const Matrix<F>& base, const Matrix<F>& extra) {
  Matrix<F> joined = base.hconcat(extra);
  auto pivots = rref(joined);
  std::vector<std::size_t> out;
  for (auto p : pivots)
    if (p >= base.cols()) out.push_back(p - base.cols());
  return out;
}

}  // namespace smsw
