#pragma once

// Exact integer/rational scalars and small dense matrices.

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace naf {

// Expression templates off: values behave like plain value types in std algorithms.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Row-major dense matrix. Only what the lattice code needs.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

// Floor division and non-negative remainder (GMP division truncates).
Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& m);

// Number of bits of |a|; 0 for a == 0.
std::size_t bit_length(const Integer& a);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Integer isqrt(const Integer& a);  // floor(sqrt(a)), a >= 0

// Outward rounding to a dyadic rational carrying about `bits` significant bits.
Rational round_down(const Rational& q, unsigned bits);
Rational round_up(const Rational& q, unsigned bits);

// Dyadic bounds on sqrt(q) for q >= 0; exact when q is a perfect square.
Rational sqrt_lower(const Rational& q, unsigned bits);
Rational sqrt_upper(const Rational& q, unsigned bits);
bool exact_sqrt(const Rational& q, Rational& root);

Rational pow(const Rational& q, unsigned e);

Integer determinant(const IntMatrix& m);   // fraction-free (Bareiss)
RatMatrix to_rational(const IntMatrix& m);
RatMatrix inverse(const RatMatrix& m);     // throws std::domain_error if singular
IntMatrix matrix_power(const IntMatrix& m, unsigned e);

std::string to_string(const Integer& a);
std::string to_string(const Rational& q);
std::string join(const IntVector& v, const char* sep);

}  // namespace naf
