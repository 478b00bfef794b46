#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace moorecalc {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

// Non-negative remainder of a modulo m (m > 0).
Integer mod_floor(const Integer& a, const Integer& m);
Integer gcd(const Integer& a, const Integer& b);

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(const IntVector& entries);
  static IntMatrix column(const IntVector& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  // Keep the listed rows / columns, in the given order.
  IntMatrix select_rows(const std::vector<std::size_t>& idx) const;
  IntMatrix select_cols(const std::vector<std::size_t>& idx) const;
  IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  // [this | other]; row counts must match.
  IntMatrix hstack(const IntMatrix& other) const;
  // [this ; other]; column counts must match.
  IntMatrix vstack(const IntMatrix& other) const;
  // [[this, 0], [0, other]]
  IntMatrix direct_sum(const IntMatrix& other) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += c * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& c);
  // col[dst] += c * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& c);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  // Exact determinant by fraction-free (Bareiss) elimination.
  Integer determinant() const;

  std::string to_string() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a);
  friend IntMatrix operator*(const Integer& s, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

}  // namespace moorecalc
