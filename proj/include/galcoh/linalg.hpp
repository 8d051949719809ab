#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace galcoh {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const Integer> entries);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_columns(std::span<const IntVector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector column(std::size_t j) const;
  IntVector row(std::size_t i) const;
  void set_column(std::size_t j, std::span<const Integer> values);

  IntMatrix transposed() const;
  IntMatrix submatrix(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const;
  IntMatrix columns(std::size_t first, std::size_t count) const;
  IntMatrix row_block(std::size_t first, std::size_t count) const;

  // Elementary operations, used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k);  // row[dst] += k*row[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k);  // col[dst] += k*col[src]
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& k, const IntMatrix& a);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntVector operator*(const IntMatrix& a, std::span<const Integer> x);
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);
IntMatrix vconcat(const IntMatrix& a, const IntMatrix& b);

bool is_zero(std::span<const Integer> v);
IntVector add(std::span<const Integer> a, std::span<const Integer> b);
IntVector sub(std::span<const Integer> a, std::span<const Integer> b);
IntVector scale(const Integer& k, std::span<const Integer> a);
Integer gcd_of(std::span<const Integer> v);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace galcoh
