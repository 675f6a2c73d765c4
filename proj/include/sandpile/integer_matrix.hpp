#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sandpile {

/// Dense matrix of arbitrary-precision integers, row-major storage.
/// All arithmetic on these matrices is exact; there is no floating point
/// anywhere in the linear-algebra kernels.
class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static IntegerMatrix identity(std::size_t n);

  /// Convenience literal constructor, mainly for tests and small fixtures.
  static IntegerMatrix from_rows(
      std::initializer_list<std::initializer_list<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  const mpz_class& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  mpz_class& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  bool operator==(const IntegerMatrix&) const = default;

  IntegerMatrix transposed() const;
  IntegerMatrix operator*(const IntegerMatrix& rhs) const;

  /// Submatrix given by explicit row and column index lists (0-based).
  IntegerMatrix submatrix(std::span<const std::size_t> row_idx,
                          std::span<const std::size_t> col_idx) const;

  /// Square submatrix with one row and one column removed.
  IntegerMatrix minor_matrix(std::size_t drop_row, std::size_t drop_col) const;

  std::vector<mpz_class> multiply(std::span<const mpz_class> v) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void negate_row(std::size_t i);

  std::string to_string() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> entries_;
};

}  // namespace sandpile
