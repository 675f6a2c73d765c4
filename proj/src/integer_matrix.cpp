#include "sandpile/integer_matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace sandpile {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(
    std::initializer_list<std::initializer_list<long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  IntegerMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c)
      throw std::invalid_argument("from_rows: ragged row lengths");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

IntegerMatrix IntegerMatrix::transposed() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw std::invalid_argument("matrix product: inner dimensions disagree");
  IntegerMatrix out(rows_, rhs.cols_);
  mpz_class acc;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < rhs.cols_; ++j) {
      acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) acc += (*this)(i, k) * rhs(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

IntegerMatrix IntegerMatrix::submatrix(std::span<const std::size_t> row_idx,
                                       std::span<const std::size_t> col_idx) const {
  IntegerMatrix out(row_idx.size(), col_idx.size());
  for (std::size_t i = 0; i < row_idx.size(); ++i) {
    if (row_idx[i] >= rows_) throw std::out_of_range("submatrix: row index");
    for (std::size_t j = 0; j < col_idx.size(); ++j) {
      if (col_idx[j] >= cols_) throw std::out_of_range("submatrix: col index");
      out(i, j) = (*this)(row_idx[i], col_idx[j]);
    }
  }
  return out;
}

IntegerMatrix IntegerMatrix::minor_matrix(std::size_t drop_row,
                                          std::size_t drop_col) const {
  if (drop_row >= rows_ || drop_col >= cols_)
    throw std::out_of_range("minor_matrix: index out of range");
  IntegerMatrix out(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
    if (i == drop_row) continue;
    for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
      if (j == drop_col) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

std::vector<mpz_class> IntegerMatrix::multiply(std::span<const mpz_class> v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("matrix-vector product: dimension mismatch");
  std::vector<mpz_class> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap(entries_[a * cols_ + j], entries_[b * cols_ + j]);
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap(entries_[i * cols_ + a], entries_[i * cols_ + b]);
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j)
    entries_[i * cols_ + j] = -entries_[i * cols_ + j];
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? ", " : "") << (*this)(i, j);
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace sandpile
