#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mdslab/field.hpp"

namespace mdslab {

// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  static Matrix from_rows(Field field, const std::vector<Vec>& rows);
  static Matrix identity(Field field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem v);
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row_mut(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec column(std::size_t c) const;
  std::vector<Vec> to_rows() const;

  Matrix transpose() const;
  Matrix select_columns(std::span<const std::size_t> idx) const;
  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix remove_column(std::size_t c) const;
  Matrix append_row(std::span<const Elem> row) const;
  Matrix append_column(std::span<const Elem> col) const;

  // Row reduction with the pivot taken as the first nonzero entry in column
  // order; the result is the unique reduced row echelon form. Zero rows are
  // dropped when `drop_zero_rows` is set.
  struct Echelon;
  Echelon rref(bool drop_zero_rows = true) const;

  // Vector-matrix products: x * M (x has `rows` entries) and M * y^T.
  Vec left_mul(std::span<const Elem> x) const;
  Vec right_mul(std::span<const Elem> y) const;

  std::string to_text() const;
  static Matrix parse_text(Field field, std::string_view text);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  Vec data_;
};

struct Matrix::Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

std::size_t rank(const Matrix& m);
Elem determinant(const Matrix& m);
// Inverse of a square matrix; throws DivisionByZero when singular.
Matrix inverse(const Matrix& m);
// Basis (as rows) of {x : M x^T = 0}.
Matrix right_null_space(const Matrix& m);
// True iff the selected columns are linearly independent.
bool cols_independent(const Matrix& m, std::span<const std::size_t> idx);

Elem inner_product(const Field& f, std::span<const Elem> x, std::span<const Elem> y);
Vec star_product(const Field& f, std::span<const Elem> x, std::span<const Elem> y);

std::size_t hamming_weight(std::span<const Elem> x);

}  // namespace mdslab
