#include "mdslab/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace mdslab {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::from_rows(Field field, const std::vector<Vec>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(std::move(field), rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw LengthMismatch("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, Elem v) {
  if (r >= rows_ || c >= cols_) throw IndexOutOfRange("matrix index out of range");
  if (!field_.contains(v)) throw FieldMismatch("entry " + std::to_string(v) + " outside " + field_.token());
  data_[r * cols_ + c] = v;
}

Vec Matrix::column(std::size_t c) const {
  if (c >= cols_) throw IndexOutOfRange("column index out of range");
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

std::vector<Vec> Matrix::to_rows() const {
  std::vector<Vec> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = at(r, c);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> idx) const {
  Matrix out(field_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= cols_) throw IndexOutOfRange("column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out.data_[r * idx.size() + j] = at(r, idx[j]);
  }
  return out;
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix out(field_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= rows_) throw IndexOutOfRange("row index out of range");
    std::copy_n(data_.begin() + idx[i] * cols_, cols_, out.data_.begin() + i * cols_);
  }
  return out;
}

Matrix Matrix::remove_column(std::size_t c) const {
  if (c >= cols_) throw IndexOutOfRange("column index out of range");
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < cols_; ++j)
    if (j != c) keep.push_back(j);
  return select_columns(keep);
}

Matrix Matrix::append_row(std::span<const Elem> row) const {
  if (row.size() != cols_) throw LengthMismatch("appended row has wrong length");
  Matrix out(field_, rows_ + 1, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  for (std::size_t c = 0; c < cols_; ++c) out.set(rows_, c, row[c]);
  return out;
}

Matrix Matrix::append_column(std::span<const Elem> col) const {
  if (col.size() != rows_) throw LengthMismatch("appended column has wrong length");
  Matrix out(field_, rows_, cols_ + 1);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::copy_n(data_.begin() + r * cols_, cols_, out.data_.begin() + r * (cols_ + 1));
    out.set(r, cols_, col[r]);
  }
  return out;
}

Matrix::Echelon Matrix::rref(bool drop_zero_rows) const {
  Matrix m = *this;
  const Field& f = field_;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
    std::size_t piv = lead;
    while (piv < rows_ && m.at(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != lead)
      std::swap_ranges(m.data_.begin() + piv * cols_, m.data_.begin() + (piv + 1) * cols_,
                       m.data_.begin() + lead * cols_);
    Elem scale = f.inv(m.at(lead, c));
    auto lrow = m.row_mut(lead);
    for (auto& x : lrow) x = f.mul(x, scale);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == lead) continue;
      Elem factor = m.at(r, c);
      if (factor == 0) continue;
      auto rr = m.row_mut(r);
      for (std::size_t j = c; j < cols_; ++j) rr[j] = f.sub(rr[j], f.mul(factor, lrow[j]));
    }
    pivots.push_back(c);
    ++lead;
  }
  if (drop_zero_rows && lead < rows_) {
    std::vector<std::size_t> keep(lead);
    for (std::size_t i = 0; i < lead; ++i) keep[i] = i;
    m = m.select_rows(keep);
  }
  return {std::move(m), std::move(pivots)};
}

Vec Matrix::left_mul(std::span<const Elem> x) const {
  if (x.size() != rows_) throw LengthMismatch("vector length does not match matrix rows");
  Vec out(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (x[r] == 0) continue;
    for (std::size_t c = 0; c < cols_; ++c) out[c] = field_.add(out[c], field_.mul(x[r], at(r, c)));
  }
  return out;
}

Vec Matrix::right_mul(std::span<const Elem> y) const {
  if (y.size() != cols_) throw LengthMismatch("vector length does not match matrix columns");
  Vec out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = inner_product(field_, row(r), y);
  return out;
}

std::string Matrix::to_text() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << ' ';
      out << at(r, c);
    }
    out << '\n';
  }
  return out.str();
}

Matrix Matrix::parse_text(Field field, std::string_view text) {
  std::vector<Vec> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    Vec row;
    long long v;
    while (ls >> v) {
      if (v < 0 || v >= static_cast<long long>(field.q()))
        throw ParseError("matrix entry " + std::to_string(v) + " outside " + field.token());
      row.push_back(static_cast<Elem>(v));
    }
    if (!ls.eof()) throw ParseError("non-integer token in matrix line '" + line + "'");
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return from_rows(std::move(field), rows);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("matrices over different fields");
  if (a.cols() != b.rows()) throw LengthMismatch("inner dimensions differ");
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t t = 0; t < a.cols(); ++t) {
      Elem x = a.at(i, t);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.data_[i * b.cols() + j] = f.add(out.data_[i * b.cols() + j], f.mul(x, b.at(t, j)));
    }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field() == b.field() && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::size_t rank(const Matrix& m) { return m.rref(false).pivots.size(); }

Elem determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw NonSquare("determinant of a non-square matrix");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  Matrix a = m;
  Elem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a.at(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        Elem tmp = a.at(c, j);
        a.set(c, j, a.at(piv, j));
        a.set(piv, j, tmp);
      }
      det = f.neg(det);
    }
    Elem pv = a.at(c, c);
    det = f.mul(det, pv);
    Elem pinv = f.inv(pv);
    for (std::size_t r = c + 1; r < n; ++r) {
      Elem factor = f.mul(a.at(r, c), pinv);
      if (factor == 0) continue;
      auto rr = a.row_mut(r);
      auto cr = a.row(c);
      for (std::size_t j = c; j < n; ++j) rr[j] = f.sub(rr[j], f.mul(factor, cr[j]));
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw NonSquare("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m.at(r, c));
    aug.set(r, n + r, 1);
  }
  auto ech = aug.rref(false);
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) throw DivisionByZero("matrix is singular");
  std::vector<std::size_t> right(n);
  for (std::size_t i = 0; i < n; ++i) right[i] = n + i;
  return ech.reduced.select_columns(right);
}

Matrix right_null_space(const Matrix& m) {
  const Field& f = m.field();
  auto ech = m.rref(true);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(n, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = f.neg(ech.reduced.at(i, free));
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return Matrix(f, 0, n);
  return Matrix::from_rows(f, basis);
}

bool cols_independent(const Matrix& m, std::span<const std::size_t> idx) {
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= m.cols()) throw IndexOutOfRange("column index out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (idx[i] == idx[j]) throw BadInput("column indices must be distinct");
  }
  if (idx.size() > m.rows()) return false;
  return rank(m.select_columns(idx)) == idx.size();
}

Elem inner_product(const Field& f, std::span<const Elem> x, std::span<const Elem> y) {
  if (x.size() != y.size()) throw LengthMismatch("inner product of vectors of different lengths");
  Elem acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], y[i]));
  return acc;
}

Vec star_product(const Field& f, std::span<const Elem> x, std::span<const Elem> y) {
  if (x.size() != y.size()) throw LengthMismatch("star product of vectors of different lengths");
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.mul(x[i], y[i]);
  return out;
}

std::size_t hamming_weight(std::span<const Elem> x) {
  return static_cast<std::size_t>(std::count_if(x.begin(), x.end(), [](Elem e) { return e != 0; }));
}

}  // namespace mdslab
