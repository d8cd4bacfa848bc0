#include "tdpair/matrix.hpp"

#include <sstream>
#include <utility>

namespace tdpair {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<Vector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j].field() != field) throw Error(ErrorCode::FieldMismatch, "entry outside " + field.name());
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_columns(Field field, const std::vector<Vector>& columns, std::size_t height) {
  Matrix m(field, height, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != height) throw Error(ErrorCode::DimensionMismatch, "ragged columns");
    for (std::size_t i = 0; i < height; ++i) {
      if (columns[j][i].field() != field) throw Error(ErrorCode::FieldMismatch, "entry outside " + field.name());
      m(i, j) = columns[j][i];
    }
  }
  return m;
}

Matrix Matrix::diagonal(const Vector& diag) {
  if (diag.empty()) throw Error(ErrorCode::DimensionMismatch, "empty diagonal");
  Matrix m(diag.front().field(), diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Vector Matrix::row(std::size_t i) const {
  if (i >= rows_) throw Error(ErrorCode::IndexRange, "row index");
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
  if (j >= cols_) throw Error(ErrorCode::IndexRange, "column index");
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

std::vector<Vector> Matrix::column_list() const {
  std::vector<Vector> out;
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

void Matrix::check_shape(const Matrix& other, const char* op) const {
  if (field_ != other.field_) {
    throw Error(ErrorCode::FieldMismatch, std::string(op) + ": " + field_.name() + " vs " + other.field_.name());
  }
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::DimensionMismatch, std::string(op) + ": shape mismatch");
  }
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  check_shape(rhs, "add");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  check_shape(rhs, "subtract");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
  if (c.field() != field_) throw Error(ErrorCode::FieldMismatch, "scale: field mismatch");
  for (auto& x : data_) x *= c;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix out = *this;
  for (auto& x : out.data_) x = -x;
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "multiply: field mismatch");
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "multiply: inner dimensions differ");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw Error(ErrorCode::DimensionMismatch, "apply: vector length differs");
  Vector out(a.rows_, a.field_.zero());
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t k = 0; k < a.data_.size(); ++k) {
    if (a.data_[k] != b.data_[k]) return false;
  }
  return true;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::pow(unsigned k) const {
  require_square(*this, "pow");
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (k != 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return result;
}

Matrix Matrix::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw Error(ErrorCode::IndexRange, "column block");
  Matrix out(field_, rows_, count);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
  }
  return out;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (field_ != right.field_) throw Error(ErrorCode::FieldMismatch, "hstack");
  if (rows_ != right.rows_) throw Error(ErrorCode::DimensionMismatch, "hstack: row counts differ");
  Matrix out(field_, rows_, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < right.cols_; ++j) out(i, cols_ + j) = right(i, j);
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (field_ != below.field_) throw Error(ErrorCode::FieldMismatch, "vstack");
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (cols_ != below.cols_) throw Error(ErrorCode::DimensionMismatch, "vstack: column counts differ");
  Matrix out = *this;
  out.rows_ += below.rows_;
  out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
  return out;
}

Echelon rref(const Matrix& m) {
  Echelon e{m, {}};
  Matrix& a = e.reduced;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != lead) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(lead, j));
    }
    const Scalar inv = a(lead, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a(lead, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead || a(i, col).is_zero()) continue;
      const Scalar factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        if (!a(lead, j).is_zero()) a(i, j) -= factor * a(lead, j);
      }
    }
    e.pivots.push_back(col);
    ++lead;
  }
  return e;
}

std::size_t Matrix::rank() const { return rref(*this).pivots.size(); }

Matrix Matrix::inverse() const {
  require_square(*this, "inverse");
  const Echelon e = rref(hstack(identity(field_, rows_)));
  if (e.pivots.size() < rows_ || (rows_ > 0 && e.pivots[rows_ - 1] >= rows_)) {
    throw Error(ErrorCode::Singular, "matrix is not invertible");
  }
  return e.reduced.column_block(rows_, rows_);
}

Matrix Matrix::reduce_to(Field target) const {
  if (!field_.is_rational()) {
    if (target == field_) return *this;
    throw Error(ErrorCode::FieldMismatch, "only rational matrices can be reduced");
  }
  Matrix out(target, rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = target.from_mpq(data_[k].rational_value());
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j != 0) os << ", ";
      os << (*this)(i, j).str();
    }
    os << "]\n";
  }
  return os.str();
}

Vector zero_vector(Field field, std::size_t n) { return Vector(n, field.zero()); }

Vector unit_vector(Field field, std::size_t n, std::size_t index) {
  Vector v = zero_vector(field, n);
  v.at(index) = field.one();
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector scaled(const Vector& v, const Scalar& c) {
  Vector out = v;
  for (auto& x : out) x *= c;
  return out;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector add");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector subtract(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector subtract");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

void require_field(const Matrix& m, Field field, const char* what) {
  if (m.field() != field) {
    throw Error(ErrorCode::FieldMismatch, std::string(what) + ": expected " + field.name() + ", got " + m.field().name());
  }
}

void require_square(const Matrix& m, const char* what) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": matrix is not square");
}

}  // namespace tdpair
