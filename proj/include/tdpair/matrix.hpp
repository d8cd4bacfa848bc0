#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tdpair/field.hpp"

namespace tdpair {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a single Field.
class Matrix {
 public:
  Matrix() : field_(Field::rational()) {}
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix from_rows(Field field, const std::vector<Vector>& rows);
  /// Matrix whose j-th column is columns[j]; `height` is used when the list is empty.
  static Matrix from_columns(Field field, const std::vector<Vector>& columns, std::size_t height);
  static Matrix diagonal(const Vector& diag);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  std::vector<Vector> row_list() const;
  std::vector<Vector> column_list() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& c);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
  friend Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix pow(unsigned k) const;

  /// Columns [first, first+count).
  Matrix column_block(std::size_t first, std::size_t count) const;
  Matrix hstack(const Matrix& right) const;
  Matrix vstack(const Matrix& below) const;

  std::size_t rank() const;
  /// Throws Singular when not invertible.
  Matrix inverse() const;

  /// Same matrix with every entry re-expressed in `target`. Rationals go through
  /// Field::from_mpq, so a denominator divisible by p throws DivisionByZero.
  Matrix reduce_to(Field target) const;

  std::string str() const;

 private:
  void check_shape(const Matrix& other, const char* op) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row-echelon form with pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(const Matrix& m);

Vector zero_vector(Field field, std::size_t n);
Vector unit_vector(Field field, std::size_t n, std::size_t index);
bool is_zero(const Vector& v);
Vector scaled(const Vector& v, const Scalar& c);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);

/// Entries of m must all carry m.field(); mixing contexts throws FieldMismatch.
void require_field(const Matrix& m, Field field, const char* what);
void require_square(const Matrix& m, const char* what);

}  // namespace tdpair
