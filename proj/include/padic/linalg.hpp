#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "padic/scalar.hpp"

namespace padic {

/// A coordinate vector in k^m.
using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldConfig& f, std::size_t m);
Vector unit_vector(const FieldConfig& f, std::size_t m, std::size_t i);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& s, const Vector& v);
/// a += s * b
void axpy(Vector& a, const Scalar& s, const Vector& b);
/// Multiplies every entry by pi^k.
Vector shifted(const Vector& v, std::int64_t k);
bool is_zero(const Vector& v);
Scalar dot(const Vector& x, const Vector& y);
std::string to_string(const Vector& v);

/// Dense m x n matrix over k, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldConfig& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldConfig& f, std::size_t n);
  /// Requires at least one column; all columns must share a length.
  static Matrix from_columns(std::span<const Vector> columns);
  static Matrix from_rows(std::span<const Vector> rows);
  static Matrix diagonal(std::span<const Scalar> entries);

  const FieldConfig& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  std::vector<Vector> columns() const;

  Matrix transpose() const;
  friend bool operator==(const Matrix&, const Matrix&);

  std::string to_string() const;

 private:
  FieldConfig field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& a);
Vector mat_vec(const Matrix& a, const Vector& v);

/// Exact determinant by elimination, pivoting on minimal valuation.
Scalar det(const Matrix& a);
/// Throws MathError for singular input.
Matrix inverse(const Matrix& a);
std::size_t rank(const Matrix& a);
/// The unique c with a * c = b. Throws MathError when the columns of a are
/// dependent or b lies outside their span.
Vector solve(const Matrix& a, const Vector& b);
/// As solve, but returns nullopt when b is outside the column span.
/// Dependent columns still throw.
std::optional<Vector> try_solve(const Matrix& a, const Vector& b);
/// Square matrix with integral entries and a unit determinant.
bool is_unimodular(const Matrix& c);

}  // namespace padic
