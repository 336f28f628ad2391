#include "padic/linalg.hpp"

#include <sstream>
#include <utility>

#include "padic/errors.hpp"

namespace padic {

namespace {

void check_lengths(const Vector& a, const Vector& b, const char* op) {
  if (a.size() != b.size()) {
    throw MathError(std::string(op) + ": length mismatch " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

// Gauss-Jordan elimination over the first `pivot_limit` columns. Each pivot
// is the entry of minimal valuation in its column; pivot rows are scaled to
// 1 and the column cleared above and below. `det_factor` accumulates the
// product of pivots and the sign of row swaps.
struct Reduction {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  Scalar det_factor;
};

Reduction reduce(Matrix m, std::size_t pivot_limit) {
  const FieldConfig f = m.field();
  Reduction out{m, {}, Scalar::one(f)};
  Matrix& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < pivot_limit && row < a.rows(); ++col) {
    std::optional<std::size_t> best;
    Valuation best_v = Valuation::infinity();
    for (std::size_t r = row; r < a.rows(); ++r) {
      const Valuation v = a(r, col).valuation();
      if (!v.is_infinite() && (!best || v < best_v)) {
        best = r;
        best_v = v;
      }
    }
    if (!best) continue;
    if (*best != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(row, c), a(*best, c));
      out.det_factor = -out.det_factor;
    }
    const Scalar pivot = a(row, col);
    out.det_factor *= pivot;
    const Scalar pivot_inv = pivot.inverse();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= pivot_inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Scalar factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
      }
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  return out;
}

}  // namespace

Vector zero_vector(const FieldConfig& f, std::size_t m) { return Vector(m, Scalar::zero(f)); }

Vector unit_vector(const FieldConfig& f, std::size_t m, std::size_t i) {
  Vector v = zero_vector(f, m);
  v.at(i) = Scalar::one(f);
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  check_lengths(a, b, "vector add");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  check_lengths(a, b, "vector sub");
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator-(const Vector& a) {
  Vector r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(-x);
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(s * x);
  return r;
}

void axpy(Vector& a, const Scalar& s, const Vector& b) {
  check_lengths(a, b, "axpy");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) a[i] += s * b[i];
  }
}

Vector shifted(const Vector& v, std::int64_t k) {
  Vector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.shifted(k));
  return r;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Scalar dot(const Vector& x, const Vector& y) {
  check_lengths(x, y, "dot");
  if (x.empty()) throw MathError("dot product of empty vectors");
  Scalar s = Scalar::zero(x.front().field());
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].to_string();
  }
  return s + ")";
}

Matrix::Matrix(const FieldConfig& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldConfig& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns) {
  if (columns.empty() || columns.front().empty()) throw MathError("matrix needs at least one nonempty column");
  const std::size_t rows = columns.front().size();
  Matrix m(columns.front().front().field(), rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw MathError("columns of different lengths");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows) { return from_columns(rows).transpose(); }

Matrix Matrix::diagonal(std::span<const Scalar> entries) {
  if (entries.empty()) throw MathError("empty diagonal");
  Matrix m(entries.front().field(), entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_));
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_.same_field(b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out << ", ";
      out << (*this)(r, c).to_string();
    }
    out << "]\n";
  }
  return out.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw MathError("matrix product dimension mismatch");
  Matrix r(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return r;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) *= s;
  }
  return r;
}

Vector mat_vec(const Matrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw MathError("matrix-vector dimension mismatch");
  Vector r = zero_vector(a.field(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!v[k].is_zero() && !a(i, k).is_zero()) r[i] += a(i, k) * v[k];
    }
  }
  return r;
}

Scalar det(const Matrix& a) {
  if (a.rows() != a.cols()) throw MathError("determinant of a non-square matrix");
  const Reduction red = reduce(a, a.cols());
  if (red.pivot_cols.size() < a.cols()) return Scalar::zero(a.field());
  return red.det_factor;
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw MathError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix aug(a.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = Scalar::one(a.field());
  }
  const Reduction red = reduce(std::move(aug), n);
  if (red.pivot_cols.size() < n) throw MathError("matrix is singular");
  Matrix inv(a.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  }
  return inv;
}

std::size_t rank(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  return reduce(a, a.cols()).pivot_cols.size();
}

std::optional<Vector> try_solve(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw MathError("solve: right-hand side has the wrong length");
  const std::size_t n = a.cols();
  Matrix aug(a.field(), a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const Reduction red = reduce(std::move(aug), n);
  if (red.pivot_cols.size() < n) throw MathError("solve: columns are linearly dependent");
  for (std::size_t r = n; r < a.rows(); ++r) {
    if (!red.reduced(r, n).is_zero()) return std::nullopt;
  }
  Vector x;
  x.reserve(n);
  for (std::size_t r = 0; r < n; ++r) x.push_back(red.reduced(r, n));
  return x;
}

Vector solve(const Matrix& a, const Vector& b) {
  auto x = try_solve(a, b);
  if (!x) throw MathError("solve: vector is outside the column span");
  return *x;
}

bool is_unimodular(const Matrix& c) {
  if (c.rows() != c.cols()) throw MathError("unimodularity test of a non-square matrix");
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      if (!c(i, j).is_integral()) return false;
    }
  }
  return det(c).abs() == NormValue::one();
}

}  // namespace padic
