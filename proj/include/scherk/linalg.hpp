#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar.hpp"

namespace scherk {

/// Element of V = Qⁿ.
class Vector {
public:
  Vector() = default;
  explicit Vector(std::size_t n) : coords_(n) {}
  explicit Vector(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  Vector(std::initializer_list<Scalar> coords) : coords_(coords) {}

  static Vector zero(std::size_t n) { return Vector(n); }
  static Vector unit(std::size_t n, std::size_t i) {
    Vector v(n);
    v[i] = 1;
    return v;
  }

  std::size_t size() const { return coords_.size(); }
  const Scalar &operator[](std::size_t i) const { return coords_[i]; }
  Scalar &operator[](std::size_t i) { return coords_[i]; }
  std::span<const Scalar> coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const Scalar &s) { return scherk::is_zero(s); });
  }

  Vector &operator+=(const Vector &o) {
    require_same_dim(size(), o.size(), "vector +");
    for (std::size_t i = 0; i < size(); ++i) coords_[i] += o[i];
    return *this;
  }
  Vector &operator-=(const Vector &o) {
    require_same_dim(size(), o.size(), "vector -");
    for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o[i];
    return *this;
  }
  Vector &operator*=(const Scalar &c) {
    for (auto &x : coords_) x *= c;
    return *this;
  }

  friend Vector operator+(Vector a, const Vector &b) { return a += b; }
  friend Vector operator-(Vector a, const Vector &b) { return a -= b; }
  friend Vector operator-(Vector a) { return a *= Scalar(-1); }
  friend Vector operator*(const Scalar &c, Vector a) { return a *= c; }
  friend Vector operator/(Vector a, const Scalar &c) {
    if (scherk::is_zero(c)) throw InvalidArgument("vector / 0");
    return a *= Scalar(1 / c);
  }

  friend bool operator==(const Vector &, const Vector &) = default;

  friend std::ostream &operator<<(std::ostream &os, const Vector &v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
      os << (i ? "," : "") << to_string(v[i]);
    return os << ')';
  }

private:
  std::vector<Scalar> coords_;
};

/// Standard inner product; fixed globally.
inline Scalar dot(const Vector &a, const Vector &b) {
  require_same_dim(a.size(), b.size(), "dot");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Makes a nonzero vector a primitive integer vector whose first nonzero
/// entry is positive. Used to pick a stable representative of a line.
inline Vector primitive_direction(const Vector &v) {
  mpz_class l = 1;
  for (const auto &x : v)
    if (!is_zero(x)) l = lcm(l, x.get_den());
  mpz_class g = 0;
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  for (const auto &x : v) {
    mpz_class n = x.get_num() * (l / x.get_den());
    g = gcd(g, n);
    ints.push_back(n);
  }
  if (g == 0) throw InvalidArgument("primitive_direction of zero vector");
  auto first = std::find_if(ints.begin(), ints.end(),
                            [](const mpz_class &z) { return z != 0; });
  if (*first < 0) g = -g;
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Scalar(ints[i] / g);
  return out;
}

/// Dense row-major rational matrix.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  /// Rows are the given vectors; `cols` is needed when the list is empty.
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require_same_dim(rows[i].size(), cols, "matrix row");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar &operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Scalar &operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Vector row(std::size_t i) const {
    return Vector(std::vector<Scalar>(data_.begin() + i * cols_,
                                      data_.begin() + (i + 1) * cols_));
  }
  Vector col(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<Vector> row_vectors() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix &a, const Matrix &b) {
    require_same_dim(a.cols_, b.rows_, "matrix product");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar &aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend Vector operator*(const Matrix &a, const Vector &x) {
    require_same_dim(a.cols_, x.size(), "matrix-vector product");
    Vector y(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }
  friend Matrix operator-(Matrix a, const Matrix &b) {
    require_same_dim(a.rows_, b.rows_, "matrix -");
    require_same_dim(a.cols_, b.cols_, "matrix -");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend bool operator==(const Matrix &, const Matrix &) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

/// In-place Gauss–Jordan reduction to reduced row echelon form with unit
/// pivots. Zero rows end up at the bottom. Returns the pivot columns.
inline std::vector<std::size_t> rref_in_place(Matrix &m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Scalar inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      Scalar f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Matrix m) { return rref_in_place(m).size(); }

/// Exact determinant of a square matrix by Gaussian elimination.
inline Scalar determinant(Matrix m) {
  require_same_dim(m.rows(), m.cols(), "determinant");
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      Scalar f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Basis (as rows) of {x : m·x = 0}, one vector per free column.
inline std::vector<Vector> null_space_basis(Matrix m) {
  auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace scherk
