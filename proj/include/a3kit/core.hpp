#pragma once

// Dense exact vectors, matrices and rank-2/3 tensors over Rational.
//
// Index conventions used across the library:
//   Vector v        coordinates in the stored basis.
//   Matrix M        row-major; (M v)[r] = sum_c M(r, c) v[c]. Column j of the
//                   matrix of a linear map holds the image of basis vector j.
//   Tensor2 t       t = sum_{a,b} t(a, b) e_a (x) e_b.
//   Tensor3 t       t = sum_{a,b,c} t(a, b, c) e_a (x) e_b (x) e_c.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "a3kit/rational.hpp"

namespace a3kit {

class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : c_(dim) {}
  explicit Vector(std::vector<Rational> coords) : c_(std::move(coords)) {}
  Vector(std::initializer_list<Rational> coords) : c_(coords) {}

  static Vector basis(std::size_t dim, std::size_t i);

  std::size_t dim() const { return c_.size(); }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  std::span<const Rational> coords() const { return c_; }
  bool is_zero() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Rational& s);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Rational& s, Vector v) { return v *= s; }
  friend Vector operator-(Vector v) { return v *= Rational(-1); }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Rational> c_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  // Columns are the given vectors.
  static Matrix from_columns(std::size_t rows, std::span<const Vector> cols);
  static Matrix from_rows(std::size_t cols, std::span<const Vector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  std::span<const Rational> entries() const { return e_; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& s, Matrix m) { return m *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> e_;
};

class Tensor2 {
 public:
  Tensor2() = default;
  explicit Tensor2(std::size_t dim) : n_(dim), c_(dim * dim) {}
  Tensor2(std::size_t dim, std::vector<Rational> coeffs);
  Tensor2(std::initializer_list<std::initializer_list<Rational>> rows);

  // u (x) v
  static Tensor2 pure(const Vector& u, const Vector& v);
  // Coefficient array as a matrix, and back.
  static Tensor2 from_matrix(const Matrix& m);
  Matrix as_matrix() const;

  std::size_t dim() const { return n_; }
  const Rational& operator()(std::size_t a, std::size_t b) const { return c_[a * n_ + b]; }
  Rational& operator()(std::size_t a, std::size_t b) { return c_[a * n_ + b]; }
  std::span<const Rational> coeffs() const { return c_; }
  bool is_zero() const;
  bool is_symmetric() const;
  bool is_skew() const;

  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  Tensor2& operator*=(const Rational& s);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend Tensor2 operator*(const Rational& s, Tensor2 t) { return t *= s; }
  friend bool operator==(const Tensor2&, const Tensor2&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> c_;
};

class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t dim) : n_(dim), c_(dim * dim * dim) {}
  Tensor3(std::size_t dim, std::vector<Rational> coeffs);

  static Tensor3 pure(const Vector& u, const Vector& v, const Vector& w);

  std::size_t dim() const { return n_; }
  const Rational& operator()(std::size_t a, std::size_t b, std::size_t c) const {
    return c_[(a * n_ + b) * n_ + c];
  }
  Rational& operator()(std::size_t a, std::size_t b, std::size_t c) {
    return c_[(a * n_ + b) * n_ + c];
  }
  std::span<const Rational> coeffs() const { return c_; }
  bool is_zero() const;

  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  Tensor3& operator*=(const Rational& s);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
  friend Tensor3 operator*(const Rational& s, Tensor3 t) { return t *= s; }
  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> c_;
};

/// xi(x (x) y (x) z) = y (x) z (x) x, i.e. out(b, c, a) = t(a, b, c).
Tensor3 xi_permute(const Tensor3& t);
/// tau(x (x) y) = y (x) x.
Tensor2 tau_swap(const Tensor2& t);
/// t - tau(t).
Tensor2 skew_part(const Tensor2& t);
/// (M (x) N) t. Both operators must be square of size t.dim().
Tensor2 apply_ops2(const Matrix& m, const Matrix& n, const Tensor2& t);
/// (M (x) N (x) P) t.
Tensor3 apply_ops3(const Matrix& m, const Matrix& n, const Matrix& p, const Tensor3& t);
/// (tau (x) id) t and (id (x) tau) t on rank-3 tensors.
Tensor3 swap_first(const Tensor3& t);
Tensor3 swap_last(const Tensor3& t);
/// t (x) v as a rank-3 tensor, and v (x) t.
Tensor3 tensor_right(const Tensor2& t, const Vector& v);
Tensor3 tensor_left(const Vector& v, const Tensor2& t);

// Exact linear algebra. All decisions are made with exact arithmetic.

/// Determinant by fraction-free (Bareiss) elimination.
Rational determinant(const Matrix& m);
/// Rank by fraction-free elimination.
std::size_t rank(const Matrix& m);
/// Inverse, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);
/// Whether v lies in the span of `span` (all of dimension v.dim()).
bool in_span(std::span<const Vector> span, const Vector& v);

}  // namespace a3kit
