#include "a3kit/core.hpp"

#include <algorithm>

#include "a3kit/error.hpp"

namespace a3kit {

namespace {

bool all_zero(std::span<const Rational> xs) {
  return std::all_of(xs.begin(), xs.end(), [](const Rational& r) { return r.is_zero(); });
}

template <class C>
void add_into(C& dst, const C& src, std::string_view where) {
  if (dst.size() != src.size()) throw_dimension_mismatch(where);
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] += src[i];
}

template <class C>
void sub_into(C& dst, const C& src, std::string_view where) {
  if (dst.size() != src.size()) throw_dimension_mismatch(where);
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= src[i];
}

template <class C>
void scale(C& dst, const Rational& s) {
  for (auto& x : dst) x *= s;
}

}  // namespace

// ---- Vector

Vector Vector::basis(std::size_t dim, std::size_t i) {
  if (i >= dim) throw_dimension_mismatch("Vector::basis");
  Vector v(dim);
  v[i] = 1;
  return v;
}

bool Vector::is_zero() const { return all_zero(c_); }
Vector& Vector::operator+=(const Vector& o) { add_into(c_, o.c_, "Vector +"); return *this; }
Vector& Vector::operator-=(const Vector& o) { sub_into(c_, o.c_, "Vector -"); return *this; }
Vector& Vector::operator*=(const Rational& s) { scale(c_, s); return *this; }

// ---- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_) throw_dimension_mismatch("Matrix");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw_dimension_mismatch("Matrix initializer");
    e_.insert(e_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].dim() != rows) throw_dimension_mismatch("Matrix::from_columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::span<const Vector> rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != cols) throw_dimension_mismatch("Matrix::from_rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  Vector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const { return all_zero(e_); }

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool Matrix::is_skew() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if ((*this)(r, c) != -(*this)(c, r)) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw_dimension_mismatch("Matrix +");
  add_into(e_, o.e_, "Matrix +");
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw_dimension_mismatch("Matrix -");
  sub_into(e_, o.e_, "Matrix -");
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) { scale(e_, s); return *this; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw_dimension_mismatch("Matrix *");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j).add_product(aik, b(k, j));
    }
  return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.dim()) throw_dimension_mismatch("Matrix * Vector");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) out[i].add_product(a(i, k), v[k]);
  return out;
}

// ---- Tensor2

Tensor2::Tensor2(std::size_t dim, std::vector<Rational> coeffs) : n_(dim), c_(std::move(coeffs)) {
  if (c_.size() != n_ * n_) throw_dimension_mismatch("Tensor2");
}

Tensor2::Tensor2(std::initializer_list<std::initializer_list<Rational>> rows) {
  n_ = rows.size();
  for (const auto& r : rows) {
    if (r.size() != n_) throw_dimension_mismatch("Tensor2 initializer");
    c_.insert(c_.end(), r.begin(), r.end());
  }
}

Tensor2 Tensor2::pure(const Vector& u, const Vector& v) {
  if (u.dim() != v.dim()) throw_dimension_mismatch("Tensor2::pure");
  Tensor2 t(u.dim());
  for (std::size_t a = 0; a < u.dim(); ++a)
    for (std::size_t b = 0; b < v.dim(); ++b) t(a, b) = u[a] * v[b];
  return t;
}

Tensor2 Tensor2::from_matrix(const Matrix& m) {
  if (!m.is_square()) throw_dimension_mismatch("Tensor2::from_matrix");
  return Tensor2(m.rows(), std::vector<Rational>(m.entries().begin(), m.entries().end()));
}

Matrix Tensor2::as_matrix() const { return Matrix(n_, n_, c_); }
bool Tensor2::is_zero() const { return all_zero(c_); }
bool Tensor2::is_symmetric() const { return as_matrix().is_symmetric(); }
bool Tensor2::is_skew() const { return as_matrix().is_skew(); }

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  if (n_ != o.n_) throw_dimension_mismatch("Tensor2 +");
  add_into(c_, o.c_, "Tensor2 +");
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
  if (n_ != o.n_) throw_dimension_mismatch("Tensor2 -");
  sub_into(c_, o.c_, "Tensor2 -");
  return *this;
}

Tensor2& Tensor2::operator*=(const Rational& s) { scale(c_, s); return *this; }

// ---- Tensor3

Tensor3::Tensor3(std::size_t dim, std::vector<Rational> coeffs) : n_(dim), c_(std::move(coeffs)) {
  if (c_.size() != n_ * n_ * n_) throw_dimension_mismatch("Tensor3");
}

Tensor3 Tensor3::pure(const Vector& u, const Vector& v, const Vector& w) {
  if (u.dim() != v.dim() || v.dim() != w.dim()) throw_dimension_mismatch("Tensor3::pure");
  const std::size_t n = u.dim();
  Tensor3 t(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) t(a, b, c) = u[a] * v[b] * w[c];
  return t;
}

bool Tensor3::is_zero() const { return all_zero(c_); }

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  if (n_ != o.n_) throw_dimension_mismatch("Tensor3 +");
  add_into(c_, o.c_, "Tensor3 +");
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  if (n_ != o.n_) throw_dimension_mismatch("Tensor3 -");
  sub_into(c_, o.c_, "Tensor3 -");
  return *this;
}

Tensor3& Tensor3::operator*=(const Rational& s) { scale(c_, s); return *this; }

// ---- tensor operations

Tensor3 xi_permute(const Tensor3& t) {
  const std::size_t n = t.dim();
  Tensor3 out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) out(b, c, a) = t(a, b, c);
  return out;
}

Tensor2 tau_swap(const Tensor2& t) {
  const std::size_t n = t.dim();
  Tensor2 out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out(b, a) = t(a, b);
  return out;
}

Tensor2 skew_part(const Tensor2& t) { return t - tau_swap(t); }

Tensor2 apply_ops2(const Matrix& m, const Matrix& n, const Tensor2& t) {
  const std::size_t d = t.dim();
  if (m.rows() != d || m.cols() != d || n.rows() != d || n.cols() != d) {
    throw_dimension_mismatch("apply_ops2");
  }
  // (M t N^T), done as two passes.
  Tensor2 half(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      const Rational& tab = t(a, b);
      if (tab.is_zero()) continue;
      for (std::size_t bp = 0; bp < d; ++bp) half(a, bp).add_product(n(bp, b), tab);
    }
  Tensor2 out(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t ap = 0; ap < d; ++ap) {
      const Rational& mpa = m(ap, a);
      if (mpa.is_zero()) continue;
      for (std::size_t bp = 0; bp < d; ++bp) out(ap, bp).add_product(mpa, half(a, bp));
    }
  return out;
}

Tensor3 apply_ops3(const Matrix& m, const Matrix& n, const Matrix& p, const Tensor3& t) {
  const std::size_t d = t.dim();
  for (const Matrix* op : {&m, &n, &p}) {
    if (op->rows() != d || op->cols() != d) throw_dimension_mismatch("apply_ops3");
  }
  Tensor3 s1(d), s2(d), out(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        const Rational& v = t(a, b, c);
        if (v.is_zero()) continue;
        for (std::size_t cp = 0; cp < d; ++cp) s1(a, b, cp).add_product(p(cp, c), v);
      }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        const Rational& v = s1(a, b, c);
        if (v.is_zero()) continue;
        for (std::size_t bp = 0; bp < d; ++bp) s2(a, bp, c).add_product(n(bp, b), v);
      }
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        const Rational& v = s2(a, b, c);
        if (v.is_zero()) continue;
        for (std::size_t ap = 0; ap < d; ++ap) out(ap, b, c).add_product(m(ap, a), v);
      }
  return out;
}

Tensor3 swap_first(const Tensor3& t) {
  const std::size_t n = t.dim();
  Tensor3 out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) out(b, a, c) = t(a, b, c);
  return out;
}

Tensor3 swap_last(const Tensor3& t) {
  const std::size_t n = t.dim();
  Tensor3 out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) out(a, c, b) = t(a, b, c);
  return out;
}

Tensor3 tensor_right(const Tensor2& t, const Vector& v) {
  const std::size_t n = t.dim();
  if (v.dim() != n) throw_dimension_mismatch("tensor_right");
  Tensor3 out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) out(a, b, c) = t(a, b) * v[c];
  return out;
}

Tensor3 tensor_left(const Vector& v, const Tensor2& t) {
  const std::size_t n = t.dim();
  if (v.dim() != n) throw_dimension_mismatch("tensor_left");
  Tensor3 out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) out(a, b, c) = v[a] * t(b, c);
  return out;
}

// ---- exact linear algebra

namespace {

// Bareiss elimination on a copy. Divisions are exact over Q. Returns rank;
// `det` receives the determinant for square input (zero if singular).
std::size_t bareiss(Matrix m, Rational* det) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  Rational prev = 1;
  int swaps = 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(pivot, k), m(rank, k));
      ++swaps;
    }
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        Rational v = m(rank, c) * m(r, k);
        v.sub_product(m(r, c), m(rank, k));
        m(r, k) = v / prev;
      }
      m(r, c) = 0;
    }
    prev = m(rank, c);
    ++rank;
  }
  if (det) {
    if (rows == cols && rank == rows) {
      Rational d = m(rows - 1, cols - 1);
      if (swaps % 2) d = -d;
      *det *= d;
    } else {
      *det = 0;
    }
  }
  return rank;
}

}  // namespace

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw_dimension_mismatch("determinant");
  if (m.rows() == 0) return 1;
  Rational det = 1;
  bareiss(m, &det);
  return det;
}

std::size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss(m, nullptr);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw_dimension_mismatch("inverse");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a(pivot, c).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != c) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a(pivot, k), a(c, k));
        std::swap(inv(pivot, k), inv(c, k));
      }
    }
    const Rational p = a(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      a(c, k) /= p;
      inv(c, k) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      const Rational f = a(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        a(r, k).sub_product(f, a(c, k));
        inv(r, k).sub_product(f, inv(c, k));
      }
    }
  }
  return inv;
}

bool in_span(std::span<const Vector> span, const Vector& v) {
  if (v.is_zero()) return true;
  if (span.empty()) return false;
  const Matrix base = Matrix::from_rows(v.dim(), span);
  std::vector<Vector> extended(span.begin(), span.end());
  extended.push_back(v);
  return rank(Matrix::from_rows(v.dim(), extended)) == rank(base);
}

}  // namespace a3kit
