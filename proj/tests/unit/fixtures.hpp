#pragma once

#include <random>

#include "a3kit/algebra.hpp"
#include "a3kit/bialgebra.hpp"
#include "a3kit/core.hpp"

namespace fx {

using namespace a3kit;

// e1e1 = e1e2 = e2e1 = e1 + 2e2, e2e2 = e2.
inline Algebra golden() {
  Algebra a(2);
  a.set_product(0, 0, {1, 2});
  a.set_product(0, 1, {1, 2});
  a.set_product(1, 0, {1, 2});
  a.set_product(1, 1, {0, 1});
  return a;
}

// Delta(e1) = e1 (x) e1, Delta(e2) = 0.
inline Comultiplication golden_delta() {
  Comultiplication d(2);
  d.dd(0, 0, 0) = 1;
  return d;
}

// e1e1 = e1, everything else zero.
inline Algebra idempotent_line() {
  Algebra a(2);
  a.sc(0, 0, 0) = 1;
  return a;
}

// e1e1 = e1, e1e2 = e2, rest zero. Associative, not commutative.
inline Algebra left_unit_line() {
  Algebra a(2);
  a.sc(0, 0, 0) = 1;
  a.sc(0, 1, 1) = 1;
  return a;
}

// Upper triangular 2x2 matrices in the basis E11, E12, E22.
inline Algebra upper_triangular() {
  Algebra a({"E11", "E12", "E22"});
  a.sc(0, 0, 0) = 1;
  a.sc(0, 1, 1) = 1;
  a.sc(1, 2, 1) = 1;
  a.sc(2, 2, 2) = 1;
  return a;
}

struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }
  Rational small(long lo = -2, long hi = 2) { return Rational(integer(lo, hi)); }
  Rational fraction() { return Rational(integer(-3, 3), integer(1, 3)); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(g); }

  Vector vector(std::size_t n) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = fraction();
    return v;
  }
  Matrix matrix(std::size_t r, std::size_t c, long lo = -2, long hi = 2) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = small(lo, hi);
    return m;
  }
  Matrix invertible(std::size_t n) {
    for (;;) {
      Matrix m = matrix(n, n);
      if (!determinant(m).is_zero()) return m;
    }
  }
  Tensor2 tensor2(std::size_t n, long lo = -2, long hi = 2) {
    return Tensor2::from_matrix(matrix(n, n, lo, hi));
  }
  Tensor2 skew(std::size_t n, long lo = -2, long hi = 2) {
    Tensor2 t(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        t(i, j) = small(lo, hi);
        t(j, i) = -t(i, j);
      }
    return t;
  }
  Tensor3 tensor3(std::size_t n) {
    Tensor3 t(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) t(a, b, c) = small();
    return t;
  }
  Algebra algebra(std::size_t n, double density = 0.5) {
    Algebra a(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (coin(density)) a.sc(i, j, k) = small();
    return a;
  }
  Comultiplication comultiplication(std::size_t n, double density = 0.3) {
    Comultiplication d(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (coin(density)) d.dd(i, j, k) = small(-1, 1);
    return d;
  }
};

inline Vector vec(std::initializer_list<Rational> xs) { return Vector(xs); }

}  // namespace fx
