// Naive re-evaluation of every identity. Everything here works on flat
// coefficient vectors with its own product routine; none of the contraction
// helpers used by the checkers are touched.

#include <functional>
#include <map>

#include "a3kit/error.hpp"
#include "a3kit/search.hpp"

namespace a3kit {

namespace {

using Vec = std::vector<Rational>;
using Mat = std::vector<Rational>;  // d x d, row-major

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = Rational(1);
  return v;
}

Vec add(Vec a, const Vec& b, const Rational& s = Rational(1)) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

Vec scale(Vec a, const Rational& s) {
  for (auto& x : a) x *= s;
  return a;
}

struct Prod {
  const Algebra& a;
  Vec operator()(const Vec& x, const Vec& y) const {
    const std::size_t n = a.dim();
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * a.sc(i, j, k);
    return out;
  }
};

Vec assoc(const Prod& m, const Vec& x, const Vec& y, const Vec& z) {
  return add(m(m(x, y), z), m(x, m(y, z)), Rational(-1));
}

Vec law_value(const Prod& m, LawKind law, const Vec& x, const Vec& y, const Vec& z) {
  switch (law) {
    case LawKind::A3:
      return add(add(assoc(m, x, y, z), assoc(m, y, z, x)), assoc(m, z, x, y));
    case LawKind::Associative:
      return assoc(m, x, y, z);
    case LawKind::AdmissiblePoisson: {
      Vec v = scale(assoc(m, x, y, z), Rational(3));
      v = add(v, m(m(x, z), y), Rational(-1));
      v = add(v, m(m(y, z), x), Rational(-1));
      v = add(v, m(m(y, x), z));
      return add(v, m(m(z, x), y));
    }
    case LawKind::Admissible: {
      Vec v = add(m(m(x, z), y), m(x, m(z, y)), Rational(-1));
      v = add(v, m(y, m(z, x)), Rational(-1));
      return add(v, m(m(y, z), x));
    }
    case LawKind::LeftSymmetric:
      return add(assoc(m, x, y, z), assoc(m, y, x, z), Rational(-1));
    case LawKind::RightSymmetric:
      return add(assoc(m, x, y, z), assoc(m, x, z, y), Rational(-1));
    case LawKind::LieAdmissible: {
      auto br = [&](const Vec& u, const Vec& v) { return add(m(u, v), m(v, u), Rational(-1)); };
      return add(add(br(br(x, y), z), br(br(y, z), x)), br(br(z, x), y));
    }
  }
  return {};
}

ResidualArray law_part(const Algebra& a, LawKind law) {
  const std::size_t n = a.dim();
  const Prod m{a};
  ResidualArray res({n, n, n, n}, 3);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        res.set_block({x, y, z}, law_value(m, law, unit(n, x), unit(n, y), unit(n, z)));
  return res;
}

// Matrices as raw arrays.
Mat matmul(const Mat& p, const Mat& q, std::size_t d) {
  Mat out(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) out[i * d + j] += p[i * d + k] * q[k * d + j];
  return out;
}

Mat raw(const Matrix& m) {
  Mat out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

// sum_i x_i ops[i]
Mat act(const std::vector<Matrix>& ops, const Vec& x, std::size_t rows, std::size_t cols) {
  Mat out(rows * cols);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) out[r * cols + c] += x[i] * ops[i](r, c);
  return out;
}

Vec apply(const Mat& m, const Vec& v, std::size_t rows) {
  const std::size_t cols = v.size();
  Vec out(rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out[r] += m[r * cols + c] * v[c];
  return out;
}

Mat msum(std::initializer_list<std::pair<int, Mat>> terms) {
  Mat out(terms.begin()->second.size());
  for (const auto& [s, m] : terms)
    for (std::size_t i = 0; i < m.size(); ++i) out[i] += Rational(s) * m[i];
  return out;
}

ResidualArray rep_part(const Representation& rho) {
  const std::size_t n = rho.algebra.dim(), d = rho.vdim;
  const Prod m{rho.algebra};
  ResidualArray res({n, n, d, d}, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec xy = m(unit(n, i), unit(n, j));
      const Mat li = raw(rho.l[i]), lj = raw(rho.l[j]), ri = raw(rho.r[i]), rj = raw(rho.r[j]);
      res.set_block({i, j}, msum({{1, act(rho.l, xy, d, d)},
                                  {-1, act(rho.r, xy, d, d)},
                                  {1, matmul(ri, lj, d)},
                                  {-1, matmul(li, lj, d)},
                                  {1, matmul(rj, ri, d)},
                                  {-1, matmul(lj, ri, d)}}));
    }
  return res;
}

BruteResidual associative_rep(const Representation& rho) {
  const std::size_t n = rho.algebra.dim(), d = rho.vdim;
  const Prod m{rho.algebra};
  ResidualArray left({n, n, d, d}, 2), right({n, n, d, d}, 2), mixed({n, n, d, d}, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec xy = m(unit(n, i), unit(n, j));
      const Mat li = raw(rho.l[i]), rj = raw(rho.r[j]), lj = raw(rho.l[j]), ri = raw(rho.r[i]);
      left.set_block({i, j}, msum({{1, act(rho.l, xy, d, d)}, {-1, matmul(li, lj, d)}}));
      right.set_block({i, j}, msum({{1, act(rho.r, xy, d, d)}, {-1, matmul(rj, ri, d)}}));
      mixed.set_block({i, j}, msum({{1, matmul(li, rj, d)}, {-1, matmul(rj, li, d)}}));
    }
  return {{{"left", left}, {"right", right}, {"mixed", mixed}}, {}};
}

ResidualArray admissible_rep(const Representation& rho) {
  const std::size_t n = rho.algebra.dim(), d = rho.vdim;
  ResidualArray res({n, n, d, d}, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Mat li = raw(rho.l[i]), rj = raw(rho.r[j]), lj = raw(rho.l[j]), ri = raw(rho.r[i]);
      res.set_block({i, j}, msum({{1, matmul(rj, li, d)},
                                  {-1, matmul(li, rj, d)},
                                  {1, matmul(ri, lj, d)},
                                  {-1, matmul(lj, ri, d)}}));
    }
  return res;
}

BruteResidual equivalence(const Representation& a, const Representation& b, const Matrix& phi) {
  const std::size_t n = a.algebra.dim(), d = a.vdim;
  const Mat p = raw(phi);
  ResidualArray left({n, d, d}, 1), right({n, d, d}, 1);
  for (std::size_t i = 0; i < n; ++i) {
    left.set_block({i}, msum({{1, matmul(p, raw(a.l[i]), d)}, {-1, matmul(raw(b.l[i]), p, d)}}));
    right.set_block({i}, msum({{1, matmul(p, raw(a.r[i]), d)}, {-1, matmul(raw(b.r[i]), p, d)}}));
  }
  return {{{"left", left}, {"right", right}}, {}};
}

BruteResidual matched_pair(const MatchedPairData& mp) {
  const std::size_t n = mp.A.dim(), m = mp.B.dim();
  const Prod pa{mp.A}, pb{mp.B};
  BruteResidual out;
  out.parts.emplace_back("A3(A)", law_part(mp.A, LawKind::A3));
  out.parts.emplace_back("A3(B)", law_part(mp.B, LawKind::A3));
  out.parts.emplace_back("rep on B", rep_part(Representation(mp.A, m, mp.lA, mp.rA)));
  out.parts.emplace_back("rep on A", rep_part(Representation(mp.B, n, mp.lB, mp.rB)));

  // B acting on A through (rB - lB), A acting on B through (rA - lA)
  auto dB = [&](const Vec& b, const Vec& x) {
    return add(apply(act(mp.rB, b, n, n), x, n), apply(act(mp.lB, b, n, n), x, n), Rational(-1));
  };
  auto dA = [&](const Vec& x, const Vec& b) {
    return add(apply(act(mp.rA, x, m, m), b, m), apply(act(mp.lA, x, m, m), b, m), Rational(-1));
  };
  ResidualArray ac({n, n, m, n}, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t a = 0; a < m; ++a) {
        const Vec x = unit(n, i), y = unit(n, j), f = unit(m, a);
        const Vec rby = apply(act(mp.rB, f, n, n), y, n);
        const Vec lbx = apply(act(mp.lB, f, n, n), x, n);
        Vec v = dB(f, pa(x, y));
        v = add(v, pa(x, rby), Rational(-1));
        v = add(v, pa(rby, x));
        v = add(v, pa(y, lbx), Rational(-1));
        v = add(v, pa(lbx, y));
        v = add(v, dB(apply(act(mp.lA, y, m, m), f, m), x), Rational(-1));
        v = add(v, dB(apply(act(mp.rA, x, m, m), f, m), y), Rational(-1));
        ac.set_block({i, j, a}, v);
      }
  ResidualArray bc({n, m, m, m}, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        const Vec x = unit(n, i), fa = unit(m, a), fb = unit(m, b);
        const Vec rab = apply(act(mp.rA, x, m, m), fb, m);
        const Vec laa = apply(act(mp.lA, x, m, m), fa, m);
        Vec v = dA(x, pb(fa, fb));
        v = add(v, pb(fa, rab), Rational(-1));
        v = add(v, pb(rab, fa));
        v = add(v, pb(fb, laa), Rational(-1));
        v = add(v, pb(laa, fb));
        v = add(v, dA(apply(act(mp.lB, fb, n, n), x, n), fa), Rational(-1));
        v = add(v, dA(apply(act(mp.rB, fa, n, n), x, n), fb), Rational(-1));
        bc.set_block({i, a, b}, v);
      }
  out.parts.emplace_back("A-compatibility", ac);
  out.parts.emplace_back("B-compatibility", bc);
  return out;
}

// Cofactor expansion; fine at the sizes this is used for.
Rational laplace(const std::vector<Rational>& m, std::size_t n) {
  if (n == 0) return Rational(1);
  if (n == 1) return m[0];
  Rational det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[c].is_zero()) continue;
    std::vector<Rational> minor;
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) minor.push_back(m[r * n + k]);
    const Rational t = m[c] * laplace(minor, n - 1);
    if (c % 2) det -= t; else det += t;
  }
  return det;
}

BruteResidual quadratic(const Algebra& a, const BilinearForm& f) {
  const std::size_t n = a.dim();
  const Prod m{a};
  auto b = [&](const Vec& x, const Vec& y) {
    Rational s;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += x[i] * f.gram(i, j) * y[j];
    return s;
  };
  bool sym = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sym = sym && f.gram(i, j) == f.gram(j, i);
  ResidualArray inv({n, n, n}, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec x = unit(n, i), y = unit(n, j), z = unit(n, k);
        inv.block({i, j, k})[0] = b(m(x, y), z) - b(x, m(y, z));
      }
  return {{{"invariant", inv}},
          {{"symmetric", sym}, {"nondegenerate", !laplace(raw(f.gram), n).is_zero()}}};
}

// Flat rank-3 tensors, index (p*n + q)*n + s.
using T3 = std::vector<Rational>;

T3 iterate_left(const Comultiplication& d, std::size_t i) {
  const std::size_t n = d.dim();
  T3 t(n * n * n);
  // (Delta (x) id) Delta(e_i) = sum dd(i,j,k) Delta(e_j) (x) e_k
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) t[(p * n + q) * n + k] += d.dd(i, j, k) * d.dd(j, p, q);
  return t;
}

T3 iterate_right(const Comultiplication& d, std::size_t i) {
  const std::size_t n = d.dim();
  T3 t(n * n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) t[(j * n + p) * n + q] += d.dd(i, j, k) * d.dd(k, p, q);
  return t;
}

template <class F>
ResidualArray per_basis(const Comultiplication& d, F&& entry) {
  const std::size_t n = d.dim();
  ResidualArray res({n, n, n, n}, 1);
  for (std::size_t i = 0; i < n; ++i) {
    const T3 l = iterate_left(d, i), r = iterate_right(d, i);
    auto at = [&](const T3& t, std::size_t p, std::size_t q, std::size_t s) {
      return t[(p * n + q) * n + s];
    };
    auto blk = res.block({i});
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        for (std::size_t s = 0; s < n; ++s) blk[(p * n + q) * n + s] = entry(at, l, r, p, q, s);
  }
  return res;
}

ResidualArray coalgebra_part(const Comultiplication& d) {
  return per_basis(d, [](auto at, const T3& l, const T3& r, std::size_t p, std::size_t q,
                         std::size_t s) {
    // cyclic sum over (p,q,s), (s,p,q), (q,s,p)
    return at(l, p, q, s) - at(r, p, q, s) + at(l, s, p, q) - at(r, s, p, q) + at(l, q, s, p) -
           at(r, q, s, p);
  });
}

// Element-level tensors for the compatibility identities.
struct Pure {
  std::size_t n;
  std::vector<Rational> c;
  explicit Pure(std::size_t n) : n(n), c(n * n) {}
  void put(const Vec& u, const Vec& v, const Rational& s) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) c[a * n + b] += s * u[a] * v[b];
  }
};

Pure comul(const Comultiplication& d, const Vec& x) {
  const std::size_t n = d.dim();
  Pure t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t.c[j * n + k] += x[i] * d.dd(i, j, k);
  return t;
}

// sum over terms c_jk e_j (x) e_k of f(e_j, e_k, c_jk, out)
template <class F>
void each_term(const Pure& t, F&& f) {
  for (std::size_t j = 0; j < t.n; ++j)
    for (std::size_t k = 0; k < t.n; ++k)
      if (!t.c[j * t.n + k].is_zero()) f(unit(t.n, j), unit(t.n, k), t.c[j * t.n + k]);
}

BruteResidual bialgebra(const Algebra& a, const Comultiplication& d) {
  const std::size_t n = a.dim();
  const Prod m{a};
  ResidualArray first({n, n, n, n}, 2), second({n, n, n, n}, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec x = unit(n, i), y = unit(n, j);
      const Pure dx = comul(d, x), dy = comul(d, y);
      // T1 = Delta(xy) - (R(y) (x) id) Delta(x) - (id (x) L(x)) Delta(y)
      Pure t1 = comul(d, m(x, y));
      each_term(dx, [&](const Vec& u, const Vec& v, const Rational& c) { t1.put(m(u, y), v, -c); });
      each_term(dy, [&](const Vec& u, const Vec& v, const Rational& c) { t1.put(u, m(x, v), -c); });
      Pure f(n);
      each_term(t1, [&](const Vec& u, const Vec& v, const Rational& c) {
        f.put(v, u, c);
        f.put(u, v, -c);
      });
      each_term(dx, [&](const Vec& u, const Vec& v, const Rational& c) {
        f.put(v, m(y, u), c);   // (id (x) L(y)) tau
        f.put(m(v, y), u, -c);  // (R(y) (x) id) tau
      });
      each_term(dy, [&](const Vec& u, const Vec& v, const Rational& c) {
        f.put(m(x, u), v, c);
        f.put(u, m(v, x), -c);
      });
      first.set_block({i, j}, f.c);

      Pure s = comul(d, add(m(x, y), m(y, x), Rational(-1)));
      each_term(dx, [&](const Vec& u, const Vec& v, const Rational& c) {
        s.put(u, m(y, v), c);
        s.put(m(u, y), v, -c);
        s.put(m(y, u), v, c);
        s.put(u, m(v, y), -c);
      });
      // - (id (x) L(x) - R(x) (x) id)(Delta(y) - tau Delta(y))
      each_term(dy, [&](const Vec& u, const Vec& v, const Rational& c) {
        s.put(u, m(x, v), -c);
        s.put(m(u, x), v, c);
        s.put(v, m(x, u), c);
        s.put(m(v, x), u, -c);
      });
      second.set_block({i, j}, s.c);
    }
  return {{{"A3", law_part(a, LawKind::A3)},
           {"coalgebra", coalgebra_part(d)},
           {"compatibility-1", first},
           {"compatibility-2", second}},
          {}};
}

// AY(r) from r = sum r(a,b) e_a (x) e_b taken term by term.
std::vector<Rational> ay_terms(const Algebra& a, const Tensor2& r) {
  const std::size_t n = a.dim();
  const Prod m{a};
  std::vector<Rational> out(n * n * n);
  auto put = [&](const Vec& p, const Vec& q, const Vec& s, const Rational& c) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) out[(i * n + j) * n + k] += c * p[i] * q[j] * s[k];
  };
  for (std::size_t a1 = 0; a1 < n; ++a1)
    for (std::size_t b1 = 0; b1 < n; ++b1) {
      if (r(a1, b1).is_zero()) continue;
      for (std::size_t a2 = 0; a2 < n; ++a2)
        for (std::size_t b2 = 0; b2 < n; ++b2) {
          if (r(a2, b2).is_zero()) continue;
          const Rational c = r(a1, b1) * r(a2, b2);
          const Vec ui = unit(n, a1), vi = unit(n, b1), uj = unit(n, a2), vj = unit(n, b2);
          put(ui, uj, m(vi, vj), c);
          put(ui, m(uj, vi), vj, -c);
          put(m(ui, uj), vi, vj, c);
        }
    }
  return out;
}

Vec rsharp_of(const Tensor2& r, const Vec& astar) {
  const std::size_t n = r.dim();
  Vec out(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out[b] += astar[a] * r(a, b);
  return out;
}

ResidualArray rb_gap(const Algebra& a, const Tensor2& r) {
  const std::size_t n = a.dim();
  const Prod m{a};
  // Delta_r(e_i) = sum r(a,b) (e_a (x) e_i e_b - e_a e_i (x) e_b)
  std::vector<Pure> dr;
  for (std::size_t i = 0; i < n; ++i) {
    Pure t(n);
    const Vec x = unit(n, i);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        if (r(p, q).is_zero()) continue;
        t.put(unit(n, p), m(x, unit(n, q)), r(p, q));
        t.put(m(unit(n, p), x), unit(n, q), -r(p, q));
      }
    dr.push_back(t);
  }
  const auto ay = ay_terms(a, r);
  ResidualArray res({n, n, n}, 3);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      Vec circ(n);  // e_p* o e_q*, dual to Delta_r
      for (std::size_t i = 0; i < n; ++i) circ[i] = dr[i].c[p * n + q];
      const Vec lhs = add(m(rsharp_of(r, unit(n, p)), rsharp_of(r, unit(n, q))),
                          rsharp_of(r, circ), Rational(-1));
      for (std::size_t c = 0; c < n; ++c) res.block({p, q, c})[0] = lhs[c] - ay[(p * n + q) * n + c];
    }
  return res;
}

ResidualArray relative_rb(const Algebra& a, const Representation& rho, const Matrix& t) {
  const std::size_t n = a.dim(), d = rho.vdim;
  const Prod m{a};
  auto T = [&](const Vec& v) {
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < d; ++j) out[i] += t(i, j) * v[j];
    return out;
  };
  ResidualArray res({d, d, n}, 2);
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v) {
      const Vec eu = unit(d, u), ev = unit(d, v);
      const Vec tu = T(eu), tv = T(ev);
      const Vec inner = add(apply(act(rho.l, tu, d, d), ev, d), apply(act(rho.r, tv, d, d), eu, d));
      res.set_block({u, v}, add(m(tu, tv), T(inner), Rational(-1)));
    }
  return res;
}

ResidualArray rb_operator_form(const Algebra& a, const Tensor2& r) {
  const std::size_t n = a.dim();
  const Prod m{a};
  ResidualArray res({n, n, n}, 2);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Vec xp = rsharp_of(r, unit(n, p)), xq = rsharp_of(r, unit(n, q));
      // <R*(xp) e_q* + L*(xq) e_p*, e_c> = (e_c xp)_q + (xq e_c)_p
      Vec arg(n);
      for (std::size_t c = 0; c < n; ++c) arg[c] = m(unit(n, c), xp)[q] + m(xq, unit(n, c))[p];
      res.set_block({p, q}, add(m(xp, xq), rsharp_of(r, arg), Rational(-1)));
    }
  return res;
}

ResidualArray connes(const Algebra& a, const BilinearForm& f) {
  const std::size_t n = a.dim();
  const Prod m{a};
  auto w = [&](const Vec& x, const Vec& y) {
    Rational s;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s += x[i] * f.gram(i, j) * y[j];
    return s;
  };
  ResidualArray res({n, n, n}, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec x = unit(n, i), y = unit(n, j), z = unit(n, k);
        res.block({i, j, k})[0] = w(m(x, y), z) + w(m(y, z), x) + w(m(z, x), y);
      }
  return res;
}

template <class T>
const T& need(const std::optional<T>& v, std::string_view what, std::string_view expr) {
  if (!v) {
    throw Error(ErrorKind::PreconditionFailed,
                std::string(expr) + ": missing input '" + std::string(what) + "'");
  }
  return *v;
}

BruteResidual single(std::string name, ResidualArray r) { return {{{std::move(name), std::move(r)}}, {}}; }

std::optional<LawKind> law_of(std::string_view id) {
  if (!id.starts_with("law:")) return std::nullopt;
  return parse_law(id.substr(4));
}

}  // namespace

bool BruteResidual::is_zero() const {
  for (const auto& [name, arr] : parts)
    if (!arr.is_zero()) return false;
  for (const auto& [name, ok] : conditions)
    if (!ok) return false;
  return true;
}

const std::vector<std::string>& brute_expressions() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (LawKind l : kAllLaws) v.push_back("law:" + std::string(law_name(l)));
    for (const char* s : {"jacobi", "homomorphism", "representation", "associative_representation",
                          "admissible_representation", "equivalence", "matched_pair", "quadratic",
                          "coalgebra", "coassociative", "admissible_coalgebra", "bialgebra", "aybe",
                          "aybe_rb_gap", "relative_rb", "rb_operator_form", "connes_cocycle"})
      v.emplace_back(s);
    return v;
  }();
  return ids;
}

BruteResidual brute_residual(std::string_view id, const BruteInputs& in) {
  if (auto law = law_of(id)) return single(std::string(id), law_part(need(in.algebra, "algebra", id), *law));
  if (id == "jacobi") {
    const Algebra& a = need(in.algebra, "algebra", id);
    const std::size_t n = a.dim();
    const Prod m{a};
    ResidualArray res({n, n, n, n}, 3);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z) {
          const Vec ex = unit(n, x), ey = unit(n, y), ez = unit(n, z);
          res.set_block({x, y, z}, add(add(m(m(ex, ey), ez), m(m(ey, ez), ex)), m(m(ez, ex), ey)));
        }
    return single("jacobi", res);
  }
  if (id == "homomorphism") {
    const Algebra& a1 = need(in.algebra, "algebra", id);
    const Algebra& a2 = need(in.algebra2, "algebra2", id);
    const Matrix& phi = need(in.map, "map", id);
    const std::size_t n1 = a1.dim(), n2 = a2.dim();
    const Prod m1{a1}, m2{a2};
    auto f = [&](const Vec& v) {
      Vec out(n2);
      for (std::size_t r = 0; r < n2; ++r)
        for (std::size_t c = 0; c < n1; ++c) out[r] += phi(r, c) * v[c];
      return out;
    };
    ResidualArray res({n1, n1, n2}, 2);
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n1; ++j) {
        const Vec x = unit(n1, i), y = unit(n1, j);
        res.set_block({i, j}, add(f(m1(x, y)), m2(f(x), f(y)), Rational(-1)));
      }
    return single("homomorphism", res);
  }
  if (id == "representation") return single("representation", rep_part(need(in.rep, "rep", id)));
  if (id == "associative_representation") return associative_rep(need(in.rep, "rep", id));
  if (id == "admissible_representation")
    return single("admissible_representation", admissible_rep(need(in.rep, "rep", id)));
  if (id == "equivalence")
    return equivalence(need(in.rep, "rep", id), need(in.rep2, "rep2", id), need(in.map, "map", id));
  if (id == "matched_pair") return matched_pair(need(in.matched, "matched", id));
  if (id == "quadratic") return quadratic(need(in.algebra, "algebra", id), need(in.form, "form", id));
  if (id == "coalgebra") return single("coalgebra", coalgebra_part(need(in.delta, "delta", id)));
  if (id == "coassociative") {
    return single("coassociative",
                  per_basis(need(in.delta, "delta", id),
                            [](auto at, const T3& l, const T3& r, std::size_t p, std::size_t q,
                               std::size_t s) { return at(l, p, q, s) - at(r, p, q, s); }));
  }
  if (id == "admissible_coalgebra") {
    // xi (tau (x) id) L - (id (x) tau) R + xi^2 (L - R), entry (p,q,s)
    return single("admissible_coalgebra",
                  per_basis(need(in.delta, "delta", id),
                            [](auto at, const T3& l, const T3& r, std::size_t p, std::size_t q,
                               std::size_t s) {
                              return at(l, p, s, q) - at(r, p, s, q) + at(l, q, s, p) -
                                     at(r, q, s, p);
                            }));
  }
  if (id == "bialgebra") return bialgebra(need(in.algebra, "algebra", id), need(in.delta, "delta", id));
  if (id == "aybe") {
    const Algebra& a = need(in.algebra, "algebra", id);
    const std::size_t n = a.dim();
    const auto ay = ay_terms(a, need(in.r, "r", id));
    ResidualArray res({n, n, n}, 3);
    for (std::size_t i = 0; i < ay.size(); ++i) res.block({i / (n * n), (i / n) % n, i % n})[0] = ay[i];
    return single("aybe", res);
  }
  if (id == "aybe_rb_gap") return single("aybe_rb_gap", rb_gap(need(in.algebra, "algebra", id), need(in.r, "r", id)));
  if (id == "relative_rb") {
    return single("relative_rb", relative_rb(need(in.algebra, "algebra", id), need(in.rep, "rep", id),
                                             need(in.map, "map", id)));
  }
  if (id == "rb_operator_form")
    return single("rb_operator_form", rb_operator_form(need(in.algebra, "algebra", id), need(in.r, "r", id)));
  if (id == "connes_cocycle")
    return single("connes_cocycle", connes(need(in.algebra, "algebra", id), need(in.form, "form", id)));
  throw Error(ErrorKind::UnknownExpression, "unknown expression '" + std::string(id) + "'");
}

}  // namespace a3kit
