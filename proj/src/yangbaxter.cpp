#include "a3kit/yangbaxter.hpp"

#include "a3kit/error.hpp"

namespace a3kit {

namespace {

void require_admissible(const Algebra& a, std::string_view what) {
  auto rep = check_law(a, LawKind::Admissible);
  if (!rep.passed) {
    throw Error(ErrorKind::AdmissibilityRequired, std::string(what) + ": algebra is not admissible",
                rep);
  }
}

void require_skew(const Tensor2& r, std::string_view what) {
  if (!r.is_skew()) throw Error(ErrorKind::NotSkew, std::string(what) + ": r is not skew-symmetric");
}

void require_dim(const Algebra& a, const Tensor2& r, std::string_view what) {
  if (r.dim() != a.dim()) throw_dimension_mismatch(what);
}

Tensor3 cyclic_sum(const Tensor3& t) {
  const Tensor3 x1 = xi_permute(t);
  return t + x1 + xi_permute(x1);
}

}  // namespace

Tensor3 aybe_residual(const Algebra& a, const Tensor2& r) {
  require_dim(a, r, "aybe_residual");
  const std::size_t n = a.dim();
  Tensor3 out(n);
  // One pass over pairs of nonzero entries of r feeds all three terms.
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Rational& rxy = r(x, y);
      if (rxy.is_zero()) continue;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
          const Rational& ruv = r(u, v);
          if (ruv.is_zero()) continue;
          const Rational w = rxy * ruv;
          for (std::size_t m = 0; m < n; ++m) {
            // r(a,p) r(b,q) sc(p,q,m) with (a,p) = (x,y), (b,q) = (u,v)
            out(x, u, m).add_product(w, a.sc(y, v, m));
            // - r(a,t) r(s,m) sc(s,t,b) with (a,t) = (x,y), (s,m') = (u,v)
            out(x, m, v).sub_product(w, a.sc(u, y, m));
            // + r(s,b) r(t,m) sc(s,t,a) with (s,b) = (x,y), (t,m') = (u,v)
            out(m, y, v).add_product(w, a.sc(x, u, m));
          }
        }
    }
  return out;
}

CheckReport check_aybe(const Algebra& a, const Tensor2& r) {
  const Tensor3 ay = aybe_residual(a, r);
  const std::size_t n = a.dim();
  ResidualArray res({n, n, n}, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) res.block({i, j, k})[0] = ay(i, j, k);
  return CheckReport::from_residual("AYBE", res);
}

Comultiplication delta_from_r(const Algebra& a, const Tensor2& r) {
  require_dim(a, r, "delta_from_r");
  const std::size_t n = a.dim();
  const Matrix id = Matrix::identity(n);
  Comultiplication d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Tensor2 t = apply_ops2(id, a.left(i), r) - apply_ops2(a.right(i), id, r);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d.dd(i, j, k) = t(j, k);
  }
  return d;
}

bool CocycleResiduals::cyclic_zero() const {
  for (const auto& t : cyclic)
    if (!t.is_zero()) return false;
  return true;
}

bool CocycleResiduals::compatibility_zero() const {
  for (const auto& t : first)
    if (!t.is_zero()) return false;
  for (const auto& t : second)
    if (!t.is_zero()) return false;
  return true;
}

CocycleResiduals cocycle_conditions_residual(const Algebra& a, const Tensor2& r) {
  require_dim(a, r, "cocycle_conditions_residual");
  require_admissible(a, "cocycle_conditions_residual");
  const std::size_t n = a.dim();
  const Matrix id = Matrix::identity(n);
  const Tensor2 s = r + tau_swap(r);
  const Tensor3 ay = aybe_residual(a, r);
  std::vector<Matrix> L, R;
  for (std::size_t i = 0; i < n; ++i) {
    L.push_back(a.left(i));
    R.push_back(a.right(i));
  }
  CocycleResiduals out;

  for (std::size_t x = 0; x < n; ++x) {
    const Matrix& Lx = L[x];
    const Matrix& Rx = R[x];
    // (R(x) (x) id (x) id - id (x) id (x) L(x)) AY(r)
    Tensor3 t = apply_ops3(Rx, id, id, ay) - apply_ops3(id, id, Lx, ay);
    // sum_j (id (x) [R(u_j) L(x) - L(x) R(u_j)]) s (x) v_j, and
    // sum_i u_i (x) ([R(x) L(v_i) - L(v_i) R(x)] (x) id) s, with r = sum e_a (x) r(a,.)
    for (std::size_t q = 0; q < n; ++q) {
      const Matrix P = R[q] * Lx - Lx * R[q];
      const Matrix Q = Rx * L[q] - L[q] * Rx;
      const Tensor2 ps = apply_ops2(id, P, s);
      const Tensor2 qs = apply_ops2(Q, id, s);
      for (std::size_t a1 = 0; a1 < n; ++a1)
        for (std::size_t b = 0; b < n; ++b)
          for (std::size_t m = 0; m < n; ++m) {
            t(a1, b, m).add_product(r(q, m), ps(a1, b));
            t(a1, b, m).add_product(r(a1, q), qs(b, m));
          }
    }
    out.cyclic.push_back(cyclic_sum(t));
  }

  auto o = [&](const Matrix& M, const Matrix& N) { return apply_ops2(M, N, s); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix &Lx = L[i], &Ly = L[j], &Rx = R[i], &Ry = R[j];
      const Vector xy = a.product(i, j), yx = a.product(j, i);
      const Matrix Lxy = a.left(xy), Rxy = a.right(xy), Lyx = a.left(yx), Ryx = a.right(yx);
      out.first.push_back(o(id, Lx * Ly) - o(id, Lxy) + o(Lxy, id) - o(Lx * Ly, id) + o(Lx, Ly) +
                          o(Ry, Rx) - o(id, Rx * Ly) - o(Ry * Lx, id));
      out.second.push_back(o(id, Ryx) - o(id, Rx * Ry) + o(id, Ly * Lx) - o(id, Lyx) -
                           o(id, Ry * Lx) + o(Ly, Lx) + o(Rx, Ry) + o(Lxy, id) - o(Rxy, id) -
                           o(Lx * Ly, id) + o(Ry * Rx, id) - o(Ly * Rx, id));
    }
  return out;
}

Triangular triangular_bialgebra(const Algebra& a, const Tensor2& r) {
  require_dim(a, r, "triangular_bialgebra");
  require_admissible(a, "triangular_bialgebra");
  require_skew(r, "triangular_bialgebra");
  auto rep = check_aybe(a, r);
  if (!rep.passed) {
    throw Error(ErrorKind::NotAYBESolution, "r does not solve the Yang-Baxter equation", rep);
  }
  return Triangular{a, delta_from_r(a, r)};
}

Matrix rsharp(const Tensor2& r) { return r.as_matrix().transpose(); }

Algebra dual_product_from_r(const Algebra& a, const Tensor2& r) {
  require_dim(a, r, "dual_product_from_r");
  const std::size_t n = a.dim();
  const Matrix m = rsharp(r);
  std::vector<Matrix> Lstar, Rstar;  // L*(r# e_a*), R*(r# e_a*)
  for (std::size_t i = 0; i < n; ++i) {
    const Vector x = m.column(i);
    Lstar.push_back(a.left(x).transpose());
    Rstar.push_back(a.right(x).transpose());
  }
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l + "*");
  Algebra out(std::move(labels));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t c = 0; c < n; ++c) out.sc(p, q, c) = Rstar[p](c, q) + Lstar[q](c, p);
  return out;
}

CheckReport aybe_rb_gap(const Algebra& a, const Tensor2& r) {
  require_dim(a, r, "aybe_rb_gap");
  require_skew(r, "aybe_rb_gap");
  require_admissible(a, "aybe_rb_gap");
  const std::size_t n = a.dim();
  const Matrix m = rsharp(r);
  const Algebra circ = dual_algebra(delta_from_r(a, r));
  const Tensor3 ay = aybe_residual(a, r);
  ResidualArray res({n, n, n}, 3);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Vector lhs = multiply(a, m.column(p), m.column(q)) - m * circ.product(p, q);
      for (std::size_t c = 0; c < n; ++c) res.block({p, q, c})[0] = lhs[c] - ay(p, q, c);
    }
  return CheckReport::from_residual("AYBE/RB gap", res);
}

CheckReport check_relative_rb(const RelativeRBData& data) {
  const Algebra& a = data.A;
  const Representation& rho = data.rho;
  const std::size_t n = a.dim(), d = rho.vdim;
  if (!(rho.algebra == a)) {
    throw Error(ErrorKind::MismatchedReference, "representation is not over this algebra");
  }
  if (data.T.rows() != n || data.T.cols() != d) throw_dimension_mismatch("check_relative_rb");
  ResidualArray res({d, d, n}, 2);
  std::vector<Matrix> lT, rT;  // l(T v_u), r(T v_u)
  for (std::size_t u = 0; u < d; ++u) {
    lT.push_back(rho.l_of(data.T.column(u)));
    rT.push_back(rho.r_of(data.T.column(u)));
  }
  for (std::size_t u = 0; u < d; ++u)
    for (std::size_t v = 0; v < d; ++v) {
      const Vector lhs = multiply(a, data.T.column(u), data.T.column(v));
      const Vector rhs = data.T * (lT[u].column(v) + rT[v].column(u));
      res.set_block({u, v}, (lhs - rhs).coords());
    }
  return CheckReport::from_residual("RelativeRB", res);
}

CheckReport check_rb_operator_form(const Algebra& a, const Tensor2& r) {
  require_dim(a, r, "check_rb_operator_form");
  require_skew(r, "check_rb_operator_form");
  require_admissible(a, "check_rb_operator_form");
  const std::size_t n = a.dim();
  const Matrix m = rsharp(r);
  ResidualArray res({n, n, n}, 2);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Vector xp = m.column(p), xq = m.column(q);
      // R*(x_p) e_q* + L*(x_q) e_p*
      const Vector arg = a.right(xp).row(q) + a.left(xq).row(p);
      res.set_block({p, q}, (multiply(a, xp, xq) - m * arg).coords());
    }
  return CheckReport::from_residual("RBOperatorForm", res);
}

CheckReport check_connes_cocycle(const Algebra& a, const BilinearForm& omega) {
  const std::size_t n = a.dim();
  if (omega.dim() != n) throw_dimension_mismatch("check_connes_cocycle");
  if (!omega.is_skew()) throw Error(ErrorKind::NotSkew, "Connes cocycle: form is not skew");
  // w(e_i e_j, e_k)
  std::vector<Rational> w(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational s;
        for (std::size_t p = 0; p < n; ++p) s.add_product(a.sc(i, j, p), omega.gram(p, k));
        w[(i * n + j) * n + k] = s;
      }
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return w[(i * n + j) * n + k]; };
  ResidualArray res({n, n, n}, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        res.block({i, j, k})[0] = at(i, j, k) + at(j, k, i) + at(k, i, j);
  return CheckReport::from_residual("ConnesCocycle", res);
}

BilinearForm omega_from_r(const Algebra& a, const Tensor2& r) {
  require_dim(a, r, "omega_from_r");
  const auto inv = inverse(rsharp(r));
  if (!inv) throw Error(ErrorKind::NotInvertible, "r# is not invertible");
  // w(e_i, e_j) = ((r#)^-1 e_i)_j
  return BilinearForm(inv->transpose());
}

RBLift rb_to_ybe(const Algebra& a, const Matrix& t) {
  const std::size_t n = a.dim();
  if (t.rows() != n || t.cols() != n) throw_dimension_mismatch("rb_to_ybe");
  require_admissible(a, "rb_to_ybe");
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l + "*");
  auto dbl = standard_double(a, Algebra(std::move(labels)));
  Tensor2 lifted(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) lifted(k, n + i) = t(k, i);
  return RBLift{std::move(dbl.algebra), skew_part(lifted)};
}

Matrix rb_tilde(const Matrix& t) {
  const std::size_t n = t.rows();
  if (t.cols() != n) throw_dimension_mismatch("rb_tilde");
  Matrix out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      out(i, k) = -t(i, k);      // x -> -T(x)
      out(n + i, n + k) = t(k, i);  // a* -> T*(a*)
    }
  return out;
}

}  // namespace a3kit
