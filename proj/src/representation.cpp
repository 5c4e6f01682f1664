#include "a3kit/representation.hpp"

#include "a3kit/error.hpp"

namespace a3kit {

Representation::Representation(Algebra a, std::size_t d, std::vector<Matrix> lm,
                               std::vector<Matrix> rm)
    : algebra(std::move(a)), vdim(d), l(std::move(lm)), r(std::move(rm)) {
  if (l.size() != algebra.dim() || r.size() != algebra.dim()) {
    throw_dimension_mismatch("Representation: one (l, r) pair per basis element");
  }
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i].rows() != vdim || l[i].cols() != vdim || r[i].rows() != vdim ||
        r[i].cols() != vdim) {
      throw_dimension_mismatch("Representation: action matrices must be vdim x vdim");
    }
  }
}

Representation Representation::zero(const Algebra& a, std::size_t d) {
  return Representation(a, d, std::vector<Matrix>(a.dim(), Matrix(d, d)),
                        std::vector<Matrix>(a.dim(), Matrix(d, d)));
}

namespace {

Matrix combine(const std::vector<Matrix>& family, const Vector& x, std::size_t d) {
  if (x.dim() != family.size()) throw_dimension_mismatch("representation action");
  Matrix m(d, d);
  for (std::size_t i = 0; i < family.size(); ++i)
    if (!x[i].is_zero()) m += x[i] * family[i];
  return m;
}

void put(ResidualArray& res, std::size_t i, std::size_t j, const Matrix& m) {
  res.set_block({i, j}, m.entries());
}

}  // namespace

Matrix Representation::l_of(const Vector& x) const { return combine(l, x, vdim); }
Matrix Representation::r_of(const Vector& x) const { return combine(r, x, vdim); }

CheckReport check_representation(const Representation& rho) {
  const std::size_t n = rho.algebra.dim(), d = rho.vdim;
  ResidualArray res({n, n, d, d}, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector xy = rho.algebra.product(i, j);
      const Matrix m = rho.l_of(xy) - rho.r_of(xy) + rho.r[i] * rho.l[j] - rho.l[i] * rho.l[j] +
                       rho.r[j] * rho.r[i] - rho.l[j] * rho.r[i];
      put(res, i, j, m);
    }
  return CheckReport::from_residual("Representation", res);
}

CheckReport check_associative_representation(const Representation& rho) {
  const std::size_t n = rho.algebra.dim(), d = rho.vdim;
  ResidualArray left({n, n, d, d}, 2), right({n, n, d, d}, 2), mixed({n, n, d, d}, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector xy = rho.algebra.product(i, j);
      put(left, i, j, rho.l_of(xy) - rho.l[i] * rho.l[j]);
      put(right, i, j, rho.r_of(xy) - rho.r[j] * rho.r[i]);
      put(mixed, i, j, rho.l[i] * rho.r[j] - rho.r[j] * rho.l[i]);
    }
  return CheckReport::all_of("AssociativeRepresentation",
                             {CheckReport::from_residual("l(xy) = l(x)l(y)", left),
                              CheckReport::from_residual("r(xy) = r(y)r(x)", right),
                              CheckReport::from_residual("l(x)r(y) = r(y)l(x)", mixed)});
}

CheckReport check_admissible_representation(const Representation& rho) {
  const std::size_t n = rho.algebra.dim(), d = rho.vdim;
  ResidualArray res({n, n, d, d}, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      put(res, i, j,
          rho.r[j] * rho.l[i] - rho.l[i] * rho.r[j] + rho.r[i] * rho.l[j] -
              rho.l[j] * rho.r[i]);
    }
  return CheckReport::from_residual("AdmissibleRepresentation", res);
}

Representation dual_representation(const Representation& rho) {
  std::vector<Matrix> l, r;
  for (std::size_t i = 0; i < rho.l.size(); ++i) {
    l.push_back(rho.r[i].transpose());
    r.push_back(rho.l[i].transpose());
  }
  return Representation(rho.algebra, rho.vdim, std::move(l), std::move(r));
}

Representation adjoint_representation(const Algebra& a) {
  std::vector<Matrix> l, r;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    l.push_back(a.left(i));
    r.push_back(a.right(i));
  }
  return Representation(a, a.dim(), std::move(l), std::move(r));
}

Representation coadjoint_representation(const Algebra& a) {
  auto rep = check_law(a, LawKind::Admissible);
  if (!rep.passed) {
    throw Error(ErrorKind::AdmissibilityRequired,
                "coadjoint representation needs an admissible algebra", rep);
  }
  return dual_representation(adjoint_representation(a));
}

CheckReport check_equivalence(const Representation& rho, const Representation& rho2,
                              const Matrix& phi) {
  if (!(rho.algebra == rho2.algebra)) {
    throw Error(ErrorKind::MismatchedReference, "representations of different algebras");
  }
  const std::size_t n = rho.algebra.dim(), d = rho.vdim;
  if (rho2.vdim != d || phi.rows() != d || phi.cols() != d) {
    throw_dimension_mismatch("check_equivalence");
  }
  if (determinant(phi).is_zero()) {
    throw Error(ErrorKind::NotInvertible, "intertwiner is singular");
  }
  ResidualArray left({n, d, d}, 1), right({n, d, d}, 1);
  for (std::size_t i = 0; i < n; ++i) {
    left.set_block({i}, (phi * rho.l[i] - rho2.l[i] * phi).entries());
    right.set_block({i}, (phi * rho.r[i] - rho2.r[i] * phi).entries());
  }
  return CheckReport::all_of("Equivalence",
                             {CheckReport::from_residual("phi l = l' phi", left),
                              CheckReport::from_residual("phi r = r' phi", right)});
}

Algebra semidirect_product(const Algebra& a, const Representation& rho) {
  if (!(rho.algebra == a)) {
    throw Error(ErrorKind::MismatchedReference, "representation is not over this algebra");
  }
  const std::size_t n = a.dim(), d = rho.vdim;
  auto labels = a.labels();
  for (const auto& v : Algebra::default_labels(d, "v")) labels.push_back(v);
  Algebra out(std::move(labels));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.sc(i, j, k) = a.sc(i, j, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t u = 0; u < d; ++u)
      for (std::size_t w = 0; w < d; ++w) {
        out.sc(i, n + u, n + w) = rho.l[i](w, u);  // e_i * v_u = l(e_i) v_u
        out.sc(n + u, i, n + w) = rho.r[i](w, u);  // v_u * e_i = r(e_i) v_u
      }
  return out;
}

}  // namespace a3kit
