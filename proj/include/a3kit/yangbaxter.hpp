#pragma once

#include <vector>

#include "a3kit/algebra.hpp"
#include "a3kit/bialgebra.hpp"
#include "a3kit/core.hpp"
#include "a3kit/double_construction.hpp"
#include "a3kit/report.hpp"
#include "a3kit/representation.hpp"

namespace a3kit {

// Coefficient form of AY(r), free of any choice of decomposition
// r = sum u_i (x) v_i:
//   AY(a,b,m) = sum r(a,p) r(b,q) sc(p,q,m) - sum r(a,t) r(s,m) sc(s,t,b)
//             + sum r(s,b) r(t,m) sc(s,t,a).
Tensor3 aybe_residual(const Algebra& a, const Tensor2& r);
// AY(r) = 0, with the first nonzero coefficient as witness.
CheckReport check_aybe(const Algebra& a, const Tensor2& r);

// Delta_r(x) = (id (x) L(x) - R(x) (x) id) r.
Comultiplication delta_from_r(const Algebra& a, const Tensor2& r);

// Residuals that decide whether Delta_r is a coalgebra (`cyclic`, one Tensor3
// per basis element) and whether it is compatible with the product (`first`,
// `second`, one Tensor2 per basis pair, index i * n + j).
struct CocycleResiduals {
  std::vector<Tensor3> cyclic;
  std::vector<Tensor2> first;
  std::vector<Tensor2> second;

  bool cyclic_zero() const;
  bool compatibility_zero() const;
};
// Throws AdmissibilityRequired.
CocycleResiduals cocycle_conditions_residual(const Algebra& a, const Tensor2& r);

struct Triangular {
  Algebra algebra;
  Comultiplication delta;
};
// Throws NotSkew, NotAYBESolution (with the AY witness) or AdmissibilityRequired.
Triangular triangular_bialgebra(const Algebra& a, const Tensor2& r);

// Matrix of r# : A* -> A, r#(e_a*) = sum_b r(a,b) e_b. This is r transposed.
Matrix rsharp(const Tensor2& r);

// a* o b* = R*(r# a*) b* + L*(r# b*) a*, on A* with labels e_i*.
Algebra dual_product_from_r(const Algebra& a, const Tensor2& r);

// <r#(a*) r#(b*) - r#(a* o b*), c*> = <a* (x) b* (x) c*, AY(r)> on all dual
// basis triples, with o dual to Delta_r. Throws NotSkew, AdmissibilityRequired.
CheckReport aybe_rb_gap(const Algebra& a, const Tensor2& r);

struct RelativeRBData {
  Algebra A;
  Representation rho;
  Matrix T;  // A.dim x rho.vdim
};
// T(u) T(v) = T(l(Tu) v + r(Tv) u) on all basis pairs of V.
CheckReport check_relative_rb(const RelativeRBData& data);

// r# as a relative RB operator for the coadjoint representation.
// Throws NotSkew, AdmissibilityRequired.
CheckReport check_rb_operator_form(const Algebra& a, const Tensor2& r);

// w(xy, z) + w(yz, x) + w(zx, y) = 0. Throws NotSkew.
CheckReport check_connes_cocycle(const Algebra& a, const BilinearForm& omega);

// w(x, y) = <(r#)^-1 x, y>; the gram matrix is the inverse of r's coefficient
// array. Throws NotInvertible.
BilinearForm omega_from_r(const Algebra& a, const Tensor2& r);

struct RBLift {
  Algebra double_algebra;  // A (+) A* with zero product on A*
  Tensor2 r;               // T - tau(T), T = sum_i T(e_i) (x) e_i*
};
// T is a map A -> A, against the adjoint representation.
// Throws AdmissibilityRequired.
RBLift rb_to_ybe(const Algebra& a, const Matrix& t);
// Matrix on A (+) A* of a* + x -> T*(a*) - T(x). Composed with the pairing
// identification it equals rsharp of the lifted r.
Matrix rb_tilde(const Matrix& t);

}  // namespace a3kit
