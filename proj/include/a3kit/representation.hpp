#pragma once

#include <vector>

#include "a3kit/algebra.hpp"
#include "a3kit/core.hpp"
#include "a3kit/report.hpp"

namespace a3kit {

// (l, r, V): one pair of vdim x vdim matrices per basis element of the algebra.
struct Representation {
  Algebra algebra;
  std::size_t vdim = 0;
  std::vector<Matrix> l;
  std::vector<Matrix> r;

  Representation() = default;
  Representation(Algebra a, std::size_t vdim, std::vector<Matrix> l, std::vector<Matrix> r);

  static Representation zero(const Algebra& a, std::size_t vdim);

  // l(x), r(x) for an arbitrary element.
  Matrix l_of(const Vector& x) const;
  Matrix r_of(const Vector& x) const;

  friend bool operator==(const Representation&, const Representation&) = default;
};

CheckReport check_representation(const Representation& rho);
CheckReport check_associative_representation(const Representation& rho);
CheckReport check_admissible_representation(const Representation& rho);

// (r*, l*, V*): new left action is r transposed, new right action is l transposed.
Representation dual_representation(const Representation& rho);
// (L, R, A).
Representation adjoint_representation(const Algebra& a);
// (R*, L*, A*). Throws AdmissibilityRequired unless `a` is admissible.
Representation coadjoint_representation(const Algebra& a);

// phi : V -> V' must be square and invertible.
CheckReport check_equivalence(const Representation& rho, const Representation& rho2,
                              const Matrix& phi);

// A (+) V with (x+u)(y+v) = xy + l(x)v + r(y)u. V basis labelled v1..vd.
Algebra semidirect_product(const Algebra& a, const Representation& rho);

}  // namespace a3kit
