#pragma once

#include <span>
#include <vector>

#include "a3kit/algebra.hpp"
#include "a3kit/core.hpp"
#include "a3kit/report.hpp"
#include "a3kit/representation.hpp"

namespace a3kit {

// Two algebras acting on each other. lA, rA are indexed by A's basis and act
// on B; lB, rB are indexed by B's basis and act on A.
struct MatchedPairData {
  Algebra A;
  Algebra B;
  std::vector<Matrix> lA, rA;
  std::vector<Matrix> lB, rB;

  void validate() const;
};

struct BilinearForm {
  Matrix gram;

  BilinearForm() = default;
  explicit BilinearForm(Matrix g);

  std::size_t dim() const { return gram.rows(); }
  Rational operator()(const Vector& x, const Vector& y) const;
  bool is_symmetric() const { return gram.is_symmetric(); }
  bool is_skew() const { return gram.is_skew(); }
  bool is_nondegenerate() const { return !determinant(gram).is_zero(); }

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;
};

// A (+) B with (x+a)(y+b) = xy + lB(a)y + rB(b)x + a.b + lA(x)b + rA(y)a.
Algebra matched_pair_product(const MatchedPairData& mp);
// Both factors A3, both representation conditions, and the two compatibility
// identities.
CheckReport check_matched_pair(const MatchedPairData& mp);

// Pair (A, A*) with the coadjoint actions of each on the other:
// lA = R*, rA = L* from A, and lB = R*, rB = L* from A*.
MatchedPairData coadjoint_matched_pair(const Algebra& a, const Algebra& astar);

CheckReport check_quadratic(const Algebra& a, const BilinearForm& b);
// Matrix of x -> B(x, .) into the dual basis.
Matrix bflat(const BilinearForm& b);
// h(e_i) r = (id (x) L(e_i) - R(e_i) (x) id) r for every basis element.
std::vector<Tensor2> invariance_residual(const Algebra& a, const Tensor2& r);
bool is_invariant(const Algebra& a, const Tensor2& r);
// Coefficients of B~, i.e. the inverse gram matrix. Throws NotInvertible.
Tensor2 form_to_tensor(const BilinearForm& b);

// Block anti-diagonal identity on A (+) A*.
BilinearForm standard_pairing(std::size_t n);

struct Double {
  Algebra algebra;
  BilinearForm form;
};
// The algebra on A (+) A* built from both coadjoint actions, with the standard
// pairing. Basis: A's labels, then "<label>*".
Double standard_double(const Algebra& a, const Algebra& astar);

// The first n and the last n coordinate vectors of a 2n-dimensional space.
std::vector<Vector> first_block_span(std::size_t n);
std::vector<Vector> second_block_span(std::size_t n);

CheckReport check_manin_triple(const Algebra& d, const BilinearForm& bd,
                               std::span<const Vector> span_a, std::span<const Vector> span_a2);

}  // namespace a3kit
