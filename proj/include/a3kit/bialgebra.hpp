#pragma once

#include <span>
#include <vector>

#include "a3kit/algebra.hpp"
#include "a3kit/core.hpp"
#include "a3kit/double_construction.hpp"
#include "a3kit/report.hpp"

namespace a3kit {

// Delta(e_i) = sum_{j,k} dd(i, j, k) e_j (x) e_k.
class Comultiplication {
 public:
  Comultiplication() = default;
  explicit Comultiplication(std::size_t dim) : n_(dim), dd_(dim * dim * dim) {}
  Comultiplication(std::size_t dim, std::vector<Rational> dd);

  std::size_t dim() const { return n_; }
  std::span<const Rational> coefficients() const { return dd_; }
  const Rational& dd(std::size_t i, std::size_t j, std::size_t k) const {
    return dd_[(i * n_ + j) * n_ + k];
  }
  Rational& dd(std::size_t i, std::size_t j, std::size_t k) { return dd_[(i * n_ + j) * n_ + k]; }

  Tensor2 of_basis(std::size_t i) const;
  Tensor2 operator()(const Vector& x) const;
  // The comultiplication whose dual product is `a`: dd(i, j, k) = sc(j, k, i).
  static Comultiplication from_dual_algebra(const Algebra& a);

  bool is_zero() const;
  friend bool operator==(const Comultiplication&, const Comultiplication&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> dd_;
};

// Product on A* paired against Delta: sc*(j, k, i) = dd(i, j, k). Labels are
// the given ones (default e1*..en*).
Algebra dual_algebra(const Comultiplication& d, std::vector<std::string> labels = {});

// (Delta (x) id) Delta (e_i) and (id (x) Delta) Delta (e_i).
Tensor3 left_iterate(const Comultiplication& d, std::size_t i);
Tensor3 right_iterate(const Comultiplication& d, std::size_t i);

CheckReport check_coalgebra(const Comultiplication& d);
CheckReport check_coassociative(const Comultiplication& d);
// Only the admissibility identity; combine with check_coalgebra for the full
// definition.
CheckReport check_admissible_coalgebra(const Comultiplication& d);

// Residual tensors of the two compatibility identities on a basis pair.
Tensor2 bialgebra_residual_first(const Algebra& a, const Comultiplication& d, std::size_t i,
                                 std::size_t j);
Tensor2 bialgebra_residual_second(const Algebra& a, const Comultiplication& d, std::size_t i,
                                  std::size_t j);
CheckReport check_bialgebra(const Algebra& a, const Comultiplication& d);

struct ManinData {
  Algebra algebra;
  BilinearForm form;
  std::vector<Vector> span_a;
  std::vector<Vector> span_astar;
};
// Standard double of (A, dual_algebra(D)) with its two canonical spans.
// Throws PreconditionFailed when the pair is not a bialgebra.
ManinData manin_from_bialgebra(const Algebra& a, const Comultiplication& d);

}  // namespace a3kit
