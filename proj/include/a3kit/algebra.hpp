#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "a3kit/core.hpp"
#include "a3kit/report.hpp"

namespace a3kit {

// Finite-dimensional algebra given by structure constants:
//   e_i . e_j = sum_k sc(i, j, k) e_k.
class Algebra {
 public:
  Algebra() = default;
  // Zero product on `dim` basis vectors labelled e1..en.
  explicit Algebra(std::size_t dim);
  Algebra(std::vector<std::string> labels);
  Algebra(std::vector<std::string> labels, std::vector<Rational> sc);

  static Algebra zero(std::size_t dim) { return Algebra(dim); }
  static std::vector<std::string> default_labels(std::size_t dim, std::string_view prefix = "e");

  std::size_t dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::span<const Rational> structure_constants() const { return sc_; }

  const Rational& sc(std::size_t i, std::size_t j, std::size_t k) const {
    return sc_[(i * n_ + j) * n_ + k];
  }
  Rational& sc(std::size_t i, std::size_t j, std::size_t k) { return sc_[(i * n_ + j) * n_ + k]; }
  // Sets e_i . e_j to v.
  void set_product(std::size_t i, std::size_t j, const Vector& v);
  Vector product(std::size_t i, std::size_t j) const;

  // Matrix of L(e_i): column j is e_i . e_j.
  Matrix left(std::size_t i) const;
  // Matrix of R(e_j): column i is e_i . e_j.
  Matrix right(std::size_t j) const;
  // L(x), R(x) for an arbitrary element, by linearity.
  Matrix left(const Vector& x) const;
  Matrix right(const Vector& x) const;

  // x . y := y . x
  Algebra opposite() const;
  // Same product written in the basis f_j = sum_k P(k, j) e_k. P must be invertible.
  Algebra change_basis(const Matrix& p) const;
  Algebra with_labels(std::vector<std::string> labels) const;

  bool is_commutative() const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Rational> sc_;
};

enum class LawKind {
  A3,
  Associative,
  AdmissiblePoisson,
  Admissible,
  LeftSymmetric,
  RightSymmetric,
  LieAdmissible,
};

inline constexpr std::array<LawKind, 7> kAllLaws = {
    LawKind::A3,           LawKind::Associative,   LawKind::AdmissiblePoisson,
    LawKind::Admissible,   LawKind::LeftSymmetric, LawKind::RightSymmetric,
    LawKind::LieAdmissible};

std::string_view law_name(LawKind law);
// Accepts the names from law_name and short CLI spellings ("a3", "assoc", ...).
std::optional<LawKind> parse_law(std::string_view text);

Vector multiply(const Algebra& a, const Vector& x, const Vector& y);

// Residual of `law` on every basis triple; shape {n, n, n | n}.
ResidualArray law_residual(const Algebra& a, LawKind law);
CheckReport check_law(const Algebra& a, LawKind law);

// [x, y] = x.y - y.x as an algebra.
Algebra commutator_algebra(const Algebra& a);
// Jacobi identity of an anticommutative bracket stored as an algebra.
CheckReport check_jacobi(const Algebra& bracket);

// phi : A1 -> A2 given as an A2.dim x A1.dim matrix.
CheckReport check_homomorphism(const Matrix& phi, const Algebra& a1, const Algebra& a2);
CheckReport check_subalgebra(const Algebra& a, std::span<const Vector> span);

}  // namespace a3kit
