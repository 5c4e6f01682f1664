#include <doctest.h>

#include "a3kit/bialgebra.hpp"
#include "a3kit/double_construction.hpp"
#include "a3kit/error.hpp"
#include "a3kit/representation.hpp"
#include "fixtures.hpp"

using namespace a3kit;
using fx::vec;

namespace {

MatchedPairData zero_actions(const Algebra& a, const Algebra& b) {
  const std::size_t n = a.dim(), m = b.dim();
  return MatchedPairData{a,
                         b,
                         std::vector<Matrix>(n, Matrix(m, m)),
                         std::vector<Matrix>(n, Matrix(m, m)),
                         std::vector<Matrix>(m, Matrix(n, n)),
                         std::vector<Matrix>(m, Matrix(n, n))};
}

Algebra golden_delta_dual() { return dual_algebra(fx::golden_delta()); }

}  // namespace

TEST_CASE("matched pair product with zero actions is the direct sum") {
  const Algebra a = fx::golden(), b = fx::idempotent_line();
  const Algebra s = matched_pair_product(zero_actions(a, b));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t k = 0; k < 4; ++k) {
        Rational expect;
        if (i < 2 && j < 2 && k < 2) expect = a.sc(i, j, k);
        if (i >= 2 && j >= 2 && k >= 2) expect = b.sc(i - 2, j - 2, k - 2);
        CHECK(s.sc(i, j, k) == expect);
      }
  CHECK(check_matched_pair(zero_actions(a, b)).passed);
}

TEST_CASE("matched pair with trivial partner is the semidirect product") {
  const Algebra a = fx::golden();
  const auto co = coadjoint_representation(a);
  MatchedPairData mp = zero_actions(a, Algebra(2));
  mp.lA = co.l;
  mp.rA = co.r;
  const Algebra viaPair = matched_pair_product(mp);
  const Algebra viaSemi = semidirect_product(a, co);
  CHECK(std::equal(viaPair.structure_constants().begin(), viaPair.structure_constants().end(),
                   viaSemi.structure_constants().begin()));
}

TEST_CASE("coadjoint pair from the bialgebra example") {
  const auto mp = coadjoint_matched_pair(fx::golden(), golden_delta_dual());
  const Algebra d = matched_pair_product(mp);
  CHECK(check_law(d, LawKind::A3).passed);
  CHECK(check_matched_pair(mp).passed);
  // perturbing lA breaks it
  fx::Rng rng(31);
  int broken = 0;
  for (int t = 0; t < 8; ++t) {
    auto bad = mp;
    bad.lA[rng.integer(0, 1)](rng.integer(0, 1), rng.integer(0, 1)) += Rational(1);
    const auto rep = check_matched_pair(bad);
    CHECK(rep.passed == check_law(matched_pair_product(bad), LawKind::A3).passed);
    if (!rep.passed) {
      ++broken;
      CHECK(rep.witness.has_value());
    }
  }
  CHECK(broken > 0);
}

TEST_CASE("matched pair verdict equals A3 of the product on random candidates") {
  fx::Rng rng(32);
  int pass = 0, fail = 0;
  for (int t = 0; t < 60; ++t) {
    const Algebra a = t % 2 ? fx::golden() : fx::left_unit_line();
    const Algebra b = t % 3 ? golden_delta_dual() : fx::idempotent_line();
    MatchedPairData mp;
    if (t % 4 == 0) {
      mp = zero_actions(a, b);
      mp.lA[0](rng.integer(0, 1), rng.integer(0, 1)) = rng.small(-1, 1);
    } else if (check_law(a, LawKind::Admissible).passed && check_law(b, LawKind::Admissible).passed) {
      mp = coadjoint_matched_pair(a, b);
      if (t % 5 == 0) mp.rB[0](rng.integer(0, 1), rng.integer(0, 1)) += Rational(1);
    } else {
      mp = zero_actions(a, b);
      for (auto* fam : {&mp.lA, &mp.rA, &mp.lB, &mp.rB})
        for (auto& m : *fam) m = rng.matrix(2, 2, 0, 1);
    }
    const bool v = check_matched_pair(mp).passed;
    (v ? pass : fail)++;
    CHECK(v == check_law(matched_pair_product(mp), LawKind::A3).passed);
  }
  CHECK(pass > 0);
  CHECK(fail > 0);
}

TEST_CASE("quadratic forms") {
  CHECK(check_quadratic(Algebra::zero(2), BilinearForm(Matrix::identity(2))).passed);
  // the example with the identity gram: check all 8 triples by hand
  const Algebra a = fx::golden();
  const BilinearForm id(Matrix::identity(2));
  bool all = true;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        const Rational lhs = id(a.product(i, j), Vector::basis(2, k));
        const Rational rhs = id(Vector::basis(2, i), a.product(j, k));
        all = all && lhs == rhs;
      }
  CHECK(check_quadratic(a, id).passed == all);
  CHECK_FALSE(all);
  CHECK_FALSE(check_quadratic(Algebra::zero(2), BilinearForm(Matrix{{1, 1}, {1, 1}})).passed);
  CHECK_FALSE(check_quadratic(Algebra::zero(2), BilinearForm(Matrix{{0, 1}, {-1, 0}})).passed);
}

TEST_CASE("B-flat and B-tilde") {
  CHECK(bflat(BilinearForm(Matrix::identity(2))) == Matrix::identity(2));
  const Matrix g{{0, 1}, {1, 0}};
  CHECK(bflat(BilinearForm(g)) == g);
  CHECK(form_to_tensor(BilinearForm(Matrix::identity(2))) == Tensor2::from_matrix(Matrix::identity(2)));
  CHECK(form_to_tensor(BilinearForm(Matrix{{2, 0}, {0, 1}})) ==
        Tensor2{{Rational(1, 2), 0}, {0, 1}});
  CHECK_THROWS_AS(form_to_tensor(BilinearForm(Matrix{{1, 1}, {1, 1}})), Error);
  // pairing definition: <B-tilde, a* (x) b*> = <B-flat^-1 a*, b*>
  const Matrix h{{1, 2}, {3, 5}};
  const Tensor2 bt = form_to_tensor(BilinearForm(h));
  const Matrix binv = *inverse(bflat(BilinearForm(h)));
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) CHECK(bt(a, b) == binv(b, a));
}

TEST_CASE("invariance residual") {
  const Algebra a = fx::golden();
  for (const auto& t : invariance_residual(a, Tensor2(2))) CHECK(t.is_zero());
  for (const auto& t : invariance_residual(Algebra::zero(2), Tensor2{{1, 2}, {3, 4}})) CHECK(t.is_zero());
  const Tensor2 e11{{1, 0}, {0, 0}};
  const auto res = invariance_residual(a, e11);
  // naive: h(e_i)(e1 (x) e1) = e1 (x) e_i e1 - e1 e_i (x) e1
  for (std::size_t i = 0; i < 2; ++i) {
    const Tensor2 naive = Tensor2::pure(Vector::basis(2, 0), a.product(i, 0)) -
                          Tensor2::pure(a.product(0, i), Vector::basis(2, 0));
    CHECK(res[i] == naive);
  }
  CHECK_FALSE(is_invariant(a, e11));
}

TEST_CASE("quadratic iff B-tilde symmetric and invariant") {
  fx::Rng rng(33);
  const auto dbl = standard_double(fx::golden(), golden_delta_dual());
  const Tensor2 bt = form_to_tensor(dbl.form);
  CHECK(bt.is_symmetric());
  CHECK(is_invariant(dbl.algebra, bt));
  int yes = 0, no = 0;
  std::vector<Algebra> pool{fx::golden(), fx::idempotent_line(), dbl.algebra,
                            standard_double(fx::idempotent_line(), Algebra(2)).algebra};
  for (const auto& a : pool) {
    REQUIRE(check_law(a, LawKind::Admissible).passed);
    const std::size_t n = a.dim();
    for (int t = 0; t < 25; ++t) {
      Matrix g = t == 0 && n == 4 ? dbl.form.gram : rng.matrix(n, n, -1, 1);
      if (t % 3 == 0) g = g + g.transpose();
      if (determinant(g).is_zero()) continue;
      const BilinearForm b(g);
      const Tensor2 bt2 = form_to_tensor(b);
      const bool q = check_quadratic(a, b).passed;
      (q ? yes : no)++;
      CHECK(q == (bt2.is_symmetric() && is_invariant(a, bt2)));
    }
  }
  CHECK(yes > 0);
  CHECK(no > 0);
}

TEST_CASE("standard double") {
  const Algebra a = fx::golden();
  const auto semi = standard_double(a, Algebra(2));
  const Algebra viaRep = semidirect_product(a, coadjoint_representation(a));
  CHECK(std::equal(semi.algebra.structure_constants().begin(),
                   semi.algebra.structure_constants().end(),
                   viaRep.structure_constants().begin()));
  CHECK(semi.form.gram == Matrix{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(semi.algebra.labels() == std::vector<std::string>{"e1", "e2", "e1*", "e2*"});

  const auto full = standard_double(a, golden_delta_dual());
  CHECK(check_law(full.algebra, LawKind::A3).passed);
  CHECK(check_quadratic(full.algebra, full.form).passed);
  // e1* e1* = e1* from the dual product
  CHECK(full.algebra.product(2, 2) == vec({0, 0, 1, 0}));
  CHECK_THROWS_AS(standard_double(a, Algebra(3)), Error);
}

TEST_CASE("Manin triples") {
  const auto d = standard_double(fx::golden(), golden_delta_dual());
  const auto s1 = first_block_span(2), s2 = second_block_span(2);
  CHECK(check_manin_triple(d.algebra, d.form, s1, s2).passed);
  CHECK(check_manin_triple(d.algebra, d.form, s2, s1).passed);
  // each sub-check run on its own
  CHECK(check_quadratic(d.algebra, d.form).passed);
  CHECK(check_subalgebra(d.algebra, s1).passed);
  CHECK(check_subalgebra(d.algebra, s2).passed);

  const std::vector<Vector> e1{Vector::basis(2, 0)}, e2{Vector::basis(2, 1)};
  const auto rep = check_manin_triple(Algebra::zero(2), BilinearForm(Matrix::identity(2)), e1, e2);
  CHECK_FALSE(rep.passed);
  CHECK(rep.witness->condition.find("isotropic") != std::string::npos);

  try {
    (void)check_manin_triple(d.algebra, d.form, s1, s1);
    FAIL("expected SpansNotComplementary");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SpansNotComplementary);
  }
}
