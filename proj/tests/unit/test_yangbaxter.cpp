#include <doctest.h>

#include <utility>

#include "a3kit/error.hpp"
#include "a3kit/yangbaxter.hpp"
#include "fixtures.hpp"

using namespace a3kit;
using fx::vec;

namespace {

using Terms = std::vector<std::pair<Vector, Vector>>;

// AY from an explicit decomposition r = sum u_i (x) v_i:
//   u_i (x) u_j (x) v_i v_j - u_i (x) u_j v_i (x) v_j + u_i u_j (x) v_i (x) v_j
Tensor3 ay_from_terms(const Algebra& a, const Terms& r) {
  Tensor3 out(a.dim());
  for (const auto& [ui, vi] : r)
    for (const auto& [uj, vj] : r) {
      out += Tensor3::pure(ui, uj, multiply(a, vi, vj));
      out -= Tensor3::pure(ui, multiply(a, uj, vi), vj);
      out += Tensor3::pure(multiply(a, ui, uj), vi, vj);
    }
  return out;
}

Terms terms_of(const Tensor2& r) {
  Terms t;
  const std::size_t n = r.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!r(a, b).is_zero()) t.emplace_back(r(a, b) * Vector::basis(n, a), Vector::basis(n, b));
  return t;
}

Tensor2 wedge(std::size_t n, std::size_t i, std::size_t j) {
  Tensor2 r(n);
  r(i, j) = 1;
  r(j, i) = -1;
  return r;
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  const std::size_t n = a.dim(), m = b.dim();
  Algebra s(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s.sc(i, j, k) = a.sc(i, j, k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) s.sc(n + i, n + j, n + k) = b.sc(i, j, k);
  return s;
}

// Admissible algebras of small dimension.
std::vector<Algebra> pool(fx::Rng& rng) {
  std::vector<Algebra> out{fx::golden(), fx::idempotent_line(), fx::left_unit_line(),
                           fx::upper_triangular(), Algebra(3)};
  out.push_back(fx::left_unit_line().change_basis(rng.invertible(2)));
  out.push_back(fx::upper_triangular().change_basis(rng.invertible(3)));
  out.push_back(direct_sum(fx::left_unit_line(), fx::idempotent_line()));
  for (const auto& a : out) REQUIRE(check_law(a, LawKind::Admissible).passed);
  return out;
}

bool ay_zero(const Algebra& a, const Tensor2& r) { return aybe_residual(a, r).is_zero(); }

}  // namespace

TEST_CASE("AYBE residual on the two-dimensional example") {
  const Algebra a = fx::golden();
  const Tensor2 r = wedge(2, 0, 1);
  const Tensor3 ay = aybe_residual(a, r);
  const Terms explicit_terms{{vec({1, 0}), vec({0, 1})}, {vec({0, -1}), vec({1, 0})}};
  CHECK(ay == ay_from_terms(a, explicit_terms));
  const long want[2][2][2] = {{{0, -1}, {-1, -3}}, {{-1, -3}, {-3, 6}}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) CHECK(ay(i, j, k) == Rational(want[i][j][k]));
  const auto rep = check_aybe(a, r);
  CHECK_FALSE(rep.passed);
  REQUIRE(rep.witness);
  CHECK(rep.witness->indices == std::vector<std::size_t>{0, 0, 1});
  CHECK(rep.witness->residual[0] == Rational(-1));

  CHECK(aybe_residual(a, Tensor2(2)).is_zero());
  fx::Rng rng(51);
  for (int t = 0; t < 20; ++t) CHECK(aybe_residual(Algebra(3), rng.tensor2(3)).is_zero());
  CHECK_THROWS_AS(aybe_residual(a, Tensor2(3)), Error);
}

TEST_CASE("coefficient form matches any decomposition") {
  fx::Rng rng(52);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    const Algebra a = rng.algebra(n);
    // a redundant decomposition with random vectors, summed into r
    Terms terms;
    Tensor2 r(n);
    for (int k = 0; k < 3; ++k) {
      terms.emplace_back(rng.vector(n), rng.vector(n));
      r += Tensor2::pure(terms.back().first, terms.back().second);
    }
    CHECK(aybe_residual(a, r) == ay_from_terms(a, terms));
    CHECK(aybe_residual(a, r) == ay_from_terms(a, terms_of(r)));
    // quadratic in r
    CHECK(aybe_residual(a, Rational(2) * r) == Rational(4) * aybe_residual(a, r));
  }
}

TEST_CASE("Delta_r") {
  const Algebra a = fx::golden();
  const Tensor2 r = wedge(2, 0, 1);
  const auto d = delta_from_r(a, r);
  CHECK(d.of_basis(1) == Rational(-4) * Tensor2::pure(vec({0, 1}), vec({0, 1})));
  CHECK(delta_from_r(a, Tensor2(2)).is_zero());

  fx::Rng rng(53);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    const Algebra b = rng.algebra(n);
    const Tensor2 s = rng.tensor2(n);
    const auto ds = delta_from_r(b, s);
    for (std::size_t i = 0; i < n; ++i) {
      const Vector x = Vector::basis(n, i);
      Tensor2 want(n);
      for (const auto& [u, v] : terms_of(s))
        want += Tensor2::pure(u, multiply(b, x, v)) - Tensor2::pure(multiply(b, u, x), v);
      CHECK(ds.of_basis(i) == want);
    }
  }
}

TEST_CASE("cocycle residuals agree with the coalgebra and bialgebra checks") {
  fx::Rng rng(54);
  auto algebras = pool(rng);
  int nonzero = 0;
  for (const auto& a : algebras) {
    const std::size_t n = a.dim();
    for (int t = 0; t < 6; ++t) {
      const Tensor2 r = t == 0 ? Tensor2(n) : rng.tensor2(n, -1, 1);
      const auto res = cocycle_conditions_residual(a, r);
      const auto d = delta_from_r(a, r);
      CHECK(res.cyclic_zero() == check_coalgebra(d).passed);
      REQUIRE(res.first.size() == n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          CHECK(res.first[i * n + j] == bialgebra_residual_first(a, d, i, j));
          CHECK(res.second[i * n + j] == bialgebra_residual_second(a, d, i, j));
        }
      if (!res.compatibility_zero()) ++nonzero;
      if (t == 0) CHECK((res.cyclic_zero() && res.compatibility_zero()));
    }
  }
  CHECK(nonzero > 0);
  // symmetric r on the example
  Tensor2 sym(2);
  sym(0, 1) = sym(1, 0) = 1;
  const auto res = cocycle_conditions_residual(fx::golden(), sym);
  CHECK(res.cyclic_zero() == check_coalgebra(delta_from_r(fx::golden(), sym)).passed);
  Algebra bad;
  for (;;) {
    bad = rng.algebra(2, 0.7);
    if (!check_law(bad, LawKind::Admissible).passed) break;
  }
  CHECK_THROWS_AS(cocycle_conditions_residual(bad, Tensor2(2)), Error);
}

TEST_CASE("triangular bialgebras") {
  const Algebra lul = fx::left_unit_line();
  const Tensor2 r = wedge(2, 0, 1);
  REQUIRE(ay_zero(lul, r));
  const auto tri = triangular_bialgebra(lul, r);
  CHECK(check_bialgebra(tri.algebra, tri.delta).passed);
  CHECK(triangular_bialgebra(fx::golden(), Tensor2(2)).delta.is_zero());

  try {
    (void)triangular_bialgebra(fx::golden(), r);
    FAIL("expected NotAYBESolution");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAYBESolution);
    REQUIRE(e.report());
    CHECK(e.report()->witness->indices == std::vector<std::size_t>{0, 0, 1});
  }
  Tensor2 nonskew(2);
  nonskew(0, 1) = 1;
  try {
    (void)triangular_bialgebra(lul, nonskew);
    FAIL("expected NotSkew");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSkew);
  }
}

TEST_CASE("r sharp and the induced product on the dual") {
  Tensor2 r(2);
  r(0, 1) = 1;
  CHECK(rsharp(r) * vec({1, 0}) == vec({0, 1}));
  CHECK(rsharp(Tensor2(2)) == Matrix(2, 2));
  fx::Rng rng(55);
  const Tensor2 s = rng.skew(3);
  CHECK(rsharp(s).transpose() == Rational(-1) * rsharp(s));

  for (const auto& a : pool(rng)) {
    const std::size_t n = a.dim();
    for (int t = 0; t < 5; ++t) {
      const Tensor2 k = rng.skew(n);
      const Algebra circ = dual_product_from_r(a, k);
      CHECK(circ == dual_algebra(delta_from_r(a, k), circ.labels()));
      const Algebra twice = dual_product_from_r(a, Rational(2) * k);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(twice.product(i, j) == Rational(2) * circ.product(i, j));
    }
  }
  CHECK(dual_product_from_r(fx::golden(), wedge(2, 0, 1)) ==
        dual_algebra(delta_from_r(fx::golden(), wedge(2, 0, 1))));
  CHECK(dual_product_from_r(fx::golden(), Tensor2(2)) == Algebra(std::vector<std::string>{"e1*", "e2*"}));
}

TEST_CASE("RB gap identity and operator form") {
  fx::Rng rng(56);
  int solutions = 0, others = 0;
  for (const auto& a : pool(rng)) {
    const std::size_t n = a.dim();
    for (int t = 0; t < 12; ++t) {
      const Tensor2 r = t == 0 ? Tensor2(n) : rng.skew(n, -1, 1);
      CHECK(aybe_rb_gap(a, r).passed);
      const bool z = ay_zero(a, r);
      CHECK(check_rb_operator_form(a, r).passed == z);
      (z ? solutions : others)++;
      if (z) {
        CHECK(check_homomorphism(rsharp(r), dual_product_from_r(a, r), a).passed);
        CHECK(check_bialgebra(a, delta_from_r(a, r)).passed);
      }
    }
  }
  CHECK(solutions > 0);
  CHECK(others > 0);
  CHECK_THROWS_AS(aybe_rb_gap(fx::golden(), rng.tensor2(2, 1, 2)), Error);
}

TEST_CASE("Connes cocycles") {
  const Algebra a = fx::golden();
  BilinearForm w{Matrix(2, 2)};
  w.gram(0, 1) = 1;
  w.gram(1, 0) = -1;
  const auto rep = check_connes_cocycle(a, w);
  CHECK_FALSE(rep.passed);
  const std::size_t at[] = {0, 0, 1};
  REQUIRE(rep.failure_at(at));
  CHECK(rep.failure_at(at)->residual[0] == Rational(-3));
  // direct triple loop
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t y = 0; y < 2; ++y)
      for (std::size_t z = 0; z < 2; ++z) {
        const Vector ex = Vector::basis(2, x), ey = Vector::basis(2, y), ez = Vector::basis(2, z);
        const Rational sum = w(multiply(a, ex, ey), ez) + w(multiply(a, ey, ez), ex) +
                             w(multiply(a, ez, ex), ey);
        const std::size_t idx[] = {x, y, z};
        const Witness* f = rep.failure_at(idx);
        CHECK((f ? f->residual[0] : Rational()) == sum);
      }
  CHECK(check_connes_cocycle(a, BilinearForm{Matrix(2, 2)}).passed);
  CHECK(check_connes_cocycle(Algebra(2), w).passed);
  BilinearForm sym{Matrix::identity(2)};
  CHECK_THROWS_AS(check_connes_cocycle(a, sym), Error);
}

TEST_CASE("omega from an invertible r") {
  const BilinearForm w = omega_from_r(fx::golden(), wedge(2, 0, 1));
  Matrix want(2, 2);
  want(0, 1) = -1;
  want(1, 0) = 1;
  CHECK(w.gram == want);
  // w(r# a*, y) = <a*, y>
  fx::Rng rng(57);
  for (int t = 0; t < 10; ++t) {
    const Tensor2 r = rng.skew(4);
    if (determinant(rsharp(r)).is_zero()) continue;
    const BilinearForm o = omega_from_r(Algebra(4), r);
    for (std::size_t p = 0; p < 4; ++p)
      for (std::size_t q = 0; q < 4; ++q)
        CHECK(o(rsharp(r).column(p), Vector::basis(4, q)) == (p == q ? Rational(1) : Rational()));
  }
  CHECK_THROWS_AS(omega_from_r(fx::golden(), Tensor2(2)), Error);
}

TEST_CASE("invertible skew solutions give Connes cocycles") {
  const Algebra lul = fx::left_unit_line();
  const Algebra sum = direct_sum(lul, lul);
  std::vector<std::pair<Algebra, Tensor2>> sols{{lul, wedge(2, 0, 1)},
                                                {lul, Rational(-3) * wedge(2, 0, 1)},
                                                {sum, wedge(4, 0, 1) + wedge(4, 2, 3)},
                                                {sum, wedge(4, 0, 1) - Rational(2) * wedge(4, 2, 3)},
                                                {Algebra(4), wedge(4, 0, 2) + wedge(4, 1, 3)}};
  for (const auto& [a, r] : sols) {
    REQUIRE(ay_zero(a, r));
    REQUIRE_FALSE(determinant(rsharp(r)).is_zero());
    CHECK(check_connes_cocycle(a, omega_from_r(a, r)).passed);
  }
  fx::Rng rng(58);
  int failures = 0;
  for (const auto& a : pool(rng)) {
    for (int t = 0; t < 20; ++t) {
      const Tensor2 r = rng.skew(a.dim());
      if (determinant(rsharp(r)).is_zero()) continue;
      const bool z = ay_zero(a, r);
      CHECK(check_connes_cocycle(a, omega_from_r(a, r)).passed == z);
      if (!z) ++failures;
    }
  }
  CHECK(failures >= 20);
}

TEST_CASE("relative Rota-Baxter operators") {
  const Algebra a = fx::idempotent_line();
  Matrix t(2, 2);
  t(1, 0) = 1;  // T(e1) = e2
  CHECK(check_relative_rb({a, adjoint_representation(a), t}).passed);
  const auto id = check_relative_rb({a, adjoint_representation(a), Matrix::identity(2)});
  CHECK_FALSE(id.passed);
  REQUIRE(id.witness);
  CHECK(id.witness->indices == std::vector<std::size_t>{0, 0});
  CHECK(id.witness->residual_vector() == vec({-1, 0}));
  CHECK(check_relative_rb({a, adjoint_representation(a), Matrix(2, 2)}).passed);

  // element-level evaluation on random data
  fx::Rng rng(59);
  for (int k = 0; k < 20; ++k) {
    const Algebra b = fx::upper_triangular();
    const Representation rho = adjoint_representation(b);
    const Matrix m = rng.matrix(3, 3, -1, 1);
    const auto rep = check_relative_rb({b, rho, m});
    bool ok = true;
    for (std::size_t u = 0; u < 3; ++u)
      for (std::size_t v = 0; v < 3; ++v) {
        const Vector tu = m.column(u), tv = m.column(v);
        const Vector lhs = multiply(b, tu, tv);
        const Vector rhs = m * (multiply(b, tu, Vector::basis(3, v)) + multiply(b, Vector::basis(3, u), tv));
        ok = ok && lhs == rhs;
      }
    CHECK(rep.passed == ok);
  }
  CHECK_THROWS_AS(check_relative_rb({a, adjoint_representation(a), Matrix(2, 3)}), Error);
}

TEST_CASE("RB operators lift to skew solutions on the double") {
  const Algebra a = fx::idempotent_line();
  Matrix t(2, 2);
  t(1, 0) = 1;
  const auto lift = rb_to_ybe(a, t);
  CHECK(lift.double_algebra.dim() == 4);
  CHECK(lift.double_algebra.labels() == std::vector<std::string>{"e1", "e2", "e1*", "e2*"});
  CHECK(lift.r == Rational(-1) * tau_swap(lift.r));
  CHECK(ay_zero(lift.double_algebra, lift.r));
  // pinned sign: r# composed with the pairing identification is T tilde
  CHECK(rsharp(lift.r) * bflat(standard_pairing(2)) == rb_tilde(t));
  const auto tri = triangular_bialgebra(lift.double_algebra, lift.r);
  CHECK(check_bialgebra(tri.algebra, tri.delta).passed);

  CHECK(rb_to_ybe(a, Matrix(2, 2)).r.is_zero());
  CHECK_FALSE(ay_zero(rb_to_ybe(a, Matrix::identity(2)).double_algebra,
                      rb_to_ybe(a, Matrix::identity(2)).r));

  // both directions, single-entry perturbations included
  fx::Rng rng(60);
  int yes = 0, no = 0;
  for (const auto& b : pool(rng)) {
    const std::size_t n = b.dim();
    for (int k = 0; k < 15; ++k) {
      Matrix m = k == 0 ? t : rng.matrix(n, n, -1, 1);
      if (k == 0 && n != 2) continue;
      const bool rb = check_relative_rb({b, adjoint_representation(b), m}).passed;
      const auto l = rb_to_ybe(b, m);
      CHECK(rb == ay_zero(l.double_algebra, l.r));
      (rb ? yes : no)++;
    }
  }
  // moving T(e1) within span(e2) or adding T(e2) = e2 keeps T an RB operator,
  // since e2 annihilates everything; the other two entries break it
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Matrix m = t;
      m(i, j) += 1;
      const auto l = rb_to_ybe(a, m);
      const bool rb = check_relative_rb({a, adjoint_representation(a), m}).passed;
      CHECK(rb == (i == 1));
      CHECK(ay_zero(l.double_algebra, l.r) == rb);
    }
  CHECK(yes > 0);
  CHECK(no > 0);
}
