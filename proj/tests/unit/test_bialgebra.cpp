#include <doctest.h>

#include "a3kit/bialgebra.hpp"
#include "a3kit/double_construction.hpp"
#include "a3kit/error.hpp"
#include "fixtures.hpp"

using namespace a3kit;
using fx::vec;

namespace {

// Element-level evaluation of the compatibility identities with every
// operator applied to pure tensors term by term.
struct Naive {
  const Algebra& a;
  const Comultiplication& d;
  std::size_t n;

  Vector e(std::size_t i) const { return Vector::basis(n, i); }
  Vector mul(const Vector& x, const Vector& y) const { return multiply(a, x, y); }

  // sum c_jk f(e_j, e_k) over Delta(x)
  template <class F>
  Tensor2 over(const Tensor2& t, F&& f) const {
    Tensor2 out(n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!t(j, k).is_zero()) out += t(j, k) * f(e(j), e(k));
    return out;
  }
  Tensor2 first(std::size_t i, std::size_t j) const {
    const Vector x = e(i), y = e(j);
    const Tensor2 dx = d(x), dy = d(y);
    const Tensor2 inner = d(mul(x, y)) -
                          over(dx, [&](auto u, auto v) { return Tensor2::pure(mul(u, y), v); }) -
                          over(dy, [&](auto u, auto v) { return Tensor2::pure(u, mul(x, v)); });
    const Tensor2 sw = over(inner, [](auto u, auto v) { return Tensor2::pure(v, u); });
    // (id (x) L(y) - R(y) (x) id) tau Delta(x)
    const Tensor2 t2 = over(dx, [&](auto u, auto v) {
      return Tensor2::pure(v, mul(y, u)) - Tensor2::pure(mul(v, y), u);
    });
    // (L(x) (x) id - id (x) R(x)) Delta(y)
    const Tensor2 t3 = over(dy, [&](auto u, auto v) {
      return Tensor2::pure(mul(x, u), v) - Tensor2::pure(u, mul(v, x));
    });
    return sw - inner + t2 + t3;
  }
  Tensor2 second(std::size_t i, std::size_t j) const {
    const Vector x = e(i), y = e(j);
    const Tensor2 dx = d(x), dy = d(y);
    Tensor2 out = d(mul(x, y) - mul(y, x));
    out += over(dx, [&](auto u, auto v) {
      return Tensor2::pure(u, mul(y, v)) - Tensor2::pure(mul(u, y), v) +
             Tensor2::pure(mul(y, u), v) - Tensor2::pure(u, mul(v, y));
    });
    auto h = [&](auto u, auto v) {
      return Tensor2::pure(u, mul(x, v)) - Tensor2::pure(mul(u, x), v);
    };
    out -= over(dy, h);
    out += over(dy, [&](auto u, auto v) { return h(v, u); });
    return out;
  }
};

}  // namespace

TEST_CASE("dual algebra of a comultiplication") {
  const Algebra d = dual_algebra(fx::golden_delta());
  CHECK(d.labels() == std::vector<std::string>{"e1*", "e2*"});
  // pairing: <a* o b*, x> = <a* (x) b*, Delta(x)>
  const auto delta = fx::golden_delta();
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t x = 0; x < 2; ++x) CHECK(d.sc(a, b, x) == delta.of_basis(x)(a, b));
  CHECK(d.product(0, 0) == vec({1, 0}));
  CHECK(d.product(0, 1).is_zero());
  CHECK(d.product(1, 1).is_zero());
  CHECK(dual_algebra(Comultiplication(2)) == Algebra(std::vector<std::string>{"e1*", "e2*"}));
  fx::Rng rng(41);
  for (int t = 0; t < 10; ++t) {
    const auto dd = rng.comultiplication(3);
    CHECK(Comultiplication::from_dual_algebra(dual_algebra(dd)) == dd);
    Comultiplication scaled(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k) scaled.dd(i, j, k) = Rational(3) * dd.dd(i, j, k);
    const Algebra s = dual_algebra(scaled), u = dual_algebra(dd);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(s.product(i, j) == Rational(3) * u.product(i, j));
  }
}

TEST_CASE("coalgebra checks on the examples") {
  CHECK(check_coalgebra(fx::golden_delta()).passed);
  CHECK(check_coalgebra(Comultiplication(2)).passed);
  CHECK(check_coassociative(Comultiplication(2)).passed);
  // both iterates are e1 (x) e1 (x) e1 under the flat identification
  CHECK(left_iterate(fx::golden_delta(), 0) == right_iterate(fx::golden_delta(), 0));
  CHECK(left_iterate(fx::golden_delta(), 0) ==
        Tensor3::pure(Vector::basis(2, 0), Vector::basis(2, 0), Vector::basis(2, 0)));
  CHECK(check_coassociative(fx::golden_delta()).passed);
  CHECK(check_admissible_coalgebra(fx::golden_delta()).passed);
  CHECK(check_admissible_coalgebra(Comultiplication(2)).passed);
}

TEST_CASE("coalgebra verdicts match the dual algebra") {
  fx::Rng rng(42);
  int seen[2][2] = {};
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(1, 3));
    const auto d = rng.comultiplication(n, t % 3 == 0 ? 0.15 : 0.35);
    const Algebra dual = dual_algebra(d);
    const bool co = check_coalgebra(d).passed;
    CHECK(co == check_law(dual, LawKind::A3).passed);
    const bool ca = check_coassociative(d).passed;
    CHECK(ca == check_law(dual, LawKind::Associative).passed);
    if (ca) CHECK(co);
    const bool adm = check_admissible_coalgebra(d).passed;
    CHECK(adm == check_law(dual, LawKind::Admissible).passed);
    seen[co][ca]++;
  }
  CHECK(seen[1][1] > 0);
  CHECK(seen[0][0] > 0);
  CHECK(seen[1][0] + seen[0][0] > 0);
  // residual tensors agree too, through the pairing
  const auto d = rng.comultiplication(2, 0.6);
  const auto rep = check_coalgebra(d);
  const auto law = law_residual(dual_algebra(d), LawKind::A3);
  for (std::size_t x = 0; x < 2; ++x)
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b)
        for (std::size_t c = 0; c < 2; ++c) {
          const std::size_t idx[] = {x};
          const Witness* w = rep.failure_at(idx);
          const Rational co = w ? w->residual[(a * 2 + b) * 2 + c] : Rational();
          CHECK(co == law.block({a, b, c})[x]);
        }
}

TEST_CASE("bialgebra example") {
  const auto rep = check_bialgebra(fx::golden(), fx::golden_delta());
  CHECK(rep.passed);
  CHECK(check_bialgebra(fx::golden(), Comultiplication(2)).passed);
  CHECK(check_bialgebra(fx::upper_triangular(), Comultiplication(3)).passed);
  CHECK_THROWS_AS(check_bialgebra(fx::golden(), Comultiplication(3)), Error);
}

TEST_CASE("compatibility residuals against element-level evaluation") {
  Comultiplication d = fx::golden_delta();
  d.dd(1, 0, 1) = 1;  // still a coalgebra, no longer compatible
  const Algebra a = fx::golden();
  const Naive naive{a, d, 2};
  bool zero = true;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK(bialgebra_residual_first(a, d, i, j) == naive.first(i, j));
      CHECK(bialgebra_residual_second(a, d, i, j) == naive.second(i, j));
      zero = zero && naive.first(i, j).is_zero() && naive.second(i, j).is_zero();
    }
  CHECK(check_coalgebra(d).passed);
  CHECK_FALSE(zero);
  CHECK_FALSE(check_bialgebra(a, d).passed);

  fx::Rng rng(43);
  for (int t = 0; t < 20; ++t) {
    const Algebra b = t % 2 ? fx::upper_triangular().change_basis(rng.invertible(3)) : rng.algebra(3);
    const auto dd = rng.comultiplication(3);
    const Naive nv{b, dd, 3};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        CHECK(bialgebra_residual_first(b, dd, i, j) == nv.first(i, j));
        CHECK(bialgebra_residual_second(b, dd, i, j) == nv.second(i, j));
      }
  }
}

TEST_CASE("bialgebra to Manin triple") {
  const auto m = manin_from_bialgebra(fx::golden(), fx::golden_delta());
  CHECK(m.algebra.dim() == 4);
  CHECK(check_manin_triple(m.algebra, m.form, m.span_a, m.span_astar).passed);
  const auto z = manin_from_bialgebra(fx::golden(), Comultiplication(2));
  CHECK(check_manin_triple(z.algebra, z.form, z.span_a, z.span_astar).passed);

  auto bad = fx::golden_delta();
  bad.dd(1, 1, 0) = 1;
  REQUIRE_FALSE(check_bialgebra(fx::golden(), bad).passed);
  try {
    (void)manin_from_bialgebra(fx::golden(), bad);
    FAIL("expected PreconditionFailed");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PreconditionFailed);
    CHECK(e.report() != nullptr);
  }
}

TEST_CASE("bialgebra, matched pair and Manin verdicts coincide") {
  fx::Rng rng(44);
  int yes = 0, no = 0;
  const Algebra a = fx::golden();
  for (int t = 0; t < 40; ++t) {
    Comultiplication d = fx::golden_delta();
    if (t % 2) d.dd(rng.integer(0, 1), rng.integer(0, 1), rng.integer(0, 1)) += rng.small(-1, 1);
    const Algebra dual = dual_algebra(d);
    if (!check_law(dual, LawKind::Admissible).passed || !check_law(dual, LawKind::A3).passed) continue;
    const bool b = check_bialgebra(a, d).passed;
    const bool mp = check_matched_pair(coadjoint_matched_pair(a, dual)).passed;
    const auto dbl = standard_double(a, dual);
    const bool mt = check_manin_triple(dbl.algebra, dbl.form, first_block_span(2),
                                       second_block_span(2))
                        .passed;
    CHECK(b == mp);
    CHECK(mp == mt);
    (b ? yes : no)++;
  }
  CHECK(yes > 0);
  CHECK(no > 0);
}
