#include "a3kit/double_construction.hpp"

#include <set>

#include "a3kit/error.hpp"

namespace a3kit {

namespace {

void check_family(const std::vector<Matrix>& fam, std::size_t count, std::size_t size,
                  std::string_view what) {
  if (fam.size() != count) throw_dimension_mismatch(what);
  for (const auto& m : fam)
    if (m.rows() != size || m.cols() != size) throw_dimension_mismatch(what);
}

Matrix combine(const std::vector<Matrix>& fam, const Vector& v, std::size_t size) {
  Matrix m(size, size);
  for (std::size_t k = 0; k < fam.size(); ++k)
    if (!v[k].is_zero()) m += v[k] * fam[k];
  return m;
}

}  // namespace

void MatchedPairData::validate() const {
  const std::size_t n = A.dim(), m = B.dim();
  check_family(lA, n, m, "matched pair: lA");
  check_family(rA, n, m, "matched pair: rA");
  check_family(lB, m, n, "matched pair: lB");
  check_family(rB, m, n, "matched pair: rB");
}

BilinearForm::BilinearForm(Matrix g) : gram(std::move(g)) {
  if (!gram.is_square()) throw_dimension_mismatch("BilinearForm");
}

Rational BilinearForm::operator()(const Vector& x, const Vector& y) const {
  if (x.dim() != dim() || y.dim() != dim()) throw_dimension_mismatch("BilinearForm");
  Rational s;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) s.add_product(x[i] * gram(i, j), y[j]);
  }
  return s;
}

Algebra matched_pair_product(const MatchedPairData& mp) {
  mp.validate();
  const std::size_t n = mp.A.dim(), m = mp.B.dim();
  auto labels = mp.A.labels();
  std::set<std::string> taken(labels.begin(), labels.end());
  for (auto l : mp.B.labels()) {
    while (taken.count(l)) l += "'";  // clashing B labels get primed
    taken.insert(l);
    labels.push_back(std::move(l));
  }
  Algebra out(std::move(labels));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.sc(i, j, k) = mp.A.sc(i, j, k);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c) out.sc(n + a, n + b, n + c) = mp.B.sc(a, b, c);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      // e_i f_a = rB(f_a) e_i + lA(e_i) f_a
      for (std::size_t k = 0; k < n; ++k) out.sc(i, n + a, k) = mp.rB[a](k, i);
      for (std::size_t c = 0; c < m; ++c) out.sc(i, n + a, n + c) = mp.lA[i](c, a);
      // f_a e_i = lB(f_a) e_i + rA(e_i) f_a
      for (std::size_t k = 0; k < n; ++k) out.sc(n + a, i, k) = mp.lB[a](k, i);
      for (std::size_t c = 0; c < m; ++c) out.sc(n + a, i, n + c) = mp.rA[i](c, a);
    }
  return out;
}

namespace {

// (rB - lB)(a)(x y) minus the right-hand side, for x, y in A and a in B.
// The B-side identity is the same computation with the roles swapped, so one
// routine serves both.
ResidualArray compatibility(const Algebra& A, const Algebra& B, const std::vector<Matrix>& lA,
                            const std::vector<Matrix>& rA, const std::vector<Matrix>& lB,
                            const std::vector<Matrix>& rB) {
  const std::size_t n = A.dim(), m = B.dim();
  std::vector<Matrix> diffB;  // (rB - lB)(f_a) on A
  for (std::size_t a = 0; a < m; ++a) diffB.push_back(rB[a] - lB[a]);
  ResidualArray res({n, n, m, n}, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector x = Vector::basis(n, i), y = Vector::basis(n, j);
      const Vector xy = A.product(i, j);
      for (std::size_t a = 0; a < m; ++a) {
        const Vector fa = Vector::basis(m, a);
        const Vector rby = rB[a].column(j);
        const Vector lbx = lB[a].column(i);
        Vector v = diffB[a] * xy;
        v -= multiply(A, x, rby);
        v += multiply(A, rby, x);
        v -= multiply(A, y, lbx);
        v += multiply(A, lbx, y);
        v -= combine(diffB, lA[j] * fa, n) * x;
        v -= combine(diffB, rA[i] * fa, n) * y;
        res.set_block({i, j, a}, v.coords());
      }
    }
  return res;
}

}  // namespace

CheckReport check_matched_pair(const MatchedPairData& mp) {
  mp.validate();
  const std::size_t n = mp.A.dim(), m = mp.B.dim();
  const Representation on_b(mp.A, m, mp.lA, mp.rA);
  const Representation on_a(mp.B, n, mp.lB, mp.rB);
  // The B-side identity is the A-side one with (A, lA, rA) and (B, lB, rB)
  // exchanged; its residual is indexed (a, b, x) there and re-indexed here
  // as (x, a, b).
  const ResidualArray ab = compatibility(mp.B, mp.A, mp.lB, mp.rB, mp.lA, mp.rA);
  ResidualArray ba({n, m, m, m}, 3);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t i = 0; i < n; ++i) ba.set_block({i, a, b}, ab.block({a, b, i}));
  return CheckReport::all_of(
      "MatchedPair",
      {check_law(mp.A, LawKind::A3), check_law(mp.B, LawKind::A3),
       [&] { auto r = check_representation(on_b); r.law_name = "(lA,rA,B)"; return r; }(),
       [&] { auto r = check_representation(on_a); r.law_name = "(lB,rB,A)"; return r; }(),
       CheckReport::from_residual("A-compatibility",
                                  compatibility(mp.A, mp.B, mp.lA, mp.rA, mp.lB, mp.rB)),
       CheckReport::from_residual("B-compatibility", ba)});
}

MatchedPairData coadjoint_matched_pair(const Algebra& a, const Algebra& astar) {
  if (a.dim() != astar.dim()) throw_dimension_mismatch("coadjoint_matched_pair");
  MatchedPairData mp{a, astar, {}, {}, {}, {}};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    mp.lA.push_back(a.right(i).transpose());
    mp.rA.push_back(a.left(i).transpose());
    mp.lB.push_back(astar.right(i).transpose());
    mp.rB.push_back(astar.left(i).transpose());
  }
  return mp;
}

CheckReport check_quadratic(const Algebra& a, const BilinearForm& b) {
  const std::size_t n = a.dim();
  if (b.dim() != n) throw_dimension_mismatch("check_quadratic");
  const Rational det = determinant(b.gram);
  ResidualArray inv({n, n, n}, 3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational s;
        for (std::size_t p = 0; p < n; ++p) {
          s.add_product(a.sc(i, j, p), b.gram(p, k));
          s.sub_product(a.sc(j, k, p), b.gram(i, p));
        }
        inv.block({i, j, k})[0] = s;
      }
  return CheckReport::all_of(
      "Quadratic",
      {CheckReport::condition("symmetric", b.is_symmetric(), "B(x,y) = B(y,x)"),
       CheckReport::condition("nondegenerate", !det.is_zero(), "det != 0", {det}),
       CheckReport::from_residual("invariant", inv)});
}

Matrix bflat(const BilinearForm& b) { return b.gram.transpose(); }

std::vector<Tensor2> invariance_residual(const Algebra& a, const Tensor2& r) {
  const std::size_t n = a.dim();
  if (r.dim() != n) throw_dimension_mismatch("invariance_residual");
  const Matrix id = Matrix::identity(n);
  std::vector<Tensor2> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(apply_ops2(id, a.left(i), r) - apply_ops2(a.right(i), id, r));
  }
  return out;
}

bool is_invariant(const Algebra& a, const Tensor2& r) {
  for (const auto& t : invariance_residual(a, r))
    if (!t.is_zero()) return false;
  return true;
}

Tensor2 form_to_tensor(const BilinearForm& b) {
  const auto inv = inverse(b.gram);
  if (!inv) throw Error(ErrorKind::NotInvertible, "bilinear form is degenerate");
  return Tensor2::from_matrix(*inv);
}

BilinearForm standard_pairing(std::size_t n) {
  Matrix g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, n + i) = 1;
    g(n + i, i) = 1;
  }
  return BilinearForm(std::move(g));
}

Double standard_double(const Algebra& a, const Algebra& astar) {
  if (a.dim() != astar.dim()) throw_dimension_mismatch("standard_double");
  for (const Algebra* x : {&a, &astar}) {
    auto rep = check_law(*x, LawKind::Admissible);
    if (!rep.passed) {
      throw Error(ErrorKind::AdmissibilityRequired,
                  x == &a ? "standard double: A is not admissible"
                          : "standard double: A* is not admissible",
                  rep);
    }
  }
  std::vector<std::string> dual_labels;
  for (const auto& l : a.labels()) dual_labels.push_back(l + "*");
  auto mp = coadjoint_matched_pair(a, astar.with_labels(std::move(dual_labels)));
  return Double{matched_pair_product(mp), standard_pairing(a.dim())};
}

std::vector<Vector> first_block_span(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Vector::basis(2 * n, i));
  return out;
}

std::vector<Vector> second_block_span(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(Vector::basis(2 * n, n + i));
  return out;
}

namespace {

CheckReport isotropy(const BilinearForm& b, std::span<const Vector> span, std::string name) {
  const std::size_t k = span.size();
  ResidualArray res({k, k}, 2);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) res.block({i, j})[0] = b(span[i], span[j]);
  return CheckReport::from_residual(std::move(name), res);
}

}  // namespace

CheckReport check_manin_triple(const Algebra& d, const BilinearForm& bd,
                               std::span<const Vector> span_a, std::span<const Vector> span_a2) {
  const std::size_t n = d.dim();
  if (bd.dim() != n) throw_dimension_mismatch("check_manin_triple");
  std::vector<Vector> all(span_a.begin(), span_a.end());
  all.insert(all.end(), span_a2.begin(), span_a2.end());
  for (const auto& v : all)
    if (v.dim() != n) throw_dimension_mismatch("check_manin_triple");
  if (all.size() != n || rank(Matrix::from_rows(n, all)) != n) {
    throw Error(ErrorKind::SpansNotComplementary,
                "the two spans are not bases of complementary subspaces");
  }
  auto sub1 = check_subalgebra(d, span_a);
  sub1.law_name = "A subalgebra";
  auto sub2 = check_subalgebra(d, span_a2);
  sub2.law_name = "A' subalgebra";
  return CheckReport::all_of("ManinTriple",
                             {check_law(d, LawKind::A3), check_quadratic(d, bd), sub1, sub2,
                              isotropy(bd, span_a, "A isotropic"),
                              isotropy(bd, span_a2, "A' isotropic")});
}

}  // namespace a3kit
