#include "a3kit/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "a3kit/error.hpp"

namespace a3kit {

std::vector<std::string> Algebra::default_labels(std::size_t dim, std::string_view prefix) {
  std::vector<std::string> out;
  out.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) out.push_back(std::string(prefix) + std::to_string(i + 1));
  return out;
}

Algebra::Algebra(std::size_t dim) : Algebra(default_labels(dim)) {}

Algebra::Algebra(std::vector<std::string> labels)
    : n_(labels.size()), labels_(std::move(labels)), sc_(n_ * n_ * n_) {
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) {
    throw Error(ErrorKind::Parse, "basis labels must be distinct");
  }
}

Algebra::Algebra(std::vector<std::string> labels, std::vector<Rational> sc)
    : Algebra(std::move(labels)) {
  if (sc.size() != sc_.size()) throw_dimension_mismatch("Algebra structure constants");
  sc_ = std::move(sc);
}

void Algebra::set_product(std::size_t i, std::size_t j, const Vector& v) {
  if (i >= n_ || j >= n_ || v.dim() != n_) throw_dimension_mismatch("Algebra::set_product");
  for (std::size_t k = 0; k < n_; ++k) sc(i, j, k) = v[k];
}

Vector Algebra::product(std::size_t i, std::size_t j) const {
  Vector v(n_);
  for (std::size_t k = 0; k < n_; ++k) v[k] = sc(i, j, k);
  return v;
}

Matrix Algebra::left(std::size_t i) const {
  Matrix m(n_, n_);
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t k = 0; k < n_; ++k) m(k, j) = sc(i, j, k);
  return m;
}

Matrix Algebra::right(std::size_t j) const {
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) m(k, i) = sc(i, j, k);
  return m;
}

Matrix Algebra::left(const Vector& x) const {
  if (x.dim() != n_) throw_dimension_mismatch("Algebra::left");
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) m(k, j).add_product(x[i], sc(i, j, k));
  }
  return m;
}

Matrix Algebra::right(const Vector& x) const {
  if (x.dim() != n_) throw_dimension_mismatch("Algebra::right");
  Matrix m(n_, n_);
  for (std::size_t j = 0; j < n_; ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) m(k, i).add_product(x[j], sc(i, j, k));
  }
  return m;
}

Algebra Algebra::opposite() const {
  Algebra out(labels_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) out.sc(i, j, k) = sc(j, i, k);
  return out;
}

Algebra Algebra::change_basis(const Matrix& p) const {
  if (p.rows() != n_ || p.cols() != n_) throw_dimension_mismatch("Algebra::change_basis");
  const auto pinv = inverse(p);
  if (!pinv) throw Error(ErrorKind::NotInvertible, "change of basis matrix is singular");
  Algebra out(labels_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      const Vector prod = multiply(*this, p.column(a), p.column(b));
      const Vector coords = *pinv * prod;
      out.set_product(a, b, coords);
    }
  return out;
}

Algebra Algebra::with_labels(std::vector<std::string> labels) const {
  if (labels.size() != n_) throw_dimension_mismatch("Algebra::with_labels");
  return Algebra(std::move(labels), sc_);
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k)
        if (sc(i, j, k) != sc(j, i, k)) return false;
  return true;
}

std::string_view law_name(LawKind law) {
  switch (law) {
    case LawKind::A3: return "A3";
    case LawKind::Associative: return "Associative";
    case LawKind::AdmissiblePoisson: return "AdmissiblePoisson";
    case LawKind::Admissible: return "Admissible";
    case LawKind::LeftSymmetric: return "LeftSymmetric";
    case LawKind::RightSymmetric: return "RightSymmetric";
    case LawKind::LieAdmissible: return "LieAdmissible";
  }
  return "?";
}

std::optional<LawKind> parse_law(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c == '-' || c == '_' || c == ' ') continue;
    s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (s == "a3" || s == "a3associative") return LawKind::A3;
  if (s == "associative" || s == "assoc") return LawKind::Associative;
  if (s == "admissiblepoisson" || s == "poisson") return LawKind::AdmissiblePoisson;
  if (s == "admissible") return LawKind::Admissible;
  if (s == "leftsymmetric" || s == "left") return LawKind::LeftSymmetric;
  if (s == "rightsymmetric" || s == "right") return LawKind::RightSymmetric;
  if (s == "lieadmissible" || s == "lie") return LawKind::LieAdmissible;
  return std::nullopt;
}

Vector multiply(const Algebra& a, const Vector& x, const Vector& y) {
  const std::size_t n = a.dim();
  if (x.dim() != n || y.dim() != n) throw_dimension_mismatch("multiply");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) out[k].add_product(xy, a.sc(i, j, k));
    }
  }
  return out;
}

namespace {

// Both bracketings of every basis triple:
//   lp(i,j,k,m) = ((e_i e_j) e_k)_m,  rp(i,j,k,m) = (e_i (e_j e_k))_m.
struct Cubes {
  std::size_t n;
  std::vector<Rational> lp, rp;

  explicit Cubes(const Algebra& a) : n(a.dim()), lp(n * n * n * n), rp(n * n * n * n) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t p = 0; p < n; ++p) {
          const Rational& c = a.sc(i, j, p);
          if (c.is_zero()) continue;
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t m = 0; m < n; ++m) {
              // (e_i e_j) e_k picks up c * sc(p,k,m); e_k (e_i e_j) feeds rp(k,i,j).
              lp[at(i, j, k, m)].add_product(c, a.sc(p, k, m));
              rp[at(k, i, j, m)].add_product(c, a.sc(k, p, m));
            }
        }
  }
  std::size_t at(std::size_t i, std::size_t j, std::size_t k, std::size_t m) const {
    return ((i * n + j) * n + k) * n + m;
  }
  const Rational& L(std::size_t i, std::size_t j, std::size_t k, std::size_t m) const {
    return lp[at(i, j, k, m)];
  }
  const Rational& R(std::size_t i, std::size_t j, std::size_t k, std::size_t m) const {
    return rp[at(i, j, k, m)];
  }
};

Rational law_entry(const Cubes& c, LawKind law, std::size_t x, std::size_t y, std::size_t z,
                   std::size_t m) {
  switch (law) {
    case LawKind::A3:
      return c.L(x, y, z, m) + c.L(y, z, x, m) + c.L(z, x, y, m) - c.R(x, y, z, m) -
             c.R(y, z, x, m) - c.R(z, x, y, m);
    case LawKind::Associative:
      return c.L(x, y, z, m) - c.R(x, y, z, m);
    case LawKind::AdmissiblePoisson:
      return Rational(3) * (c.L(x, y, z, m) - c.R(x, y, z, m)) - c.L(x, z, y, m) -
             c.L(y, z, x, m) + c.L(y, x, z, m) + c.L(z, x, y, m);
    case LawKind::Admissible:
      // (xz)y - x(zy) - y(zx) + (yz)x
      return c.L(x, z, y, m) - c.R(x, z, y, m) - c.R(y, z, x, m) + c.L(y, z, x, m);
    case LawKind::LeftSymmetric:
      return c.L(x, y, z, m) - c.R(x, y, z, m) - c.L(y, x, z, m) + c.R(y, x, z, m);
    case LawKind::RightSymmetric:
      return c.L(x, y, z, m) - c.R(x, y, z, m) - c.L(x, z, y, m) + c.R(x, z, y, m);
    case LawKind::LieAdmissible: {
      Rational s;
      const std::size_t t[3] = {x, y, z};
      for (int r = 0; r < 3; ++r) {
        const std::size_t u = t[r], v = t[(r + 1) % 3], w = t[(r + 2) % 3];
        // [[u,v],w] = (uv)w - (vu)w - w(uv) + w(vu)
        s += c.L(u, v, w, m) - c.L(v, u, w, m) - c.R(w, u, v, m) + c.R(w, v, u, m);
      }
      return s;
    }
  }
  return {};
}

}  // namespace

ResidualArray law_residual(const Algebra& a, LawKind law) {
  const std::size_t n = a.dim();
  const Cubes cubes(a);
  ResidualArray res({n, n, n, n}, 3);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto blk = res.block({x, y, z});
        for (std::size_t m = 0; m < n; ++m) blk[m] = law_entry(cubes, law, x, y, z, m);
      }
  return res;
}

CheckReport check_law(const Algebra& a, LawKind law) {
  return CheckReport::from_residual(std::string(law_name(law)), law_residual(a, law));
}

Algebra commutator_algebra(const Algebra& a) {
  const std::size_t n = a.dim();
  Algebra out(a.labels());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.sc(i, j, k) = a.sc(i, j, k) - a.sc(j, i, k);
  return out;
}

CheckReport check_jacobi(const Algebra& bracket) {
  const std::size_t n = bracket.dim();
  ResidualArray res({n, n, n, n}, 3);
  // [[x,y],z] + [[y,z],x] + [[z,x],y]
  auto nested = [&](std::size_t x, std::size_t y, std::size_t z, std::size_t m) {
    Rational s;
    for (std::size_t p = 0; p < n; ++p) s.add_product(bracket.sc(x, y, p), bracket.sc(p, z, m));
    return s;
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        auto blk = res.block({x, y, z});
        for (std::size_t m = 0; m < n; ++m)
          blk[m] = nested(x, y, z, m) + nested(y, z, x, m) + nested(z, x, y, m);
      }
  return CheckReport::from_residual("Jacobi", res);
}

CheckReport check_homomorphism(const Matrix& phi, const Algebra& a1, const Algebra& a2) {
  const std::size_t n1 = a1.dim(), n2 = a2.dim();
  if (phi.rows() != n2 || phi.cols() != n1) throw_dimension_mismatch("check_homomorphism");
  ResidualArray res({n1, n1, n2}, 2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n1; ++j) {
      const Vector lhs = phi * a1.product(i, j);
      const Vector rhs = multiply(a2, phi.column(i), phi.column(j));
      const Vector d = lhs - rhs;
      res.set_block({i, j}, d.coords());
    }
  return CheckReport::from_residual("Homomorphism", res);
}

CheckReport check_subalgebra(const Algebra& a, std::span<const Vector> span) {
  for (const auto& v : span)
    if (v.dim() != a.dim()) throw_dimension_mismatch("check_subalgebra");
  CheckReport rep = CheckReport::pass("Subalgebra");
  for (std::size_t i = 0; i < span.size(); ++i)
    for (std::size_t j = 0; j < span.size(); ++j) {
      const Vector p = multiply(a, span[i], span[j]);
      if (in_span(span, p)) continue;
      Witness w{"closed under product", {i, j}, {a.dim()},
                std::vector<Rational>(p.coords().begin(), p.coords().end())};
      if (!rep.witness) rep.witness = w;
      rep.failures.push_back(std::move(w));
    }
  rep.passed = rep.residual_norm_zero = rep.failures.empty();
  return rep;
}

}  // namespace a3kit
