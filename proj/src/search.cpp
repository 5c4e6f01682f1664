#include "a3kit/search.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <random>
#include <thread>

#include "a3kit/error.hpp"
#include "a3kit/yangbaxter.hpp"

namespace a3kit {

void GridSpec::normalize() {
  if (values.empty()) throw Error(ErrorKind::Parse, "grid: no values");
  if (max_solutions == 0) throw Error(ErrorKind::Parse, "grid: max_solutions must be positive");
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw Error(ErrorKind::Parse, "grid: duplicate values");
  }
  deterministic_order = true;
}

GridSpec GridSpec::parse(std::string_view text) {
  GridSpec g;
  g.values.clear();
  const auto dots = text.find("..");
  if (dots != std::string_view::npos) {
    auto num = [&](std::string_view s) {
      long v = 0;
      const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
        throw Error(ErrorKind::Parse, "grid: bad range bound '" + std::string(s) + "'");
      }
      return v;
    };
    const long lo = num(text.substr(0, dots)), hi = num(text.substr(dots + 2));
    if (lo > hi || hi - lo > 1000) throw Error(ErrorKind::Parse, "grid: bad range");
    for (long v = lo; v <= hi; ++v) g.values.emplace_back(v);
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const auto comma = text.find(',', start);
      const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
      g.values.push_back(Rational::parse(piece));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  g.normalize();
  return g;
}

std::size_t default_thread_count() {
  if (const char* env = std::getenv("A3KIT_THREADS")) {
    std::size_t v = 0;
    const std::string_view s(env);
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && p == s.data() + s.size() && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Enumerates grid^slots in lexicographic order (first slot most significant)
// and keeps the candidates that pass. Workers take contiguous ranges, so
// concatenating their lists in range order is already canonical.
template <class Cand, class Make, class Test>
std::vector<Cand> enumerate(std::size_t slots, const GridSpec& grid, Make make, Test test) {
  const std::size_t base = grid.values.size();
  std::size_t total = 1;
  for (std::size_t s = 0; s < slots; ++s) total *= base;
  const std::size_t workers =
      std::max<std::size_t>(1, std::min(grid.threads ? grid.threads : default_thread_count(), total));
  std::vector<std::vector<Cand>> found(workers);
  auto run = [&](std::size_t w) {
    const std::size_t lo = total * w / workers, hi = total * (w + 1) / workers;
    std::vector<Rational> entries(slots);
    for (std::size_t c = lo; c < hi && found[w].size() < grid.max_solutions; ++c) {
      std::size_t x = c;
      for (std::size_t s = slots; s-- > 0;) {
        entries[s] = grid.values[x % base];
        x /= base;
      }
      Cand cand = make(entries);
      if (test(cand)) found[w].push_back(std::move(cand));
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<Cand> out;
  for (auto& part : found)
    for (auto& c : part) {
      if (out.size() == grid.max_solutions) return out;
      out.push_back(std::move(c));
    }
  return out;
}

}  // namespace

std::vector<Matrix> solve_relative_rb(const Algebra& a, const Representation& rho, GridSpec grid) {
  grid.normalize();
  if (!(rho.algebra == a)) {
    throw Error(ErrorKind::MismatchedReference, "representation is not over this algebra");
  }
  const std::size_t n = a.dim(), d = rho.vdim;
  if (n * d > 6) {
    throw Error(ErrorKind::SearchSpaceTooLarge,
                "relative RB search: " + std::to_string(n * d) + " entries, at most 6 supported");
  }
  return enumerate<Matrix>(
      n * d, grid,
      [&](const std::vector<Rational>& e) {
        Matrix t(n, d);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < d; ++j) t(i, j) = e[i * d + j];
        return t;
      },
      [&](const Matrix& t) { return check_relative_rb({a, rho, t}).passed; });
}

std::vector<Tensor2> solve_aybe_skew(const Algebra& a, GridSpec grid) {
  grid.normalize();
  const std::size_t n = a.dim(), free = n * (n - (n ? 1 : 0)) / 2;
  if (free > 8) {
    throw Error(ErrorKind::SearchSpaceTooLarge,
                "skew AYBE search: " + std::to_string(free) + " free entries, at most 8 supported");
  }
  return enumerate<Tensor2>(
      free, grid,
      [&](const std::vector<Rational>& e) {
        Tensor2 r(n);
        std::size_t k = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j, ++k) {
            r(i, j) = e[k];
            r(j, i) = -e[k];
          }
        return r;
      },
      [&](const Tensor2& r) { return aybe_residual(a, r).is_zero(); });
}

namespace {

template <class T>
const T& need(const std::optional<T>& v, std::string_view what, std::string_view expr) {
  if (!v) {
    throw Error(ErrorKind::PreconditionFailed,
                std::string(expr) + ": missing input '" + std::string(what) + "'");
  }
  return *v;
}

}  // namespace

CheckReport optimized_report(std::string_view id, const BruteInputs& in) {
  if (id.starts_with("law:")) {
    if (auto l = parse_law(id.substr(4))) return check_law(need(in.algebra, "algebra", id), *l);
  }
  if (id == "jacobi") return check_jacobi(need(in.algebra, "algebra", id));
  if (id == "homomorphism") {
    return check_homomorphism(need(in.map, "map", id), need(in.algebra, "algebra", id),
                              need(in.algebra2, "algebra2", id));
  }
  if (id == "representation") return check_representation(need(in.rep, "rep", id));
  if (id == "associative_representation") return check_associative_representation(need(in.rep, "rep", id));
  if (id == "admissible_representation") return check_admissible_representation(need(in.rep, "rep", id));
  if (id == "equivalence")
    return check_equivalence(need(in.rep, "rep", id), need(in.rep2, "rep2", id), need(in.map, "map", id));
  if (id == "matched_pair") return check_matched_pair(need(in.matched, "matched", id));
  if (id == "quadratic") return check_quadratic(need(in.algebra, "algebra", id), need(in.form, "form", id));
  if (id == "coalgebra") return check_coalgebra(need(in.delta, "delta", id));
  if (id == "coassociative") return check_coassociative(need(in.delta, "delta", id));
  if (id == "admissible_coalgebra") return check_admissible_coalgebra(need(in.delta, "delta", id));
  if (id == "bialgebra") return check_bialgebra(need(in.algebra, "algebra", id), need(in.delta, "delta", id));
  if (id == "aybe") return check_aybe(need(in.algebra, "algebra", id), need(in.r, "r", id));
  if (id == "aybe_rb_gap") return aybe_rb_gap(need(in.algebra, "algebra", id), need(in.r, "r", id));
  if (id == "relative_rb")
    return check_relative_rb({need(in.algebra, "algebra", id), need(in.rep, "rep", id), need(in.map, "map", id)});
  if (id == "rb_operator_form") return check_rb_operator_form(need(in.algebra, "algebra", id), need(in.r, "r", id));
  if (id == "connes_cocycle")
    return check_connes_cocycle(need(in.algebra, "algebra", id), need(in.form, "form", id));
  throw Error(ErrorKind::UnknownExpression, "unknown expression '" + std::string(id) + "'");
}

bool reports_agree(const BruteResidual& brute, const CheckReport& report) {
  if (brute.is_zero() != report.passed) return false;
  // tuple-indexed failures, in part order; structural conditions carry no tuple
  std::vector<std::pair<std::vector<std::size_t>, std::vector<Rational>>> mine, theirs;
  for (const auto& [name, arr] : brute.parts)
    for (const auto& w : CheckReport::from_residual(name, arr).failures) mine.emplace_back(w.indices, w.residual);
  for (const auto& w : report.failures)
    if (!w.indices.empty()) theirs.emplace_back(w.indices, w.residual);
  return mine == theirs;
}

// ---------------------------------------------------------------- generators

namespace {

struct Gen {
  std::mt19937_64 g;
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }
  bool coin(double p) { return std::bernoulli_distribution(p)(g); }
  Rational small() { return Rational(integer(-2, 2)); }
  Matrix invertible(std::size_t n) {
    for (;;) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(integer(-1, 1));
      if (!determinant(m).is_zero()) return m;
    }
  }
  Rational nonzero() {
    Rational q;
    while (q.is_zero()) q = Rational(integer(-2, 2), integer(1, 2));
    return q;
  }
};

Algebra golden() {
  Algebra a(2);
  a.set_product(0, 0, Vector{Rational(1), Rational(2)});
  a.set_product(0, 1, Vector{Rational(1), Rational(2)});
  a.set_product(1, 0, Vector{Rational(1), Rational(2)});
  a.set_product(1, 1, Vector{Rational(0), Rational(1)});
  return a;
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

Algebra scaled(Algebra a, const Rational& s) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) a.sc(i, j, k) *= s;
  return a;
}

// K[t]/(t^m) in the basis 1, t, ..., t^(m-1); with `unit` false the basis
// starts at t (the nilpotent ideal).
Algebra truncated_poly(std::size_t m, bool unit) {
  const std::size_t off = unit ? 0 : 1, n = unit ? m : m - 1;
  Algebra a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = i + j + off;
      if (k < m) a.sc(i, j, k - off) = Rational(1);
    }
  return a;
}

// Associative pieces of dimension 1..3.
std::vector<Algebra> associative_blocks(bool commutative) {
  std::vector<Algebra> v;
  Algebra field(1);
  field.sc(0, 0, 0) = Rational(1);
  v.push_back(field);
  v.push_back(Algebra(1));
  v.push_back(truncated_poly(2, true));
  v.push_back(truncated_poly(3, true));
  v.push_back(truncated_poly(3, false));  // t*t = t^2
  v.push_back(truncated_poly(4, false));
  if (!commutative) {
    Algebra lu(2);  // e1e1 = e1, e1e2 = e2
    lu.sc(0, 0, 0) = Rational(1);
    lu.sc(0, 1, 1) = Rational(1);
    v.push_back(lu);
    v.push_back(lu.opposite());
    Algebra ut(3);  // upper triangular 2x2
    ut.sc(0, 0, 0) = Rational(1);
    ut.sc(0, 1, 1) = Rational(1);
    ut.sc(1, 2, 1) = Rational(1);
    ut.sc(2, 2, 2) = Rational(1);
    v.push_back(ut);
    v.push_back(ut.opposite());
  }
  return v;
}

// Lie algebras of dimension 2 and 3, written as anticommutative products.
std::vector<Algebra> lie_blocks() {
  std::vector<Algebra> v;
  Algebra ab(2);  // [x,y] = y
  ab.sc(0, 1, 1) = Rational(1);
  ab.sc(1, 0, 1) = Rational(-1);
  v.push_back(ab);
  Algebra heis(3);  // [x,y] = z
  heis.sc(0, 1, 2) = Rational(1);
  heis.sc(1, 0, 2) = Rational(-1);
  v.push_back(heis);
  Algebra sl2(3);  // h, e, f
  sl2.sc(0, 1, 1) = Rational(2);
  sl2.sc(1, 0, 1) = Rational(-2);
  sl2.sc(0, 2, 2) = Rational(-2);
  sl2.sc(2, 0, 2) = Rational(2);
  sl2.sc(1, 2, 0) = Rational(1);
  sl2.sc(2, 1, 0) = Rational(-1);
  v.push_back(sl2);
  return v;
}

// Left-symmetric, not associative: x o y = x D(y) on K[t]/(t^3) with
// D(t^k) = k t^k, and the 2-dim e1e1 = 2e1, e1e2 = e2.
std::vector<Algebra> left_symmetric_blocks() {
  std::vector<Algebra> v;
  Algebra eu(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (i + j < 3) eu.sc(i, j, i + j) = Rational(static_cast<long>(j));
  v.push_back(eu);
  Algebra two(2);
  two.sc(0, 0, 0) = Rational(2);
  two.sc(0, 1, 1) = Rational(1);
  v.push_back(two);
  return v;
}

// Pick blocks until the dimension is reached exactly (or the closest
// achievable total when `dim` is 0).
Algebra assemble(Gen& g, const std::vector<Algebra>& blocks, std::size_t dim, const std::vector<Algebra>& fill) {
  Algebra out(0);
  for (int guard = 0; guard < 64 && out.dim() < dim; ++guard) {
    const Algebra& b = blocks[static_cast<std::size_t>(g.integer(0, static_cast<long>(blocks.size()) - 1))];
    if (out.dim() + b.dim() > dim) continue;
    out = out.dim() ? direct_sum(out, b) : b;
  }
  while (out.dim() < dim) {
    // fillers of dimension 1 keep the family law
    out = out.dim() ? direct_sum(out, fill[static_cast<std::size_t>(g.integer(0, static_cast<long>(fill.size()) - 1))])
                    : fill.front();
  }
  return out;
}

const std::vector<std::string> kFamilies = {"zero",           "golden",     "a3",
                                            "associative",    "commutative",    "admissible_poisson",
                                            "left_symmetric", "right_symmetric", "random"};

}  // namespace

const std::vector<std::string>& algebra_families() { return kFamilies; }

std::optional<LawKind> family_law(std::string_view family) {
  if (family == "zero" || family == "associative" || family == "commutative") return LawKind::Associative;
  if (family == "golden" || family == "a3") return LawKind::A3;
  if (family == "admissible_poisson") return LawKind::AdmissiblePoisson;
  if (family == "left_symmetric") return LawKind::LeftSymmetric;
  if (family == "right_symmetric") return LawKind::RightSymmetric;
  if (family == "random") return std::nullopt;
  throw Error(ErrorKind::UnknownFamily, "unknown family '" + std::string(family) + "'");
}

Algebra generate_algebra(std::string_view family, std::uint64_t seed, std::size_t dim) {
  const auto law = family_law(family);
  Gen g{std::mt19937_64(seed ^ 0x5eed'a3a3'0000'0000ULL)};
  if (family == "golden") return golden();
  if (dim == 0) dim = family == "a3" ? 2 : static_cast<std::size_t>(g.integer(2, 3));
  if (family == "zero") return Algebra(dim);

  Algebra field(1);
  field.sc(0, 0, 0) = Rational(1);
  const std::vector<Algebra> fill{field, Algebra(1)};
  constexpr int kBudget = 200;
  for (int attempt = 0; attempt < kBudget; ++attempt) {
    Algebra a;
    if (family == "random") {
      a = Algebra(dim);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          for (std::size_t k = 0; k < dim; ++k)
            if (g.coin(0.4)) a.sc(i, j, k) = g.small();
      return a;
    } else if (family == "a3") {
      // rational deformations of the 2-dim example, plus sums with associative pieces
      a = golden();
      if (g.coin(0.5)) {
        for (std::size_t i = 0; i < 2; ++i)
          for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
              if (g.coin(0.3)) a.sc(i, j, k) += Rational(g.integer(-1, 1), g.integer(1, 2));
      }
      if (dim > 2) a = direct_sum(a, assemble(g, associative_blocks(false), dim - 2, fill));
    } else if (family == "associative" || family == "commutative") {
      a = assemble(g, associative_blocks(family == "commutative"), dim, fill);
    } else if (family == "admissible_poisson") {
      const auto lie = lie_blocks();
      std::vector<Algebra> blocks = lie;
      for (const auto& b : associative_blocks(true)) blocks.push_back(b);
      a = assemble(g, blocks, dim, fill);
    } else {
      std::vector<Algebra> blocks = left_symmetric_blocks();
      for (const auto& b : associative_blocks(false)) blocks.push_back(b);
      a = assemble(g, blocks, dim, fill);
      if (family == "right_symmetric") a = a.opposite();
    }
    if (g.coin(0.5)) a = scaled(a, g.nonzero());
    a = a.change_basis(g.invertible(a.dim()));
    if (check_law(a, *law).passed) return a;
  }
  throw Error(ErrorKind::RejectionBudgetExceeded,
              "no " + std::string(family) + " sample within " + std::to_string(kBudget) + " attempts");
}

}  // namespace a3kit
