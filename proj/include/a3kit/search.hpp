#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "a3kit/algebra.hpp"
#include "a3kit/bialgebra.hpp"
#include "a3kit/double_construction.hpp"
#include "a3kit/report.hpp"
#include "a3kit/representation.hpp"

namespace a3kit {

struct GridSpec {
  std::vector<Rational> values{Rational(-2), Rational(-1), Rational(0), Rational(1), Rational(2)};
  std::size_t max_solutions = 100000;
  bool deterministic_order = true;  // always on; kept for report output
  std::size_t threads = 0;          // 0: A3KIT_THREADS, else hardware concurrency

  // Sorts the values ascending. Throws Parse on an empty or duplicated list
  // and on max_solutions == 0.
  void normalize();
  // "-2..2" (integer range) or a comma list of rationals such as "-1,0,1/2".
  static GridSpec parse(std::string_view text);
};

// Worker count used when GridSpec::threads is 0.
std::size_t default_thread_count();

// All T (A.dim x vdim) with entries from the grid passing check_relative_rb,
// ordered lexicographically by the row-major entry sequence. At most 6 entries.
// Throws SearchSpaceTooLarge.
std::vector<Matrix> solve_relative_rb(const Algebra& a, const Representation& rho,
                                      GridSpec grid = {});
// All skew r whose upper-triangle entries lie in the grid and solve AY(r) = 0,
// lexicographic over the row-major upper triangle. At most 8 free entries.
std::vector<Tensor2> solve_aybe_skew(const Algebra& a, GridSpec grid = {});

// Independent evaluation of a checker's identity by plain nested loops.
// `parts` mirror the residual arrays the matching checker builds, in the same
// order; `conditions` are its non-tensor conditions (symmetry and the like).
struct BruteResidual {
  std::vector<std::pair<std::string, ResidualArray>> parts;
  std::vector<std::pair<std::string, bool>> conditions;

  bool is_zero() const;
};

struct BruteInputs {
  std::optional<Algebra> algebra, algebra2;
  std::optional<Comultiplication> delta;
  std::optional<Tensor2> r;
  std::optional<Matrix> map;
  std::optional<BilinearForm> form;
  std::optional<Representation> rep, rep2;
  std::optional<MatchedPairData> matched;
};

// Supported identifiers, e.g. "law:A3", "coalgebra", "bialgebra", "aybe".
const std::vector<std::string>& brute_expressions();
// Throws UnknownExpression, or PreconditionFailed when a needed input is missing.
BruteResidual brute_residual(std::string_view expr_id, const BruteInputs& in);
// The optimized checker for the same identifier.
CheckReport optimized_report(std::string_view expr_id, const BruteInputs& in);
// Same verdict and the same failing tuples with identical residual blocks.
bool reports_agree(const BruteResidual& brute, const CheckReport& report);

// Families: zero, golden, a3, associative, commutative, admissible_poisson,
// left_symmetric, right_symmetric, random. Deterministic per (family, seed, dim);
// dim 0 lets the family choose. Throws UnknownFamily, RejectionBudgetExceeded.
Algebra generate_algebra(std::string_view family, std::uint64_t seed, std::size_t dim = 0);
const std::vector<std::string>& algebra_families();
// The law every output of the family passes (nullopt for zero-free "random").
std::optional<LawKind> family_law(std::string_view family);

}  // namespace a3kit
