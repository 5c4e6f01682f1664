#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "a3kit/algebra.hpp"
#include "a3kit/bialgebra.hpp"
#include "a3kit/double_construction.hpp"
#include "a3kit/report.hpp"

namespace a3kit {

inline constexpr std::string_view kAlgebraSchema = "a3kit.algebra/1";

// On-disk form of an algebra plus named extras:
//   {"schema": "a3kit.algebra/1", "dim": 2, "basis": ["e1", "e2"],
//    "products": {"e1,e2": {"e1": "1", "e2": "2"}},
//    "delta":    {"e1": {"e1,e1": "1"}},
//    "tensors":  {"r": {"e1,e2": "1", "e2,e1": "-1"}},
//    "maps":     {"T": {"e1": {"e2": "1"}}},        // T(e1) = e2
//    "forms":    {"w": {"e1,e2": "1", "e2,e1": "-1"}}}
// Rationals are strings "p" or "p/q"; absent entries are zero.
struct AlgebraFile {
  Algebra algebra;
  std::optional<Comultiplication> delta;
  std::map<std::string, Tensor2> tensors;
  std::map<std::string, Matrix> maps;
  std::map<std::string, BilinearForm> forms;

  friend bool operator==(const AlgebraFile&, const AlgebraFile&) = default;
};

// Throws Error(Parse) naming the offending field.
AlgebraFile parse_algebra_file(std::string_view text);
AlgebraFile read_algebra_file(const std::string& path);
nlohmann::json algebra_file_json(const AlgebraFile& f);
// Key-sorted, two-space indent, trailing newline.
std::string write_algebra_file(const AlgebraFile& f);

// "e1 + 2*e2", "-1/2*e3", "0".
std::string format_vector(const Vector& v, const std::vector<std::string>& labels);

// Labels for a witness tuple; `index_labels[k]` is the basis used by axis k.
nlohmann::json witness_json(const Witness& w, const std::vector<std::vector<std::string>>& index_labels,
                            const std::vector<std::string>* block_labels);

}  // namespace a3kit
