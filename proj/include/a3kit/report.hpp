#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "a3kit/core.hpp"

namespace a3kit {

// Dense residual of an identity evaluated on every basis tuple. The leading
// `index_rank` axes enumerate the tuple; the remaining axes hold the residual
// block (a vector, matrix or tensor coefficient array) for that tuple.
class ResidualArray {
 public:
  ResidualArray() = default;
  ResidualArray(std::vector<std::size_t> shape, std::size_t index_rank);

  const std::vector<std::size_t>& shape() const { return shape_; }
  std::size_t index_rank() const { return index_rank_; }
  std::size_t block_size() const { return block_size_; }
  std::size_t block_count() const { return data_.size() / (block_size_ ? block_size_ : 1); }
  std::span<const Rational> data() const { return data_; }

  std::span<Rational> block(std::span<const std::size_t> index);
  std::span<const Rational> block(std::span<const std::size_t> index) const;
  std::span<Rational> block(std::initializer_list<std::size_t> index) {
    return block(std::span<const std::size_t>(index.begin(), index.size()));
  }
  std::span<const Rational> block(std::initializer_list<std::size_t> index) const {
    return block(std::span<const std::size_t>(index.begin(), index.size()));
  }
  void set_block(std::span<const std::size_t> index, std::span<const Rational> values);
  void set_block(std::initializer_list<std::size_t> index, std::span<const Rational> values) {
    set_block(std::span<const std::size_t>(index.begin(), index.size()), values);
  }

  // Unflattens a block index into a basis tuple.
  std::vector<std::size_t> tuple_of(std::size_t block_number) const;
  bool is_zero() const;

  friend bool operator==(const ResidualArray&, const ResidualArray&) = default;

 private:
  std::vector<std::size_t> shape_;
  std::size_t index_rank_ = 0;
  std::size_t block_size_ = 1;
  std::vector<Rational> data_;
};

struct Witness {
  std::string condition;             // which identity within the check failed
  std::vector<std::size_t> indices;  // basis tuple, in the check's own order
  std::vector<std::size_t> block_shape;
  std::vector<Rational> residual;    // flattened residual block

  Vector residual_vector() const { return Vector(residual); }
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct CheckReport {
  std::string law_name;
  bool passed = true;
  std::optional<Witness> witness;  // lexicographically first failure
  bool residual_norm_zero = true;  // always equal to `passed`
  std::vector<Witness> failures;   // every failing tuple, in lexicographic order

  explicit operator bool() const { return passed; }

  static CheckReport pass(std::string name);
  static CheckReport from_residual(std::string name, const ResidualArray& residual,
                                   std::string condition = {});
  // Structural condition with no tensor residual (symmetry flags, determinants, ...).
  static CheckReport condition(std::string name, bool ok, std::string condition,
                               std::vector<Rational> evidence = {});
  // Conjunction; witnesses of the parts are kept in order, condition names are
  // prefixed with the part's law name.
  static CheckReport all_of(std::string name, const std::vector<CheckReport>& parts);

  // Finds the failure at a given tuple, if any.
  const Witness* failure_at(std::span<const std::size_t> indices,
                            std::string_view condition = {}) const;
};

}  // namespace a3kit
