#include "a3kit/report.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "a3kit/error.hpp"

namespace a3kit {

ResidualArray::ResidualArray(std::vector<std::size_t> shape, std::size_t index_rank)
    : shape_(std::move(shape)), index_rank_(index_rank) {
  if (index_rank_ > shape_.size()) throw_dimension_mismatch("ResidualArray");
  block_size_ = std::accumulate(shape_.begin() + static_cast<std::ptrdiff_t>(index_rank_),
                                shape_.end(), std::size_t{1}, std::multiplies<>());
  const std::size_t total =
      std::accumulate(shape_.begin(), shape_.end(), std::size_t{1}, std::multiplies<>());
  data_.resize(total);
}

namespace {

std::size_t flat_block(const std::vector<std::size_t>& shape, std::size_t index_rank,
                       std::span<const std::size_t> index) {
  if (index.size() != index_rank) throw_dimension_mismatch("ResidualArray::block");
  std::size_t flat = 0;
  for (std::size_t a = 0; a < index_rank; ++a) {
    if (index[a] >= shape[a]) throw_dimension_mismatch("ResidualArray::block");
    flat = flat * shape[a] + index[a];
  }
  return flat;
}

}  // namespace

std::span<Rational> ResidualArray::block(std::span<const std::size_t> index) {
  const auto b = flat_block(shape_, index_rank_, index);
  return std::span<Rational>(data_).subspan(b * block_size_, block_size_);
}

std::span<const Rational> ResidualArray::block(std::span<const std::size_t> index) const {
  const auto b = flat_block(shape_, index_rank_, index);
  return std::span<const Rational>(data_).subspan(b * block_size_, block_size_);
}

void ResidualArray::set_block(std::span<const std::size_t> index,
                              std::span<const Rational> values) {
  auto dst = block(index);
  if (values.size() != dst.size()) throw_dimension_mismatch("ResidualArray::set_block");
  std::copy(values.begin(), values.end(), dst.begin());
}

std::vector<std::size_t> ResidualArray::tuple_of(std::size_t block_number) const {
  std::vector<std::size_t> t(index_rank_);
  for (std::size_t a = index_rank_; a-- > 0;) {
    t[a] = block_number % shape_[a];
    block_number /= shape_[a];
  }
  return t;
}

bool ResidualArray::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r.is_zero(); });
}

CheckReport CheckReport::pass(std::string name) {
  CheckReport r;
  r.law_name = std::move(name);
  return r;
}

CheckReport CheckReport::from_residual(std::string name, const ResidualArray& residual,
                                       std::string condition) {
  CheckReport r = pass(std::move(name));
  const std::size_t bs = residual.block_size();
  const auto data = residual.data();
  const std::vector<std::size_t> block_shape(
      residual.shape().begin() + static_cast<std::ptrdiff_t>(residual.index_rank()),
      residual.shape().end());
  for (std::size_t b = 0; b < residual.block_count(); ++b) {
    const auto blk = data.subspan(b * bs, bs);
    if (std::all_of(blk.begin(), blk.end(), [](const Rational& q) { return q.is_zero(); })) {
      continue;
    }
    r.failures.push_back(Witness{condition, residual.tuple_of(b), block_shape,
                                 std::vector<Rational>(blk.begin(), blk.end())});
  }
  if (!r.failures.empty()) {
    r.passed = false;
    r.residual_norm_zero = false;
    r.witness = r.failures.front();
  }
  return r;
}

CheckReport CheckReport::condition(std::string name, bool ok, std::string condition,
                                   std::vector<Rational> evidence) {
  CheckReport r = pass(std::move(name));
  if (!ok) {
    r.passed = false;
    r.residual_norm_zero = false;
    std::vector<std::size_t> shape{evidence.size()};
    r.failures.push_back(Witness{std::move(condition), {}, std::move(shape), std::move(evidence)});
    r.witness = r.failures.front();
  }
  return r;
}

CheckReport CheckReport::all_of(std::string name, const std::vector<CheckReport>& parts) {
  CheckReport r = pass(std::move(name));
  for (const auto& p : parts) {
    for (const auto& w : p.failures) {
      Witness copy = w;
      copy.condition = w.condition.empty() ? p.law_name : p.law_name + "/" + w.condition;
      r.failures.push_back(std::move(copy));
    }
    if (!p.passed && p.failures.empty()) {
      r.failures.push_back(Witness{p.law_name, {}, {}, {}});
    }
  }
  if (!r.failures.empty()) {
    r.passed = false;
    r.residual_norm_zero = false;
    r.witness = r.failures.front();
  }
  return r;
}

const Witness* CheckReport::failure_at(std::span<const std::size_t> indices,
                                       std::string_view condition) const {
  for (const auto& w : failures) {
    if (!condition.empty() && w.condition != condition) continue;
    if (std::equal(w.indices.begin(), w.indices.end(), indices.begin(), indices.end())) return &w;
  }
  return nullptr;
}

}  // namespace a3kit
