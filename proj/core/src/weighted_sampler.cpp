#include "conceptgraph/weighted_sampler.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace conceptgraph {

void WeightedSampler::resize(std::size_t size) {
  if (size < weights_.size()) {
    // Shrinking is only used to reset; rebuild from scratch.
    weights_.resize(size);
    top_bit_ = 0;
    tree_.clear();
  } else {
    weights_.resize(size, 0);
  }
  const std::size_t capacity = tree_.empty() ? 0 : tree_.size() - 1;
  if (size <= capacity && !tree_.empty()) return;

  const std::size_t new_capacity = std::bit_ceil(std::max<std::size_t>(size, 1));
  tree_.assign(new_capacity + 1, 0);
  total_ = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    tree_[i + 1] = weights_[i];
    total_ += weights_[i];
  }
  for (std::size_t i = 1; i <= new_capacity; ++i) {
    const std::size_t parent = i + (i & (~i + 1));
    if (parent <= new_capacity) tree_[parent] += tree_[i];
  }
  top_bit_ = new_capacity;
}

void WeightedSampler::tree_add(std::size_t index, std::int64_t delta) {
  const std::size_t capacity = tree_.size() - 1;
  for (std::size_t i = index + 1; i <= capacity; i += i & (~i + 1)) {
    tree_[i] += static_cast<std::uint64_t>(delta);
  }
}

void WeightedSampler::set(std::size_t index, std::uint64_t weight) {
  assert(index < weights_.size());
  const auto delta = static_cast<std::int64_t>(weight - weights_[index]);
  weights_[index] = weight;
  total_ += static_cast<std::uint64_t>(delta);
  tree_add(index, delta);
}

std::size_t WeightedSampler::find(std::uint64_t target) const {
  assert(target < total_);
  std::size_t position = 0;
  for (std::size_t step = top_bit_; step > 0; step >>= 1) {
    const std::size_t next = position + step;
    if (next < tree_.size() && tree_[next] <= target) {
      position = next;
      target -= tree_[next];
    }
  }
  return position;
}

}  // namespace conceptgraph
