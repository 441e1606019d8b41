#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "conceptgraph/rng.hpp"

namespace conceptgraph {

/// Binary-indexed tree over non-negative integer weights supporting
/// point updates and sampling an index with probability weight/total,
/// both in O(log n). Zeroing a weight removes the item from the draw,
/// which gives exact sampling without replacement.
class WeightedSampler {
 public:
  WeightedSampler() = default;
  explicit WeightedSampler(std::size_t size) { resize(size); }

  std::size_t size() const noexcept { return weights_.size(); }
  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t weight(std::size_t index) const { return weights_[index]; }

  /// Grows the index range; new items start at weight 0.
  void resize(std::size_t size);

  void set(std::size_t index, std::uint64_t weight);
  void add(std::size_t index, std::uint64_t delta) {
    set(index, weights_[index] + delta);
  }

  /// Smallest index whose inclusive prefix sum exceeds `target`.
  /// Requires target < total().
  std::size_t find(std::uint64_t target) const;

  /// Requires total() > 0.
  std::size_t sample(Rng& rng) const { return find(rng.uniform_below(total_)); }

 private:
  void tree_add(std::size_t index, std::int64_t delta);

  std::vector<std::uint64_t> weights_;
  std::vector<std::uint64_t> tree_;  // 1-based Fenwick array
  std::size_t top_bit_ = 0;
  std::uint64_t total_ = 0;
};

}  // namespace conceptgraph
