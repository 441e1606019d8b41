#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conceptgraph/rng.hpp"

namespace conceptgraph {

/// Discrete distribution of concepts per article (block size n_t).
///
/// Three sources:
///  - fixed(n): every block has n concepts;
///  - empirical: a histogram, usually measured from a corpus;
///  - lognormal(mean, sigma): a discretized log-normal. This is a stand-in
///    for an unpublished empirical histogram, not a canonical choice.
///
/// Support is always a set of positive integers and the probabilities sum
/// to 1 within 1e-9.
class BlockSizeDistribution {
 public:
  enum class Kind { fixed, empirical, parametric };

  static BlockSizeDistribution fixed(std::size_t size);

  /// Normalizes raw counts. Zero-count entries are dropped.
  static BlockSizeDistribution from_counts(
      const std::map<std::size_t, std::uint64_t>& counts);

  /// Probabilities must be non-negative and sum to 1 within 1e-9.
  static BlockSizeDistribution from_probabilities(
      const std::map<std::size_t, double>& probabilities);

  /// Probability mass of integer n is the log-normal mass of
  /// [n - 0.5, n + 0.5) (n = 1 also takes [0, 0.5)), truncated where the
  /// upper tail drops below 1e-15. The location parameter is solved so that
  /// the discrete mean equals `mean`; `sigma` is the shape of the underlying
  /// normal.
  static BlockSizeDistribution lognormal(double mean, double sigma);

  /// Parses "fixed:37", "empirical:<csv path>" or "lognormal:<mean>,<sigma>".
  static BlockSizeDistribution parse(std::string_view spec);

  /// Reads the two-column `n,probability` CSV. A header line is optional.
  static BlockSizeDistribution read_csv(std::istream& in);
  static BlockSizeDistribution read_csv(const std::filesystem::path& path);

  void write_csv(std::ostream& out) const;
  void write_csv(const std::filesystem::path& path) const;

  Kind kind() const noexcept { return kind_; }
  std::span<const std::size_t> sizes() const noexcept { return sizes_; }
  std::span<const double> probabilities() const noexcept {
    return probabilities_;
  }
  double probability(std::size_t size) const;
  double mean() const noexcept { return mean_; }
  std::size_t max_size() const noexcept { return sizes_.back(); }

  /// Canonical text form, e.g. "fixed:37" or "lognormal:37,0.6".
  /// Empirical distributions describe themselves as "empirical".
  const std::string& describe() const noexcept { return label_; }

  /// Fixed mode returns the constant without consuming randomness.
  std::size_t draw(Rng& rng) const;

 private:
  BlockSizeDistribution() = default;
  void finish(std::string label);

  Kind kind_ = Kind::fixed;
  std::vector<std::size_t> sizes_;
  std::vector<double> probabilities_;
  std::vector<double> cumulative_;
  double mean_ = 0.0;
  std::string label_;
};

}  // namespace conceptgraph
