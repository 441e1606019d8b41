#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "conceptgraph/block_sizes.hpp"
#include "conceptgraph/corpus.hpp"
#include "conceptgraph/graph.hpp"
#include "conceptgraph/rng.hpp"
#include "conceptgraph/weighted_sampler.hpp"

namespace conceptgraph {

/// How an existing concept is picked for a non-novel slot.
enum class Selection {
  uniform,       // USP: every remaining existing concept equally likely
  preferential,  // PSP: proportional to the number of earlier articles using it
};

std::string_view to_string(Selection selection) noexcept;
/// Accepts "usp"/"uniform" and "psp"/"preferential".
Selection parse_selection(std::string_view text);

struct ModelConfig {
  std::size_t articles = 1;
  double nu = 0.0;
  BlockSizeDistribution block_sizes = BlockSizeDistribution::fixed(37);
  Selection selection = Selection::preferential;
  std::uint64_t seed = 0;
  std::size_t realizations = 1;

  /// Throws ConfigError unless 0 <= nu <= 1, articles >= 1 and
  /// realizations >= 1.
  void validate() const;
};

/// Concepts of one generated article in slot order, novel ones included.
struct Block {
  std::vector<ConceptId> concepts;
  std::size_t novel = 0;
};

/// Growth bookkeeping after t-1 completed articles: per-concept occurrence
/// counts (articles containing the concept) and a sampler over the pool of
/// existing concepts.
class GrowthState {
 public:
  explicit GrowthState(Selection selection) : selection_(selection) {}

  /// A state whose concepts 0..k-1 have the given (positive) occurrence
  /// counts, as if earlier articles had produced them.
  static GrowthState with_counts(Selection selection,
                                 std::span<const std::uint64_t> counts);

  Selection selection() const noexcept { return selection_; }
  std::size_t completed_articles() const noexcept { return completed_; }
  std::size_t concept_count() const noexcept { return counts_.size(); }
  std::uint64_t occurrences(ConceptId concept_id) const {
    return counts_.at(concept_id);
  }
  std::uint64_t total_occurrences() const noexcept { return total_; }

  /// Fills `size` slots. Each slot is novel with probability `nu` (a fresh
  /// id, never colliding with another novel slot) and otherwise takes an
  /// existing concept not yet in this block: uniformly (USP) or weighted by
  /// occurrence count (PSP). While no existing concept is available (first
  /// article, or pool exhausted) a slot is novel without consuming a coin.
  ///
  /// The state is left unchanged; novel ids are provisional until commit().
  Block select_concepts(std::size_t size, double nu, Rng& rng);

  /// Registers the block's novel concepts and adds one occurrence to every
  /// concept in it.
  void commit(const Block& block);

 private:
  std::uint64_t pool_weight(std::uint64_t count) const noexcept {
    return selection_ == Selection::uniform ? 1 : count;
  }

  Selection selection_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
  std::size_t completed_ = 0;
  WeightedSampler pool_;
  std::vector<ConceptId> picked_;  // scratch
};

struct GeneratedCorpus {
  std::vector<std::vector<ConceptId>> articles;
  std::size_t concept_count = 0;
  std::size_t novel_slots = 0;
  std::size_t total_slots = 0;
};

/// Runs the discrete-time process for config.articles steps using
/// config.seed as the stream seed.
GeneratedCorpus generate_corpus(const ModelConfig& config);

struct GrowthResult {
  UndirectedGraph graph;
  GeneratedCorpus corpus;
};

/// generate_corpus plus clique insertion of every block as it is produced.
GrowthResult generate_network(const ModelConfig& config);

/// JSON-lines corpus with ids "A<t>" (t from 1) and "C<j>" (j = id + 1).
/// Concept ids are dense in order of first appearance, so parse_corpus
/// assigns the same ids back.
void write_generated_corpus(std::ostream& out, const GeneratedCorpus& corpus);

/// Same bipartite structure as the exported corpus.
BipartiteNetwork build_bipartite(const GeneratedCorpus& corpus);

}  // namespace conceptgraph
