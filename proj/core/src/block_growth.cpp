#include "conceptgraph/block_growth.hpp"

#include <ostream>
#include <string>

#include "conceptgraph/error.hpp"

namespace conceptgraph {

std::string_view to_string(Selection selection) noexcept {
  return selection == Selection::uniform ? "usp" : "psp";
}

Selection parse_selection(std::string_view text) {
  if (text == "usp" || text == "uniform") return Selection::uniform;
  if (text == "psp" || text == "preferential") return Selection::preferential;
  throw ConfigError("selection must be usp or psp, got '" + std::string(text) +
                    "'");
}

void ModelConfig::validate() const {
  if (!(nu >= 0.0 && nu <= 1.0)) {
    throw ConfigError("nu must lie in [0, 1]");
  }
  if (articles == 0) throw ConfigError("article count must be >= 1");
  if (realizations == 0) throw ConfigError("realizations must be >= 1");
}

GrowthState GrowthState::with_counts(Selection selection,
                                     std::span<const std::uint64_t> counts) {
  GrowthState state(selection);
  state.counts_.assign(counts.begin(), counts.end());
  state.pool_.resize(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) {
      throw InputError("occurrence counts of existing concepts must be >= 1");
    }
    state.total_ += counts[i];
    state.pool_.set(i, state.pool_weight(counts[i]));
  }
  return state;
}

Block GrowthState::select_concepts(std::size_t size, double nu, Rng& rng) {
  Block block;
  block.concepts.reserve(size);
  picked_.clear();
  std::size_t available = counts_.size();
  for (std::size_t slot = 0; slot < size; ++slot) {
    const bool novel = available == 0 || rng.bernoulli(nu);
    if (novel) {
      block.concepts.push_back(
          static_cast<ConceptId>(counts_.size() + block.novel));
      ++block.novel;
      continue;
    }
    const auto chosen = static_cast<ConceptId>(pool_.sample(rng));
    block.concepts.push_back(chosen);
    picked_.push_back(chosen);
    pool_.set(chosen, 0);
    --available;
  }
  for (ConceptId concept_id : picked_) {
    pool_.set(concept_id, pool_weight(counts_[concept_id]));
  }
  return block;
}

void GrowthState::commit(const Block& block) {
  const std::size_t before = counts_.size();
  counts_.resize(before + block.novel, 0);
  pool_.resize(counts_.size());
  for (ConceptId concept_id : block.concepts) {
    if (concept_id >= counts_.size()) {
      throw InputError("block refers to a concept that was never minted");
    }
    ++counts_[concept_id];
    pool_.set(concept_id, pool_weight(counts_[concept_id]));
  }
  total_ += block.concepts.size();
  ++completed_;
}

GeneratedCorpus generate_corpus(const ModelConfig& config) {
  config.validate();
  Rng rng(config.seed);
  GrowthState state(config.selection);
  GeneratedCorpus corpus;
  corpus.articles.reserve(config.articles);
  for (std::size_t t = 0; t < config.articles; ++t) {
    const std::size_t size = config.block_sizes.draw(rng);
    Block block = state.select_concepts(size, config.nu, rng);
    state.commit(block);
    corpus.novel_slots += block.novel;
    corpus.total_slots += size;
    corpus.articles.push_back(std::move(block.concepts));
  }
  corpus.concept_count = state.concept_count();
  return corpus;
}

GrowthResult generate_network(const ModelConfig& config) {
  config.validate();
  Rng rng(config.seed);
  GrowthState state(config.selection);
  GrowthResult result;
  auto& corpus = result.corpus;
  corpus.articles.reserve(config.articles);
  for (std::size_t t = 0; t < config.articles; ++t) {
    const std::size_t size = config.block_sizes.draw(rng);
    Block block = state.select_concepts(size, config.nu, rng);
    state.commit(block);
    result.graph.add_nodes(block.novel);
    result.graph.add_clique(block.concepts);
    corpus.novel_slots += block.novel;
    corpus.total_slots += size;
    corpus.articles.push_back(std::move(block.concepts));
  }
  corpus.concept_count = state.concept_count();
  return result;
}

void write_generated_corpus(std::ostream& out, const GeneratedCorpus& corpus) {
  std::string line;
  for (std::size_t t = 0; t < corpus.articles.size(); ++t) {
    line = "{\"id\":\"A" + std::to_string(t + 1) + "\",\"concepts\":[";
    bool first = true;
    for (ConceptId concept_id : corpus.articles[t]) {
      if (!first) line += ',';
      first = false;
      line += "\"C" + std::to_string(concept_id + 1) + '"';
    }
    line += "]}\n";
    out << line;
  }
}

BipartiteNetwork build_bipartite(const GeneratedCorpus& corpus) {
  return BipartiteNetwork(corpus.concept_count, corpus.articles);
}

}  // namespace conceptgraph
