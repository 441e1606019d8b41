#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "conceptgraph/block_sizes.hpp"
#include "conceptgraph/graph.hpp"

namespace conceptgraph {

using ConceptId = std::uint32_t;
using ArticleIndex = std::uint32_t;

struct ArticleRecord {
  std::string id;
  /// Distinct concepts in order of first mention.
  std::vector<ConceptId> concepts;
  /// Parallel to `concepts` when the source carried generic flags.
  std::optional<std::vector<bool>> generic;
};

/// Articles plus a dense concept index (ids 0..N-1 in order of first
/// appearance). Concept identity is exact, case-sensitive string match after
/// trimming surrounding whitespace.
class Corpus {
 public:
  std::span<const ArticleRecord> articles() const noexcept { return articles_; }
  std::size_t article_count() const noexcept { return articles_.size(); }
  std::size_t concept_count() const noexcept { return names_.size(); }

  const std::string& concept_name(ConceptId id) const { return names_.at(id); }
  std::optional<ConceptId> find_concept(std::string_view name) const;

  /// Appends an article. Concepts listed in `generic` but not in `concepts`
  /// join the article as generic ones. Returns the number of repeated
  /// mentions that were collapsed.
  ///
  /// Throws InputError on an empty or duplicate id, or an empty concept name.
  std::size_t add_article(std::string id, std::span<const std::string> concepts,
                          const std::vector<std::string>* generic = nullptr);

 private:
  ConceptId intern(const std::string& name);

  std::vector<ArticleRecord> articles_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, ConceptId> index_;
  std::unordered_map<std::string, ArticleIndex> article_ids_;
};

struct ParsedCorpus {
  Corpus corpus;
  std::size_t duplicate_warnings = 0;
};

/// Reads JSON-lines, one object per line:
///   {"id": str, "concepts": [str], "generic": [str]}   ("generic" optional)
/// Blank lines are skipped. Throws ParseError with the line number on
/// malformed lines and InputError on repeated article ids.
ParsedCorpus parse_corpus(std::istream& in);
ParsedCorpus parse_corpus(const std::filesystem::path& path);

/// Writes the same JSON-lines format; parse_corpus reproduces the corpus.
void write_corpus(std::ostream& out, const Corpus& corpus);

/// With `exclude`, drops every concept flagged generic by any article and
/// rebuilds the index densely; articles left empty are retained. Throws
/// ConfigError when excluding and some article carries no flags.
Corpus filter_generic(const Corpus& corpus, bool exclude);

/// Two-mode article/concept network with links only across the modes,
/// stored as CSR in both directions.
class BipartiteNetwork {
 public:
  BipartiteNetwork() = default;
  BipartiteNetwork(std::size_t concept_count,
                   const std::vector<std::vector<ConceptId>>& article_concepts);

  std::size_t article_count() const noexcept {
    return article_offsets_.size() - 1;
  }
  std::size_t concept_count() const noexcept {
    return concept_offsets_.size() - 1;
  }
  std::size_t cross_link_count() const noexcept {
    return article_concepts_.size();
  }

  std::span<const ConceptId> concepts_of(ArticleIndex article) const;
  std::span<const ArticleIndex> articles_of(ConceptId concept_id) const;

 private:
  std::vector<std::size_t> article_offsets_{0};
  std::vector<ConceptId> article_concepts_;
  std::vector<std::size_t> concept_offsets_{0};
  std::vector<ArticleIndex> concept_articles_;
};

BipartiteNetwork build_bipartite(const Corpus& corpus);

/// Concepts linked iff some article contains both (union of per-article
/// cliques). Node i is concept id i.
UndirectedGraph project_concepts(const BipartiteNetwork& bipartite);

/// Articles linked iff they share at least one concept. Node i is the i-th
/// article.
UndirectedGraph project_articles(const BipartiteNetwork& bipartite);

/// Empirical distribution of concepts per article over non-empty articles.
/// Throws InputError if there are none.
BlockSizeDistribution block_size_histogram(const Corpus& corpus);

}  // namespace conceptgraph
