#include "conceptgraph/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "conceptgraph/error.hpp"

namespace conceptgraph {

namespace {

std::string trimmed(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n\f\v");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n\f\v");
  return std::string(text.substr(first, last - first + 1));
}

std::vector<std::string> string_array(const nlohmann::json& value,
                                      const char* key, std::size_t line) {
  if (!value.is_array()) {
    throw ParseError(std::string("\"") + key + "\" must be an array", line);
  }
  std::vector<std::string> result;
  result.reserve(value.size());
  for (const auto& item : value) {
    if (!item.is_string()) {
      throw ParseError(std::string("\"") + key + "\" must hold strings", line);
    }
    result.push_back(item.get<std::string>());
  }
  return result;
}

}  // namespace

std::optional<ConceptId> Corpus::find_concept(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ConceptId Corpus::intern(const std::string& name) {
  const auto [it, inserted] =
      index_.emplace(name, static_cast<ConceptId>(names_.size()));
  if (inserted) names_.push_back(name);
  return it->second;
}

std::size_t Corpus::add_article(std::string id,
                                std::span<const std::string> concepts,
                                const std::vector<std::string>* generic) {
  if (id.empty()) throw InputError("article id must be non-empty");
  if (article_ids_.contains(id)) {
    throw InputError("duplicate article id '" + id + "'");
  }

  std::vector<std::string> names;
  names.reserve(concepts.size());
  for (const auto& raw : concepts) {
    names.push_back(trimmed(raw));
    if (names.back().empty()) {
      throw InputError("article '" + id + "' has an empty concept name");
    }
  }
  std::unordered_set<std::string> generic_names;
  if (generic != nullptr) {
    for (const auto& raw : *generic) {
      auto name = trimmed(raw);
      if (name.empty()) {
        throw InputError("article '" + id + "' has an empty generic name");
      }
      generic_names.insert(std::move(name));
    }
  }

  ArticleRecord record;
  record.id = id;
  std::unordered_set<std::string> seen;
  std::size_t duplicates = 0;
  std::vector<std::string> ordered;
  for (auto& name : names) {
    if (!seen.insert(name).second) {
      ++duplicates;
      continue;
    }
    ordered.push_back(std::move(name));
  }
  if (generic != nullptr) {
    for (const auto& raw : *generic) {
      auto name = trimmed(raw);
      if (seen.insert(name).second) ordered.push_back(std::move(name));
    }
    record.generic.emplace();
  }
  for (const auto& name : ordered) {
    record.concepts.push_back(intern(name));
    if (record.generic) record.generic->push_back(generic_names.contains(name));
  }

  article_ids_.emplace(std::move(id),
                       static_cast<ArticleIndex>(articles_.size()));
  articles_.push_back(std::move(record));
  return duplicates;
}

ParsedCorpus parse_corpus(std::istream& in) {
  ParsedCorpus result;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;

    nlohmann::json object;
    try {
      object = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& error) {
      throw ParseError(std::string("invalid JSON: ") + error.what(),
                       line_number);
    }
    if (!object.is_object()) {
      throw ParseError("expected a JSON object", line_number);
    }
    const auto id = object.find("id");
    if (id == object.end() || !id->is_string()) {
      throw ParseError("missing string field \"id\"", line_number);
    }
    const auto concepts = object.find("concepts");
    if (concepts == object.end()) {
      throw ParseError("missing field \"concepts\"", line_number);
    }
    const auto names = string_array(*concepts, "concepts", line_number);
    std::optional<std::vector<std::string>> generic;
    if (const auto flags = object.find("generic"); flags != object.end()) {
      generic = string_array(*flags, "generic", line_number);
    }
    try {
      result.duplicate_warnings += result.corpus.add_article(
          id->get<std::string>(), names, generic ? &*generic : nullptr);
    } catch (const InputError& error) {
      throw InputError("line " + std::to_string(line_number) + ": " +
                       error.what());
    }
  }
  return result;
}

ParsedCorpus parse_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading", path.string());
  return parse_corpus(in);
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
  for (const auto& article : corpus.articles()) {
    nlohmann::json object;
    object["id"] = article.id;
    auto concepts = nlohmann::json::array();
    auto generic = nlohmann::json::array();
    for (std::size_t i = 0; i < article.concepts.size(); ++i) {
      const auto& name = corpus.concept_name(article.concepts[i]);
      concepts.push_back(name);
      if (article.generic && (*article.generic)[i]) generic.push_back(name);
    }
    object["concepts"] = std::move(concepts);
    if (article.generic) object["generic"] = std::move(generic);
    out << object.dump() << '\n';
  }
}

Corpus filter_generic(const Corpus& corpus, bool exclude) {
  if (!exclude) return corpus;

  std::vector<bool> drop(corpus.concept_count(), false);
  for (const auto& article : corpus.articles()) {
    if (!article.generic) {
      throw ConfigError("cannot exclude generic concepts: article '" +
                        article.id + "' carries no generic flags");
    }
    for (std::size_t i = 0; i < article.concepts.size(); ++i) {
      if ((*article.generic)[i]) drop[article.concepts[i]] = true;
    }
  }

  Corpus filtered;
  std::vector<std::string> kept;
  const std::vector<std::string> no_generic;
  for (const auto& article : corpus.articles()) {
    kept.clear();
    for (ConceptId concept_id : article.concepts) {
      if (!drop[concept_id]) kept.push_back(corpus.concept_name(concept_id));
    }
    filtered.add_article(article.id, kept, &no_generic);
  }
  return filtered;
}

BipartiteNetwork::BipartiteNetwork(
    std::size_t concept_count,
    const std::vector<std::vector<ConceptId>>& article_concepts) {
  article_offsets_.reserve(article_concepts.size() + 1);
  for (const auto& concepts : article_concepts) {
    for (ConceptId concept_id : concepts) {
      if (concept_id >= concept_count) {
        throw InputError("concept id out of range in bipartite construction");
      }
      article_concepts_.push_back(concept_id);
    }
    article_offsets_.push_back(article_concepts_.size());
  }

  std::vector<std::size_t> counts(concept_count, 0);
  for (ConceptId concept_id : article_concepts_) ++counts[concept_id];
  concept_offsets_.assign(concept_count + 1, 0);
  for (std::size_t c = 0; c < concept_count; ++c) {
    concept_offsets_[c + 1] = concept_offsets_[c] + counts[c];
  }
  concept_articles_.resize(article_concepts_.size());
  std::vector<std::size_t> cursor(concept_offsets_.begin(),
                                  concept_offsets_.end() - 1);
  for (std::size_t a = 0; a + 1 < article_offsets_.size(); ++a) {
    for (std::size_t k = article_offsets_[a]; k < article_offsets_[a + 1];
         ++k) {
      concept_articles_[cursor[article_concepts_[k]]++] =
          static_cast<ArticleIndex>(a);
    }
  }
}

std::span<const ConceptId> BipartiteNetwork::concepts_of(
    ArticleIndex article) const {
  if (article >= article_count()) throw InputError("unknown article index");
  return std::span(article_concepts_)
      .subspan(article_offsets_[article],
               article_offsets_[article + 1] - article_offsets_[article]);
}

std::span<const ArticleIndex> BipartiteNetwork::articles_of(
    ConceptId concept_id) const {
  if (concept_id >= concept_count()) throw InputError("unknown concept id");
  return std::span(concept_articles_)
      .subspan(concept_offsets_[concept_id],
               concept_offsets_[concept_id + 1] - concept_offsets_[concept_id]);
}

BipartiteNetwork build_bipartite(const Corpus& corpus) {
  std::vector<std::vector<ConceptId>> article_concepts;
  article_concepts.reserve(corpus.article_count());
  for (const auto& article : corpus.articles()) {
    article_concepts.push_back(article.concepts);
  }
  return BipartiteNetwork(corpus.concept_count(), article_concepts);
}

UndirectedGraph project_concepts(const BipartiteNetwork& bipartite) {
  UndirectedGraph graph(bipartite.concept_count());
  for (std::size_t a = 0; a < bipartite.article_count(); ++a) {
    graph.add_clique(bipartite.concepts_of(static_cast<ArticleIndex>(a)));
  }
  return graph;
}

UndirectedGraph project_articles(const BipartiteNetwork& bipartite) {
  UndirectedGraph graph(bipartite.article_count());
  for (std::size_t c = 0; c < bipartite.concept_count(); ++c) {
    graph.add_clique(bipartite.articles_of(static_cast<ConceptId>(c)));
  }
  return graph;
}

BlockSizeDistribution block_size_histogram(const Corpus& corpus) {
  if (corpus.article_count() == 0) {
    throw InputError("cannot build a block-size histogram of an empty corpus");
  }
  std::map<std::size_t, std::uint64_t> counts;
  for (const auto& article : corpus.articles()) {
    if (!article.concepts.empty()) ++counts[article.concepts.size()];
  }
  if (counts.empty()) {
    throw InputError("every article is empty; no block sizes to histogram");
  }
  return BlockSizeDistribution::from_counts(counts);
}

}  // namespace conceptgraph
