#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>
#include <vector>

#include "conceptgraph/block_growth.hpp"
#include "conceptgraph/error.hpp"
#include "oracles/brute_force.hpp"

using namespace conceptgraph;

namespace {

bool within_3_sigma(std::size_t hits, std::size_t draws, double p) {
  const double expected = static_cast<double>(draws) * p;
  const double sd = std::sqrt(static_cast<double>(draws) * p * (1.0 - p));
  return std::abs(static_cast<double>(hits) - expected) <= 3.0 * sd;
}

std::set<std::pair<NodeId, NodeId>> link_set(const UndirectedGraph& g) {
  const auto links = g.links();
  return {links.begin(), links.end()};
}

}  // namespace

TEST_CASE("selection names") {
  CHECK(parse_selection("usp") == Selection::uniform);
  CHECK(parse_selection("preferential") == Selection::preferential);
  CHECK(to_string(Selection::uniform) == "usp");
  CHECK_THROWS_AS(parse_selection("random"), ConfigError);
}

TEST_CASE("config validation") {
  ModelConfig config;
  config.nu = 1.5;
  CHECK_THROWS_AS(config.validate(), ConfigError);
  config.nu = 0.5;
  config.articles = 0;
  CHECK_THROWS_AS(config.validate(), ConfigError);
}

TEST_CASE("preferential selection is proportional to occurrence counts") {
  const std::vector<std::uint64_t> counts{3, 1, 1, 1};
  auto state = GrowthState::with_counts(Selection::preferential, counts);
  Rng rng(101);
  const std::size_t draws = 100000;
  std::vector<std::size_t> hits(4, 0);
  for (std::size_t i = 0; i < draws; ++i) {
    ++hits[state.select_concepts(1, 0.0, rng).concepts[0]];
  }
  CHECK(within_3_sigma(hits[0], draws, 0.5));
  for (int j = 1; j < 4; ++j) CHECK(within_3_sigma(hits[j], draws, 1.0 / 6));
}

TEST_CASE("uniform selection ignores occurrence counts") {
  const std::vector<std::uint64_t> counts{3, 1, 1, 1};
  auto state = GrowthState::with_counts(Selection::uniform, counts);
  Rng rng(202);
  const std::size_t draws = 100000;
  std::vector<std::size_t> hits(4, 0);
  for (std::size_t i = 0; i < draws; ++i) {
    ++hits[state.select_concepts(1, 0.0, rng).concepts[0]];
  }
  for (int j = 0; j < 4; ++j) CHECK(within_3_sigma(hits[j], draws, 0.25));
}

TEST_CASE("second slot excludes the first pick and renormalizes") {
  // P(first = 0, second = 1) = (3/6) * (1/3) = 1/6;
  // P(first = 1, second = 0) = (1/6) * (3/5) = 1/10.
  const std::vector<std::uint64_t> counts{3, 1, 1, 1};
  auto state = GrowthState::with_counts(Selection::preferential, counts);
  Rng rng(303);
  const std::size_t draws = 100000;
  std::size_t zero_one = 0, one_zero = 0;
  for (std::size_t i = 0; i < draws; ++i) {
    const auto block = state.select_concepts(2, 0.0, rng);
    REQUIRE(block.concepts[0] != block.concepts[1]);
    zero_one += block.concepts[0] == 0 && block.concepts[1] == 1;
    one_zero += block.concepts[0] == 1 && block.concepts[1] == 0;
  }
  CHECK(within_3_sigma(zero_one, draws, 1.0 / 6));
  CHECK(within_3_sigma(one_zero, draws, 1.0 / 10));
}

TEST_CASE("novel slots occur at rate nu") {
  std::vector<std::uint64_t> counts(1000, 1);
  auto state = GrowthState::with_counts(Selection::preferential, counts);
  Rng rng(404);
  const double nu = 0.3;
  std::size_t novel = 0, slots = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto block = state.select_concepts(100, nu, rng);
    novel += block.novel;
    slots += 100;
  }
  CHECK(slots == 100000);
  CHECK(within_3_sigma(novel, slots, nu));
}

TEST_CASE("selection leaves the state unchanged until commit") {
  const std::vector<std::uint64_t> counts{2, 5};
  auto state = GrowthState::with_counts(Selection::preferential, counts);
  Rng rng(1);
  const auto block = state.select_concepts(5, 0.0, rng);
  // Two existing concepts, then the pool is empty: three forced novel slots.
  CHECK(block.novel == 3);
  CHECK(block.concepts.size() == 5);
  CHECK(state.concept_count() == 2);
  CHECK(state.total_occurrences() == 7);
  const std::set<ConceptId> ids(block.concepts.begin(), block.concepts.end());
  CHECK(ids == std::set<ConceptId>{0, 1, 2, 3, 4});

  state.commit(block);
  CHECK(state.concept_count() == 5);
  CHECK(state.occurrences(0) == 3);
  CHECK(state.occurrences(1) == 6);
  CHECK(state.occurrences(4) == 1);
  CHECK(state.total_occurrences() == 12);
  CHECK(state.completed_articles() == 1);
}

TEST_CASE("first article is entirely novel") {
  GrowthState state(Selection::uniform);
  Rng rng(9);
  const auto block = state.select_concepts(37, 0.0, rng);
  CHECK(block.novel == 37);
}

TEST_CASE("nu = 1 gives one concept per slot") {
  ModelConfig config;
  config.articles = 10;
  config.nu = 1.0;
  config.block_sizes = BlockSizeDistribution::fixed(37);
  const auto corpus = generate_corpus(config);
  CHECK(corpus.concept_count == 370);
  CHECK(corpus.novel_slots == 370);
  const auto grown = generate_network(config);
  CHECK(grown.graph.node_count() == 370);
  CHECK(grown.graph.link_count() == 10 * 37 * 36 / 2);
}

TEST_CASE("nu = 0 reuses the first article forever") {
  ModelConfig config;
  config.articles = 50;
  config.nu = 0.0;
  config.block_sizes = BlockSizeDistribution::fixed(5);
  const auto corpus = generate_corpus(config);
  CHECK(corpus.concept_count == 5);
  for (const auto& article : corpus.articles) {
    CHECK(std::set<ConceptId>(article.begin(), article.end()).size() == 5);
  }
}

TEST_CASE("mean concept count follows n + nu n (T - 1)") {
  ModelConfig config;
  config.articles = 200;
  config.nu = 0.05;
  config.block_sizes = BlockSizeDistribution::fixed(10);
  const int runs = 100;
  double sum = 0.0;
  for (int r = 0; r < runs; ++r) {
    config.seed = derive_seed(12, r);
    sum += static_cast<double>(generate_corpus(config).concept_count);
  }
  const double expected = 10 + 0.05 * 10 * 199;
  const double se = std::sqrt(10 * 199 * 0.05 * 0.95 / runs);
  CHECK(std::abs(sum / runs - expected) < 4 * se);
}

TEST_CASE("generation is deterministic in the seed") {
  ModelConfig config;
  config.articles = 300;
  config.nu = 0.05;
  config.block_sizes = BlockSizeDistribution::lognormal(8, 0.5);
  config.seed = 42;
  const auto a = generate_network(config);
  const auto b = generate_network(config);
  CHECK(a.graph == b.graph);
  CHECK(a.corpus.articles == b.corpus.articles);
  CHECK(generate_corpus(config).articles == a.corpus.articles);
  config.seed = 43;
  CHECK_FALSE(generate_corpus(config).articles == a.corpus.articles);
}

TEST_CASE("generated graph equals the projection of its exported corpus") {
  Rng pick(555);
  for (int trial = 0; trial < 20; ++trial) {
    ModelConfig config;
    config.articles = 1 + pick.uniform_below(50);
    config.nu = pick.uniform01();
    config.selection = pick.bernoulli(0.5) ? Selection::uniform
                                           : Selection::preferential;
    config.block_sizes = BlockSizeDistribution::fixed(1 + pick.uniform_below(8));
    config.seed = pick.next();
    const auto grown = generate_network(config);

    std::ostringstream out;
    write_generated_corpus(out, grown.corpus);
    std::istringstream in(out.str());
    const auto parsed = parse_corpus(in);
    const auto projected = project_concepts(build_bipartite(parsed.corpus));
    CHECK(projected == grown.graph);
    CHECK(link_set(grown.graph) == oracle::projection_links(grown.corpus.articles));
    CHECK(project_concepts(build_bipartite(grown.corpus)) == grown.graph);
  }
}

TEST_CASE("preferential runs concentrate occurrences more than uniform") {
  ModelConfig config;
  config.articles = 2000;
  config.nu = 0.02;
  config.block_sizes = BlockSizeDistribution::fixed(10);
  config.seed = 8;
  config.selection = Selection::preferential;
  const auto psp = generate_network(config);
  config.selection = Selection::uniform;
  const auto usp = generate_network(config);
  std::size_t psp_max = 0, usp_max = 0;
  for (NodeId v = 0; v < psp.graph.node_count(); ++v)
    psp_max = std::max(psp_max, psp.graph.degree(v));
  for (NodeId v = 0; v < usp.graph.node_count(); ++v)
    usp_max = std::max(usp_max, usp.graph.degree(v));
  CHECK(psp_max > usp_max);
}
