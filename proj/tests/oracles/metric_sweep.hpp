#pragma once

// Compares full_report against the brute-force oracle on every graph with
// 2..5 nodes and on random graphs with up to 7 nodes.

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include "conceptgraph/metrics.hpp"
#include "oracles/brute_force.hpp"

namespace oracle {

struct SweepOutcome {
  std::size_t graphs = 0;
  std::size_t mismatches = 0;
  std::string first_failure;
};

inline std::string describe(const conceptgraph::UndirectedGraph& graph) {
  std::ostringstream out;
  out << "N=" << graph.node_count() << " links:";
  for (const auto& [u, v] : graph.links()) out << ' ' << u << '-' << v;
  return out.str();
}

inline bool optional_close(const std::optional<double>& a,
                           const std::optional<double>& b, double tolerance) {
  if (a.has_value() != b.has_value()) return false;
  return !a || std::abs(*a - *b) <= tolerance;
}

/// Empty string when the optimized report matches the oracle: exact for
/// everything except assortativity (1e-12).
inline std::string compare_with_oracle(
    const conceptgraph::UndirectedGraph& graph) {
  const auto report = conceptgraph::full_report(graph);
  const Dense dense(graph);
  std::string failures;
  auto check = [&](bool ok, const char* what) {
    if (!ok) failures += std::string(what) + " ";
  };
  check(report.node_count == dense.n, "N");
  check(report.link_count == dense.links(), "L");
  check(report.density == density(dense), "rho");
  check(report.mean_degree == mean_degree(dense), "mean_k");
  check(report.degree_std == degree_std(dense), "sigma");
  check(report.max_degree == max_degree(dense), "k_max");
  check(optional_close(report.assortativity, assortativity(dense), 1e-12), "r");
  check(report.avg_clustering == average_clustering(dense), "avg_c");
  check(optional_close(report.transitivity, transitivity(dense), 0.0), "T");
  check(report.component_sizes == component_sizes(dense), "components");
  for (std::size_t i = 0; i < dense.n; ++i) {
    const auto node = static_cast<conceptgraph::NodeId>(i);
    if (conceptgraph::local_clustering(graph, node) !=
        local_clustering(dense, i)) {
      check(false, "c_i");
      break;
    }
  }
  return failures.empty() ? failures : failures + "on " + describe(graph);
}

inline SweepOutcome sweep_small_graphs(std::size_t random_graphs = 200,
                                       std::uint64_t seed = 20240601) {
  SweepOutcome outcome;
  auto record = [&](const conceptgraph::UndirectedGraph& graph) {
    ++outcome.graphs;
    const std::string failure = compare_with_oracle(graph);
    if (!failure.empty()) {
      if (outcome.mismatches == 0) outcome.first_failure = failure;
      ++outcome.mismatches;
    }
  };

  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size());
         ++mask) {
      conceptgraph::UndirectedGraph graph(n);
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        if (mask >> b & 1) graph.add_link(pairs[b].first, pairs[b].second);
      }
      record(graph);
    }
  }

  std::mt19937_64 engine(seed);
  for (std::size_t t = 0; t < random_graphs; ++t) {
    const std::size_t n = 2 + engine() % 6;  // 2..7
    const double p = static_cast<double>(engine() % 1001) / 1000.0;
    std::bernoulli_distribution coin(p);
    conceptgraph::UndirectedGraph graph(n);
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = u + 1; v < n; ++v)
        if (coin(engine)) graph.add_link(u, v);
    record(graph);
  }
  return outcome;
}

}  // namespace oracle
