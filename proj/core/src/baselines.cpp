#include "conceptgraph/baselines.hpp"

#include <string>
#include <vector>

#include "conceptgraph/error.hpp"
#include "conceptgraph/rng.hpp"
#include "conceptgraph/weighted_sampler.hpp"

namespace conceptgraph {

namespace {

std::pair<NodeId, NodeId> random_pair(Rng& rng, std::size_t n) {
  for (;;) {
    const auto u = static_cast<NodeId>(rng.uniform_below(n));
    const auto v = static_cast<NodeId>(rng.uniform_below(n));
    if (u != v) return {u, v};
  }
}

}  // namespace

UndirectedGraph erdos_renyi(const ErConfig& config) {
  const std::size_t n = config.nodes;
  const std::size_t max_links = n < 2 ? 0 : n * (n - 1) / 2;
  if (config.links > max_links) {
    throw ConfigError("ER: " + std::to_string(config.links) +
                      " links requested but only " + std::to_string(max_links) +
                      " pairs exist for N=" + std::to_string(n));
  }
  Rng rng(config.seed);
  UndirectedGraph graph(n);
  if (config.links * 2 <= max_links) {
    while (graph.link_count() < config.links) {
      const auto [u, v] = random_pair(rng, n);
      graph.add_link(u, v);
    }
    return graph;
  }

  // Dense case: choose the absent pairs uniformly, then add the complement.
  UndirectedGraph missing(n);
  while (missing.link_count() < max_links - config.links) {
    const auto [u, v] = random_pair(rng, n);
    missing.add_link(u, v);
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const auto a = static_cast<NodeId>(u);
      const auto b = static_cast<NodeId>(v);
      if (!missing.has_link(a, b)) graph.add_link(a, b);
    }
  }
  return graph;
}

UndirectedGraph barabasi_albert(const BaConfig& config) {
  const std::size_t m0 = config.initial_nodes;
  const std::size_t m = config.links_per_step;
  if (m == 0 || m > m0) {
    throw ConfigError("BA: need 1 <= m <= m0 (m=" + std::to_string(m) +
                      ", m0=" + std::to_string(m0) + ")");
  }
  if (config.steps == 0) throw ConfigError("BA: steps must be >= 1");

  const std::size_t final_nodes = m0 + config.steps;
  Rng rng(config.seed);
  UndirectedGraph graph(final_nodes);
  WeightedSampler by_degree(final_nodes);
  std::vector<NodeId> targets;
  targets.reserve(m);

  for (std::size_t step = 0; step < config.steps; ++step) {
    const std::size_t existing = m0 + step;
    const auto arriving = static_cast<NodeId>(existing);
    targets.clear();

    if (by_degree.total() == 0) {
      // Cold start: partial Fisher-Yates over the existing nodes.
      std::vector<NodeId> pool(existing);
      for (std::size_t i = 0; i < existing; ++i) {
        pool[i] = static_cast<NodeId>(i);
      }
      for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = i + rng.uniform_below(existing - i);
        std::swap(pool[i], pool[j]);
        targets.push_back(pool[i]);
      }
    } else {
      for (std::size_t i = 0; i < m; ++i) {
        if (by_degree.total() == 0) {
          throw ConfigError("BA: fewer than m nodes with positive degree");
        }
        const auto target = static_cast<NodeId>(by_degree.sample(rng));
        targets.push_back(target);
        by_degree.set(target, 0);
      }
    }

    for (NodeId target : targets) {
      graph.add_link(arriving, target);
      by_degree.set(target, graph.degree(target));
    }
    by_degree.set(arriving, graph.degree(arriving));
  }
  return graph;
}

}  // namespace conceptgraph
