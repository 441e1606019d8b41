#pragma once

#include <cstddef>
#include <cstdint>

#include "conceptgraph/graph.hpp"

namespace conceptgraph {

/// G(N, L): exactly L links, uniform over all N(N-1)/2 pairs.
struct ErConfig {
  std::size_t nodes = 0;
  std::size_t links = 0;
  std::uint64_t seed = 0;
};

/// Linear preferential attachment starting from `initial_nodes` isolated
/// nodes; each of `steps` arrivals links to `links_per_step` distinct
/// existing nodes.
struct BaConfig {
  std::size_t initial_nodes = 0;   // m0
  std::size_t links_per_step = 0;  // m, 1 <= m <= m0
  std::size_t steps = 0;
  std::uint64_t seed = 0;
};

/// Rejection-samples distinct pairs. Above half saturation it samples the
/// missing pairs instead and links the rest, which keeps the draw uniform.
/// Throws ConfigError when L exceeds N(N-1)/2.
UndirectedGraph erdos_renyi(const ErConfig& config);

/// Each target is drawn with probability proportional to its current degree
/// among the nodes not yet chosen in this step (exact sampling without
/// replacement). While every existing degree is zero, targets are drawn
/// uniformly instead. Throws ConfigError on m = 0, m > m0 or steps = 0.
UndirectedGraph barabasi_albert(const BaConfig& config);

}  // namespace conceptgraph
