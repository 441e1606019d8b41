#pragma once

// Reference implementations straight from the definitions, O(N^3) and
// independent of the optimized code paths. Only the graph's link list is
// read from the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "conceptgraph/graph.hpp"

namespace oracle {

struct Dense {
  std::size_t n = 0;
  std::vector<std::vector<bool>> adj;

  explicit Dense(const conceptgraph::UndirectedGraph& graph)
      : n(graph.node_count()), adj(n, std::vector<bool>(n, false)) {
    for (const auto& [u, v] : graph.links()) {
      adj[u][v] = true;
      adj[v][u] = true;
    }
  }

  std::size_t degree(std::size_t i) const {
    std::size_t k = 0;
    for (std::size_t j = 0; j < n; ++j) k += adj[i][j] ? 1 : 0;
    return k;
  }

  std::size_t links() const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) count += adj[i][j] ? 1 : 0;
    return count;
  }
};

inline double density(const Dense& g) {
  return 2.0 * static_cast<double>(g.links()) /
         (static_cast<double>(g.n) * static_cast<double>(g.n - 1));
}

inline double mean_degree(const Dense& g) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < g.n; ++i) sum += g.degree(i);
  return static_cast<double>(sum) / static_cast<double>(g.n);
}

// N^2 var = (1/2) sum_i sum_j (k_i - k_j)^2, an integer.
inline double degree_std(const Dense& g) {
  std::uint64_t twice = 0;
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = 0; j < g.n; ++j) {
      const auto a = static_cast<std::int64_t>(g.degree(i));
      const auto b = static_cast<std::int64_t>(g.degree(j));
      twice += static_cast<std::uint64_t>((a - b) * (a - b));
    }
  }
  return std::sqrt(static_cast<double>(twice / 2)) / static_cast<double>(g.n);
}

inline std::size_t max_degree(const Dense& g) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < g.n; ++i) best = std::max(best, g.degree(i));
  return best;
}

// Pearson correlation over the list of ordered endpoint pairs, two-pass.
inline std::optional<double> assortativity(const Dense& g) {
  std::vector<std::pair<double, double>> pairs;
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = 0; j < g.n; ++j)
      if (g.adj[i][j]) {
        pairs.emplace_back(static_cast<double>(g.degree(i)),
                           static_cast<double>(g.degree(j)));
      }
  if (pairs.empty()) return std::nullopt;
  bool constant = true;
  for (const auto& p : pairs) constant = constant && p.first == pairs[0].first;
  if (constant) return std::nullopt;
  long double mx = 0, my = 0;
  for (const auto& [x, y] : pairs) {
    mx += x;
    my += y;
  }
  mx /= pairs.size();
  my /= pairs.size();
  long double sxy = 0, sxx = 0, syy = 0;
  for (const auto& [x, y] : pairs) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
    syy += (y - my) * (y - my);
  }
  return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

inline std::size_t neighbor_links(const Dense& g, std::size_t i) {
  std::size_t m = 0;
  for (std::size_t a = 0; a < g.n; ++a)
    for (std::size_t b = a + 1; b < g.n; ++b)
      if (g.adj[i][a] && g.adj[i][b] && g.adj[a][b]) ++m;
  return m;
}

inline double local_clustering(const Dense& g, std::size_t i) {
  const std::size_t k = g.degree(i);
  if (k <= 1) return 0.0;
  return 2.0 * static_cast<double>(neighbor_links(g, i)) /
         (static_cast<double>(k) * static_cast<double>(k - 1));
}

inline double average_clustering(const Dense& g) {
  double sum = 0.0;
  for (std::size_t i = 0; i < g.n; ++i) sum += local_clustering(g, i);
  return sum / static_cast<double>(g.n);
}

inline std::uint64_t triangles(const Dense& g) {
  std::uint64_t count = 0;
  for (std::size_t a = 0; a < g.n; ++a)
    for (std::size_t b = a + 1; b < g.n; ++b)
      for (std::size_t c = b + 1; c < g.n; ++c)
        if (g.adj[a][b] && g.adj[b][c] && g.adj[a][c]) ++count;
  return count;
}

inline std::optional<double> transitivity(const Dense& g) {
  std::uint64_t triplets = 0;
  for (std::size_t i = 0; i < g.n; ++i) {
    const std::uint64_t k = g.degree(i);
    if (k >= 2) triplets += k * (k - 1) / 2;
  }
  if (triplets == 0) return std::nullopt;
  return 3.0 * static_cast<double>(triangles(g)) /
         static_cast<double>(triplets);
}

// Reachability closure (Warshall), then group sizes, descending.
inline std::vector<std::size_t> component_sizes(const Dense& g) {
  auto reach = g.adj;
  for (std::size_t i = 0; i < g.n; ++i) reach[i][i] = true;
  for (std::size_t k = 0; k < g.n; ++k)
    for (std::size_t i = 0; i < g.n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < g.n; ++j)
          if (reach[k][j]) reach[i][j] = true;
  std::vector<bool> seen(g.n, false);
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < g.n; ++i) {
    if (seen[i]) continue;
    std::size_t size = 0;
    for (std::size_t j = 0; j < g.n; ++j) {
      if (reach[i][j]) {
        seen[j] = true;
        ++size;
      }
    }
    sizes.push_back(size);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

// Co-occurrence projection from the definition: a pair is linked iff some
// article lists both.
inline std::set<std::pair<std::uint32_t, std::uint32_t>> projection_links(
    const std::vector<std::vector<std::uint32_t>>& articles) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> links;
  for (const auto& article : articles)
    for (std::uint32_t a : article)
      for (std::uint32_t b : article)
        if (a < b) links.emplace(a, b);
  return links;
}

}  // namespace oracle
