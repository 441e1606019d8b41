#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

namespace conceptgraph {

/// Dense node index, 0..N-1.
using NodeId = std::uint32_t;

/// Simple (loop-free, unweighted, no multi-links) undirected graph.
///
/// Nodes must be registered before they are linked. Link existence is
/// answered from a packed bit matrix while N stays below kDenseNodeLimit
/// (at N = 11853 the matrix is ~17 MiB regardless of density); larger graphs
/// fall back to a hash set of packed node pairs. Neighbor lists are kept in
/// insertion order alongside the index.
///
/// Mutation is single-writer. A fully built graph may be read from any
/// number of threads.
class UndirectedGraph {
 public:
  static constexpr std::size_t kDenseNodeLimit = std::size_t{1} << 16;

  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t node_count) { add_nodes(node_count); }

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t link_count() const noexcept { return link_count_; }
  bool uses_bit_matrix() const noexcept { return !sparse_; }

  /// Registers one node and returns its id.
  NodeId add_node();
  void add_nodes(std::size_t count);

  /// Returns true when the link did not exist before.
  /// Throws InputError on unknown nodes or u == v.
  bool add_link(NodeId u, NodeId v);

  /// Links every unordered pair of `nodes`; returns the number of links that
  /// did not exist before. Throws InputError (before mutating anything) on
  /// unknown or repeated ids.
  std::size_t add_clique(std::span<const NodeId> nodes);

  bool has_link(NodeId u, NodeId v) const;

  std::size_t degree(NodeId node) const;
  std::span<const NodeId> neighbors(NodeId node) const;

  /// |N(u) ∩ N(v)|; for an existing link this is the number of triangles
  /// through it.
  std::size_t common_neighbor_count(NodeId u, NodeId v) const;

  /// Number of linked pairs inside the neighbor set of `node` (m_i).
  std::size_t links_among_neighbors(NodeId node) const;

  /// Components ordered by their smallest node; nodes ascending inside each.
  std::vector<std::vector<NodeId>> connected_components() const;

  /// All links as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<NodeId, NodeId>> links() const;

  /// Same node count and same link set.
  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b);

 private:
  void check_node(NodeId node) const;
  bool insert_link(NodeId u, NodeId v);
  void grow_index(std::size_t node_count);
  void migrate_to_sparse();

  static std::uint64_t pair_key(NodeId u, NodeId v) noexcept {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }

  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t link_count_ = 0;

  // Bit-matrix index: row u starts at bits_[u * stride_].
  std::vector<std::uint64_t> bits_;
  std::size_t stride_ = 0;
  std::size_t capacity_ = 0;

  bool sparse_ = false;
  std::unordered_set<std::uint64_t> link_keys_;
};

}  // namespace conceptgraph
