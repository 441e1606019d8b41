#include "conceptgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "conceptgraph/error.hpp"

namespace conceptgraph {

NodeId UndirectedGraph::add_node() {
  add_nodes(1);
  return static_cast<NodeId>(node_count() - 1);
}

void UndirectedGraph::add_nodes(std::size_t count) {
  if (count == 0) return;
  const std::size_t target = node_count() + count;
  if (target > std::size_t{0xFFFFFFFF}) {
    throw InputError("node count exceeds the 32-bit id space");
  }
  grow_index(target);
  adjacency_.resize(target);
}

void UndirectedGraph::grow_index(std::size_t node_count) {
  if (sparse_ || node_count <= capacity_) return;
  if (node_count > kDenseNodeLimit) {
    migrate_to_sparse();
    return;
  }
  const std::size_t capacity =
      std::max<std::size_t>(64, std::bit_ceil(node_count));
  const std::size_t stride = capacity / 64;
  std::vector<std::uint64_t> bits(capacity * stride, 0);
  for (std::size_t row = 0; row < capacity_; ++row) {
    std::copy_n(bits_.begin() + static_cast<std::ptrdiff_t>(row * stride_),
                stride_,
                bits.begin() + static_cast<std::ptrdiff_t>(row * stride));
  }
  bits_ = std::move(bits);
  stride_ = stride;
  capacity_ = capacity;
}

void UndirectedGraph::migrate_to_sparse() {
  link_keys_.reserve(link_count_ * 2);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) link_keys_.insert(pair_key(static_cast<NodeId>(u), v));
    }
  }
  bits_.clear();
  bits_.shrink_to_fit();
  stride_ = capacity_ = 0;
  sparse_ = true;
}

void UndirectedGraph::check_node(NodeId node) const {
  if (node >= node_count()) {
    throw InputError("unknown node " + std::to_string(node) + " (graph has " +
                     std::to_string(node_count()) + " nodes)");
  }
}

bool UndirectedGraph::has_link(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  if (u == v) return false;
  if (sparse_) return link_keys_.contains(pair_key(u, v));
  return (bits_[u * stride_ + v / 64] >> (v % 64)) & 1U;
}

bool UndirectedGraph::insert_link(NodeId u, NodeId v) {
  if (sparse_) {
    if (!link_keys_.insert(pair_key(u, v)).second) return false;
  } else {
    std::uint64_t& word = bits_[u * stride_ + v / 64];
    const std::uint64_t mask = std::uint64_t{1} << (v % 64);
    if (word & mask) return false;
    word |= mask;
    bits_[v * stride_ + u / 64] |= std::uint64_t{1} << (u % 64);
  }
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  ++link_count_;
  return true;
}

bool UndirectedGraph::add_link(NodeId u, NodeId v) {
  check_node(u);
  check_node(v);
  if (u == v) throw InputError("self-loop on node " + std::to_string(u));
  return insert_link(u, v);
}

std::size_t UndirectedGraph::add_clique(std::span<const NodeId> nodes) {
  if (nodes.size() < 2) {
    for (NodeId node : nodes) check_node(node);
    return 0;
  }
  std::vector<NodeId> sorted(nodes.begin(), nodes.end());
  std::sort(sorted.begin(), sorted.end());
  check_node(sorted.back());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("clique lists a node more than once");
  }
  std::size_t created = 0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      created += insert_link(nodes[i], nodes[j]) ? 1 : 0;
    }
  }
  return created;
}

std::size_t UndirectedGraph::degree(NodeId node) const {
  check_node(node);
  return adjacency_[node].size();
}

std::span<const NodeId> UndirectedGraph::neighbors(NodeId node) const {
  check_node(node);
  return adjacency_[node];
}

std::size_t UndirectedGraph::common_neighbor_count(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  if (sparse_) {
    const auto& small = adjacency_[u].size() <= adjacency_[v].size()
                            ? adjacency_[u]
                            : adjacency_[v];
    const NodeId other = &small == &adjacency_[u] ? v : u;
    std::size_t count = 0;
    for (NodeId w : small) {
      if (w != other && link_keys_.contains(pair_key(other, w))) ++count;
    }
    return count;
  }
  const std::size_t words = (node_count() + 63) / 64;
  const std::uint64_t* row_u = bits_.data() + u * stride_;
  const std::uint64_t* row_v = bits_.data() + v * stride_;
  std::size_t count = 0;
  for (std::size_t w = 0; w < words; ++w) {
    count += static_cast<std::size_t>(std::popcount(row_u[w] & row_v[w]));
  }
  return count;
}

std::size_t UndirectedGraph::links_among_neighbors(NodeId node) const {
  check_node(node);
  std::size_t twice = 0;
  for (NodeId neighbor : adjacency_[node]) {
    twice += common_neighbor_count(node, neighbor);
  }
  return twice / 2;
}

std::vector<std::vector<NodeId>> UndirectedGraph::connected_components() const {
  const std::size_t n = node_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<NodeId>> components;
  std::vector<NodeId> frontier;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<NodeId> component{static_cast<NodeId>(start)};
    seen[start] = true;
    frontier.assign(1, static_cast<NodeId>(start));
    while (!frontier.empty()) {
      const NodeId u = frontier.back();
      frontier.pop_back();
      for (NodeId v : adjacency_[u]) {
        if (!seen[v]) {
          seen[v] = true;
          component.push_back(v);
          frontier.push_back(v);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

std::vector<std::pair<NodeId, NodeId>> UndirectedGraph::links() const {
  std::vector<std::pair<NodeId, NodeId>> result;
  result.reserve(link_count_);
  std::vector<NodeId> row;
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    row.clear();
    for (NodeId v : adjacency_[u]) {
      if (v > u) row.push_back(v);
    }
    std::sort(row.begin(), row.end());
    for (NodeId v : row) result.emplace_back(static_cast<NodeId>(u), v);
  }
  return result;
}

bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
  if (a.node_count() != b.node_count() || a.link_count() != b.link_count()) {
    return false;
  }
  for (std::size_t u = 0; u < a.adjacency_.size(); ++u) {
    if (a.adjacency_[u].size() != b.adjacency_[u].size()) return false;
    for (NodeId v : a.adjacency_[u]) {
      if (!b.has_link(static_cast<NodeId>(u), v)) return false;
    }
  }
  return true;
}

}  // namespace conceptgraph
