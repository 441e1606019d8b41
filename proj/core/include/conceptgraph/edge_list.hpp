#pragma once

#include <filesystem>
#include <iosfwd>

#include "conceptgraph/graph.hpp"

namespace conceptgraph {

// Edge-list text format:
//   #nodes=N links=L
//   u<TAB>v        (one line per link, u < v, ascending)

void write_edge_list(std::ostream& out, const UndirectedGraph& graph);
void write_edge_list(const std::filesystem::path& path,
                     const UndirectedGraph& graph);

/// Throws ParseError (with line number) on malformed input, including a
/// header/body link-count mismatch.
UndirectedGraph read_edge_list(std::istream& in);
UndirectedGraph read_edge_list(const std::filesystem::path& path);

}  // namespace conceptgraph
