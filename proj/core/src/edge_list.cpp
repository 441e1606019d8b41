#include "conceptgraph/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "conceptgraph/error.hpp"

namespace conceptgraph {

namespace {

bool parse_count(std::string_view text, std::size_t& value) {
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

void write_edge_list(std::ostream& out, const UndirectedGraph& graph) {
  out << "#nodes=" << graph.node_count() << " links=" << graph.link_count()
      << '\n';
  std::string line;
  for (const auto& [u, v] : graph.links()) {
    line.clear();
    line += std::to_string(u);
    line += '\t';
    line += std::to_string(v);
    line += '\n';
    out << line;
  }
}

void write_edge_list(const std::filesystem::path& path,
                     const UndirectedGraph& graph) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing", path.string());
  write_edge_list(out, graph);
  if (!out) throw IoError("write failed", path.string());
}

UndirectedGraph read_edge_list(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing edge-list header", 1);

  constexpr std::string_view nodes_tag = "#nodes=";
  constexpr std::string_view links_tag = " links=";
  const std::string_view header(line);
  const auto links_pos = header.find(links_tag);
  std::size_t node_count = 0;
  std::size_t link_count = 0;
  if (!header.starts_with(nodes_tag) || links_pos == std::string_view::npos ||
      !parse_count(header.substr(nodes_tag.size(),
                                 links_pos - nodes_tag.size()),
                   node_count) ||
      !parse_count(header.substr(links_pos + links_tag.size()), link_count)) {
    throw ParseError("expected header '#nodes=N links=L'", 1);
  }

  UndirectedGraph graph(node_count);
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const std::string_view text(line);
    const auto tab = text.find('\t');
    std::size_t u = 0;
    std::size_t v = 0;
    if (tab == std::string_view::npos || !parse_count(text.substr(0, tab), u) ||
        !parse_count(text.substr(tab + 1), v)) {
      throw ParseError("expected 'u<TAB>v'", line_number);
    }
    if (u >= v || v >= node_count) {
      throw ParseError("link must satisfy u < v < N", line_number);
    }
    if (!graph.add_link(static_cast<NodeId>(u), static_cast<NodeId>(v))) {
      throw ParseError("duplicate link", line_number);
    }
  }
  if (graph.link_count() != link_count) {
    throw ParseError("header announces " + std::to_string(link_count) +
                     " links but body has " +
                     std::to_string(graph.link_count()));
  }
  return graph;
}

UndirectedGraph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading", path.string());
  return read_edge_list(in);
}

}  // namespace conceptgraph
