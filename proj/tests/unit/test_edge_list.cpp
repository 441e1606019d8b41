#include <doctest.h>

#include <sstream>

#include "conceptgraph/edge_list.hpp"
#include "conceptgraph/error.hpp"

using namespace conceptgraph;

namespace {

UndirectedGraph read(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

}  // namespace

TEST_CASE("edge list round trip is byte-stable") {
  UndirectedGraph g(5);
  g.add_link(4, 0);
  g.add_link(2, 1);
  g.add_link(0, 1);
  std::ostringstream first;
  write_edge_list(first, g);
  CHECK(first.str() == "#nodes=5 links=3\n0\t1\n0\t4\n1\t2\n");
  const UndirectedGraph back = read(first.str());
  CHECK(back == g);
  std::ostringstream second;
  write_edge_list(second, back);
  CHECK(second.str() == first.str());
}

TEST_CASE("isolated nodes survive through the header") {
  const UndirectedGraph g = read("#nodes=4 links=0\n");
  CHECK(g.node_count() == 4);
  CHECK(g.link_count() == 0);
}

TEST_CASE("malformed edge lists are parse errors with line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      read(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("nodes=3\n") == 1);
  CHECK(line_of("#nodes=3 links=1\n0 x\n") == 2);
  CHECK(line_of("#nodes=3 links=1\n1\t0\n") == 2);
  CHECK(line_of("#nodes=3 links=1\n0\t5\n") == 2);
  CHECK(line_of("#nodes=3 links=2\n0\t1\n0\t1\n") == 3);
  CHECK_THROWS_AS(read("#nodes=3 links=2\n0\t1\n"), ParseError);
}

TEST_CASE("missing file is an io error naming the path") {
  try {
    read_edge_list(std::filesystem::path("/nonexistent/graph.tsv"));
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(e.path() == "/nonexistent/graph.tsv");
  }
}
