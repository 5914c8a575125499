#include <coldsp/errors.hpp>
#include <coldsp/io.hpp>

#include <doctest.h>

#include <sstream>

using namespace coldsp;

TEST_CASE("parses the canonical format") {
  const auto g = parse_edge_list("# comment\n\na\tb  1,2\n  b c 3\n");
  CHECK(g.num_nodes() == 3);
  CHECK(g.num_edges() == 2);
  CHECK(g.num_colors() == 3);
}

TEST_CASE("reports line numbers on malformed input") {
  try {
    parse_edge_list("a b 1\nb c\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_edge_list("a b 1 extra\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("a b 1,,2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("a b ,\n"), ParseError);
}

TEST_CASE("rejects self-loops and empty input") {
  CHECK_THROWS_AS(parse_edge_list("a a 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("# only a comment\n"), ParseError);
}

TEST_CASE("single-character separator reads one color per line") {
  ParseOptions options;
  options.field_separator = ',';
  const auto g = parse_edge_list("a,b,1\na,b,2\nb,c,1\n", options);
  CHECK(g.num_edges() == 2);
  CHECK(g.num_memberships() == 3);
  CHECK_THROWS_AS(parse_edge_list("a,b\n", options), ParseError);
}

TEST_CASE("stream and string parsing agree") {
  const std::string text = "x y 1\ny z 2\nz x 1,2\n";
  std::istringstream in(text);
  CHECK(serialize_edge_list(parse_edge_list(in)) == serialize_edge_list(parse_edge_list(text)));
}

TEST_CASE("serialization sorts color tokens") {
  const auto g = parse_edge_list("a b z,m,a\n");
  CHECK(serialize_edge_list(g) == "a b a,m,z\n");
}

TEST_CASE("missing file") { CHECK_THROWS_AS(load_edge_list("/nonexistent/graph.txt"), ParseError); }
