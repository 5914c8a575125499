#include <coldsp/errors.hpp>
#include <coldsp/ilp.hpp>
#include <coldsp/io.hpp>

#include "fixtures.hpp"
#include "naive.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace coldsp;

namespace {

std::size_t rows_named(const IlpModel& m, std::string_view prefix) {
  return static_cast<std::size_t>(std::count_if(m.constraints.begin(), m.constraints.end(),
                                                [&](const LinearConstraint& c) { return c.name.starts_with(prefix); }));
}

}  // namespace

TEST_CASE("triangle model has eight rows") {
  const auto g = parse_edge_list("a b 1\nb c 1\na c 1\n");
  const auto m = build_ilp(g, 2, 3);
  CHECK(m.objective.size() == 3);
  CHECK(m.binaries.size() == 3);
  CHECK(m.bounds.size() == 3);
  CHECK(m.constraints.size() == 8);
  CHECK(rows_named(m, "edges") == 1);
  CHECK(rows_named(m, "nodes") == 1);
  CHECK(rows_named(m, "cpl_") == 6);
  CHECK(m.objective.front().coef == doctest::Approx(1.0 / 3));
  CHECK(m.objective.front().var == "x_a_b");
  CHECK(m.binaries.front() == "y_a");
}

TEST_CASE("colored model adds one row per color") {
  const auto g = fixtures::triangle_112();
  const ColorRequirement req{{1, 1}, RequirementMode::AtLeast};
  const auto m = build_ilp(g, req, 3);
  CHECK(m.constraints.size() == 10);
  CHECK(rows_named(m, "color_") == 2);
  CHECK(ilp_edge_requirement(g, req) == 2);
  CHECK(ilp_edge_requirement(g, {{2, 1}, RequirementMode::AtLeast}) == 3);
}

TEST_CASE("coupling rows bound x by both endpoints") {
  const auto g = fixtures::path_abc();
  const auto m = build_ilp(g, 1, 2);
  const auto it = std::find_if(m.constraints.begin(), m.constraints.end(),
                               [](const LinearConstraint& c) { return c.name == "cpl_b_c_v"; });
  REQUIRE(it != m.constraints.end());
  CHECK(it->sense == Sense::LessEqual);
  CHECK(it->rhs == 0.0);
  CHECK(it->terms == std::vector<LinearTerm>{{"x_b_c", 1.0}, {"y_c", -1.0}});
}

TEST_CASE("k range") {
  const auto g = fixtures::k4_plus_pendant();
  CHECK(ilp_k_range(g, 6) == std::pair<std::int64_t, std::int64_t>{4, 5});
  CHECK_THROWS_AS(build_ilp(g, 6, 3), std::out_of_range);
  CHECK_THROWS_AS(build_ilp(g, 6, 6), std::out_of_range);
  CHECK_NOTHROW(build_ilp(g, 6, 4));
}

TEST_CASE("LP text round trip") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = naive::random_graph(seed, 9, 20, 3, 2);
    const auto [lo, hi] = ilp_k_range(g, 5);
    for (std::int64_t k = lo; k <= hi; ++k) {
      const auto m = build_ilp(g, 5, k, "inst");
      const auto text = write_lp(m);
      CHECK(parse_lp(text) == m);
    }
    const ColorRequirement req{{1, 2, 0}, RequirementMode::AtLeast};
    const auto colored = build_ilp(g, req, 6, "colored");
    CHECK(parse_lp(write_lp(colored)) == colored);
  }
}

TEST_CASE("LP text keeps lines short") {
  const auto g = naive::random_graph(9, 40, 200, 2);
  const auto text = write_lp(build_ilp(g, 10, 20, "wide"));
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) CHECK(line.size() <= 255);
  CHECK(parse_lp(text) == build_ilp(g, 10, 20, "wide"));
}

TEST_CASE("LP text layout") {
  const auto g = parse_edge_list("a b 1\n");
  const auto text = write_lp(build_ilp(g, 1, 2, "tiny"));
  CHECK(text ==
        "\\ coldsp model tiny k=2\n"
        "Maximize\n"
        " obj: 0.5 x_a_b\n"
        "Subject To\n"
        " edges: x_a_b >= 1\n"
        " nodes: y_a + y_b = 2\n"
        " cpl_a_b_u: x_a_b - y_a <= 0\n"
        " cpl_a_b_v: x_a_b - y_b <= 0\n"
        "Bounds\n"
        " 0 <= x_a_b <= 1\n"
        "Binaries\n"
        " y_a y_b\n"
        "End\n");
}

TEST_CASE("labels outside the identifier alphabet fall back to indices") {
  const auto g = parse_edge_list("a-1 b:2 red\n");
  const auto m = build_ilp(g, 1, 2);
  CHECK(m.objective.front().var == "x_n0_n1");
}

TEST_CASE("parser errors") {
  CHECK_THROWS_AS(parse_lp("Maximize\n obj: x\nSubject To\n r: x <=\nEnd\n"), ParseError);
  CHECK_THROWS_AS(parse_lp("Maximize\n obj: x\n"), ParseError);
  CHECK_THROWS_AS(parse_lp("x + y\nEnd\n"), ParseError);
  CHECK_THROWS_AS(parse_lp("Maximize\n obj: x\nSubject To\n r: x y\nEnd\n"), ParseError);
}

TEST_CASE("export writes one file per k") {
  const auto dir = std::filesystem::temp_directory_path() / "coldsp_ilp_test";
  std::filesystem::remove_all(dir);
  const auto g = fixtures::k4_plus_pendant();
  const auto paths = export_ilp(g, 6, dir, "k4p");
  REQUIRE(paths.size() == 2);
  CHECK(paths[0].filename() == "k4p_k4.lp");
  CHECK(paths[1].filename() == "k4p_k5.lp");
  std::ifstream in(paths[0]);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(parse_lp(buf.str()) == build_ilp(g, 6, 4, "k4p_k4"));
  std::filesystem::remove_all(dir);
}
