#pragma once

#include <coldsp/graph.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coldsp {

struct LinearTerm {
  std::string var;
  double coef = 1.0;

  bool operator==(const LinearTerm&) const = default;
};

enum class Sense { LessEqual, GreaterEqual, Equal };

struct LinearConstraint {
  std::string name;
  std::vector<LinearTerm> terms;
  Sense sense = Sense::LessEqual;
  double rhs = 0.0;

  bool operator==(const LinearConstraint&) const = default;
};

struct VariableBound {
  std::string var;
  double lower = 0.0;
  double upper = 1.0;

  bool operator==(const VariableBound&) const = default;
};

/// Maximization model for one guessed node count k:
///   max sum x_uv / k  s.t.  sum x_uv >= h, sum y_u = k, [sum_{E_c} x_uv >= h_c],
///   x_uv <= y_u, x_uv <= y_v, 0 <= x_uv <= 1, y_u binary.
struct IlpModel {
  std::string name;
  std::int64_t k = 0;
  std::vector<LinearTerm> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<VariableBound> bounds;
  std::vector<std::string> binaries;

  bool operator==(const IlpModel&) const = default;
};

/// Valid k for edge requirement h: [lower_bound_nodes(h), n] (from 1 when h = 0).
std::pair<std::int64_t, std::int64_t> ilp_k_range(const EdgeColoredGraph& g, std::int64_t h);
/// Edge requirement row used by the colored model: max(max_c h_c, ceil(sum h_c / max colors per edge)).
std::int64_t ilp_edge_requirement(const EdgeColoredGraph& g, const ColorRequirement& req);

/// Throw std::out_of_range for k outside ilp_k_range.
IlpModel build_ilp(const EdgeColoredGraph& g, std::int64_t h, std::int64_t k, std::string name = "model");
/// Colored model; adds one row per color. Only AtLeast requirements are accepted.
IlpModel build_ilp(const EdgeColoredGraph& g, const ColorRequirement& req, std::int64_t k,
                   std::string name = "model");

/// CPLEX LP text. Rows are wrapped so that no line exceeds 255 characters.
std::string write_lp(const IlpModel& model);
/// Parses the subset of the LP format produced by write_lp; throws ParseError.
IlpModel parse_lp(std::string_view text);

/// Writes `<instance>_k<k>.lp` into `dir` for every k in range; returns the paths in k order.
std::vector<std::filesystem::path> export_ilp(const EdgeColoredGraph& g, const ColorRequirement& req,
                                              const std::filesystem::path& dir, std::string_view instance);
std::vector<std::filesystem::path> export_ilp(const EdgeColoredGraph& g, std::int64_t h,
                                              const std::filesystem::path& dir, std::string_view instance);

}  // namespace coldsp
