#pragma once

#include <coldsp/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace coldsp {

/// Erdős–Rényi G(n, m) with uniformly drawn edge colors. Node labels are "0".."n-1",
/// color labels "1".."colors". With planted_nodes > 0, planted_edges of the m edges are
/// drawn among nodes 0..planted_nodes-1.
struct SyntheticParams {
  std::size_t n = 100;
  std::size_t m = 300;
  std::size_t colors = 3;
  /// Each edge gets a uniform number of distinct colors in [1, colors_per_edge].
  std::size_t colors_per_edge = 1;
  std::uint64_t seed = 1;
  std::size_t planted_nodes = 0;
  std::size_t planted_edges = 0;
};

EdgeColoredGraph generate_graph(const SyntheticParams& params);

/// Per-color totals g_c and the colors f_c of the unconstrained densest subgraph.
struct ColorBaseline {
  std::vector<std::int64_t> f;
  std::vector<std::int64_t> g;
  std::int64_t dsp_edges = 0;
  Density dsp_density;
  /// False when the densest subgraph came from greedy peeling (graph above exact_limit).
  bool exact = true;
};

ColorBaseline color_baseline(const EdgeColoredGraph& g, std::size_t exact_limit = 5000);

struct RandomRequirement {
  ColorRequirement req;
  double lambda = 0.0;  // sum h_c / sum (g_c - f_c)
};

/// `count` requirements with h_c uniform in [f_c, g_c]. Throws std::invalid_argument when
/// g_c = f_c for every color.
std::vector<RandomRequirement> random_color_instances(const ColorBaseline& base, std::size_t count,
                                                      std::uint64_t seed);
std::vector<RandomRequirement> random_color_instances(const EdgeColoredGraph& g, std::size_t count,
                                                      std::uint64_t seed);

/// Rungs i = 1..steps with h_c = floor(i * (t_c - f_c) / steps).
std::vector<ColorRequirement> requirement_ladder(const std::vector<std::int64_t>& t,
                                                 const std::vector<std::int64_t>& f, std::size_t steps = 10);
std::vector<ColorRequirement> requirement_ladder(const EdgeColoredGraph& g, std::size_t steps = 10);

/// Fraction of color memberships per color, over the whole graph or the subgraph on `nodes`.
/// All zeros when there are no edges.
std::vector<double> color_distribution(const EdgeColoredGraph& g);
std::vector<double> color_distribution(const EdgeColoredGraph& g, std::span<const NodeIndex> nodes);
/// CSV "color,graph,subset" rows; the subset column is left empty without `nodes`.
void write_color_distribution(std::ostream& out, const EdgeColoredGraph& g,
                              const std::vector<NodeIndex>* nodes = nullptr);

/// G plus two fresh nodes joined by one edge of a fresh color (index num_colors()).
EdgeColoredGraph adversarial_augment(const EdgeColoredGraph& g);

enum class SweepAlgorithm { Peel, BruteForce };

struct SweepRow {
  std::int64_t i = 0;
  std::int64_t h = 0;
  std::int64_t nodes = 0;
  std::int64_t edges = 0;
  Density density;
};

struct SweepResult {
  std::int64_t w = 0;  // edges of the unconstrained densest subgraph
  bool exact_baseline = true;
  std::vector<SweepRow> rows;
};

/// Evaluates h = w + i on the grid i_j = floor(j (m - w) / steps), j = 0..steps, duplicates
/// removed. Throws std::invalid_argument when m <= w.
SweepResult sweep_h(const EdgeColoredGraph& g, SweepAlgorithm algorithm = SweepAlgorithm::Peel,
                    std::size_t steps = 10, std::size_t oracle_cap = 20);
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);

enum class ProblemKind { Unconstrained, AtLeastEdges, Colored };

/// One instance to evaluate. Colored problems on graphs with multi-colored edges are
/// measured on the multigraph.
struct Problem {
  std::string id;
  std::shared_ptr<const EdgeColoredGraph> graph;
  ProblemKind kind = ProblemKind::Colored;
  std::int64_t h = 0;  // AtLeastEdges
  ColorRequirement req;  // Colored
  std::optional<double> lambda;
  bool multigraph = false;
  /// colapprox, heuristic, alhe, greedy, exact, oracle; empty selects the defaults for the kind.
  std::vector<std::string> algorithms;
};

struct RunRecord {
  std::string instance;
  std::string algorithm;
  ProblemKind kind = ProblemKind::Colored;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t colors = 0;
  std::string requirement;
  std::optional<double> lambda;
  bool ok = true;  // false when the algorithm threw (infeasible or cap)
  std::string error;
  bool feasible = false;
  std::int64_t nodes = 0;
  std::int64_t edges = 0;
  Density density;
  std::optional<Density> oracle;
  std::optional<double> rel_error_pct;
  std::optional<std::int64_t> peel_steps;
  std::optional<double> time_mean_ms;
  std::optional<double> time_sd_ms;
  int repeats = 0;

  bool optimal() const { return oracle && density == *oracle; }
};

struct ErrorSummary {
  std::string algorithm;
  std::size_t runs = 0;
  std::size_t compared = 0;  // runs with an oracle value
  double optimal_pct = 0;
  double within1_pct = 0;
  /// Statistics of non-optimal runs (0 when every compared run is optimal).
  double mean = 0, sd = 0, median = 0, max = 0;
  /// Mean over all compared runs.
  double mean_all = 0;
};

struct EvaluateOptions {
  bool oracle = true;
  std::size_t oracle_cap = 20;
  bool timing = false;
  int repeats = 10;
};

std::vector<std::string> default_algorithms(ProblemKind kind);
std::vector<RunRecord> evaluate(const std::vector<Problem>& problems, const EvaluateOptions& options = {});
std::vector<ErrorSummary> summarize(const std::vector<RunRecord>& records);

/// Relative error (opt - approx) / opt in percent; 0 when opt is 0.
double relative_error_pct(const Density& approx, const Density& opt);

const char* kind_name(ProblemKind kind);

void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& records, bool timing = false);
void write_summary_csv(std::ostream& out, const std::vector<ErrorSummary>& summary);

/// Expands a bench description (JSON) into problems and evaluation options.
struct BenchPlan {
  std::vector<Problem> problems;
  EvaluateOptions options;
};
/// Throws ParseError on invalid JSON or unknown keys' values. Relative graph paths resolve
/// against `base_dir`.
BenchPlan parse_bench_spec(std::string_view json_text, const std::string& base_dir = ".");

/// Runs a plan and writes runs then summary as CSV.
void run_bench(std::ostream& out, const BenchPlan& plan);

}  // namespace coldsp
