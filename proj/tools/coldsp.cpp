// coldsp: command-line front end for the densest-subgraph solvers and the bench harness.

#include <coldsp/bench.hpp>
#include <coldsp/constrained.hpp>
#include <coldsp/errors.hpp>
#include <coldsp/ilp.hpp>
#include <coldsp/io.hpp>
#include <coldsp/oracles.hpp>
#include <coldsp/peeling.hpp>
#include <coldsp/serialize.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using namespace coldsp;

enum ExitCode { kOk = 0, kOther = 1, kInfeasible = 2, kParse = 3, kCap = 4 };

struct Globals {
  std::uint64_t seed = 1;
  bool seed_set = false;
  int repeats = 10;
  bool repeats_set = false;
  std::string format = "csv";
  std::size_t oracle_cap = 20;
  bool oracle_cap_set = false;
  char separator = 0;
};

EdgeColoredGraph load(const std::string& path, const Globals& g) {
  ParseOptions options;
  options.field_separator = g.separator;
  return load_edge_list(path, options);
}

std::string join_labels(const EdgeColoredGraph& g, const std::vector<NodeIndex>& nodes) {
  std::string out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) out += ';';
    out += g.node_label(nodes[i]);
  }
  return out;
}

void print_result(const SubgraphResult& r, const EdgeColoredGraph& g, const Globals& opts) {
  if (opts.format == "json") {
    std::cout << to_json(r, g).dump(2) << '\n';
    return;
  }
  std::cout << "nodes,edges,density_exact,density";
  if (r.simple_density) std::cout << ",simple_density_exact";
  for (std::size_t c = 0; c < g.num_colors(); ++c) std::cout << ",color:" << g.color_label(static_cast<ColorIndex>(c));
  std::cout << ",members\n";
  std::cout << r.nodes.size() << ',' << r.edge_count << ',' << r.density.fraction() << ','
            << format_decimal(r.density.value());
  if (r.simple_density) std::cout << ',' << r.simple_density->fraction();
  for (auto count : r.color_counts) std::cout << ',' << count;
  std::cout << ',' << join_labels(g, r.nodes) << '\n';
}

void print_runs(const std::vector<RunRecord>& records, const Globals& opts, bool timing) {
  if (opts.format == "json") {
    auto runs = nlohmann::json::array();
    for (const auto& r : records) runs.push_back(to_json(r));
    auto summary = nlohmann::json::array();
    for (const auto& s : summarize(records)) summary.push_back(to_json(s));
    std::cout << nlohmann::json{{"runs", runs}, {"summary", summary}}.dump(2) << '\n';
    return;
  }
  write_runs_csv(std::cout, records, timing);
  write_summary_csv(std::cout, summarize(records));
}

int cmd_stats(const std::string& file, const Globals& opts) {
  const auto g = load(file, opts);
  if (opts.format == "json") {
    nlohmann::json colors = nlohmann::json::object();
    for (std::size_t c = 0; c < g.num_colors(); ++c) {
      colors[g.color_label(static_cast<ColorIndex>(c))] = g.color_totals()[c];
    }
    const nlohmann::json out{{"nodes", g.num_nodes()},
                             {"edges", g.num_edges()},
                             {"colors", g.num_colors()},
                             {"memberships", g.num_memberships()},
                             {"max_colors_per_edge", g.max_colors_per_edge()},
                             {"color_counts", colors}};
    std::cout << out.dump(2) << '\n';
    return kOk;
  }
  std::cout << "nodes,edges,colors,memberships,max_colors_per_edge\n"
            << g.num_nodes() << ',' << g.num_edges() << ',' << g.num_colors() << ',' << g.num_memberships() << ','
            << g.max_colors_per_edge() << '\n';
  std::cout << "color,edges\n";
  for (std::size_t c = 0; c < g.num_colors(); ++c) {
    std::cout << g.color_label(static_cast<ColorIndex>(c)) << ',' << g.color_totals()[c] << '\n';
  }
  return kOk;
}

int cmd_dsp(const std::string& file, bool greedy, bool multi, const Globals& opts) {
  const auto g = load(file, opts);
  if (multi) {
    const auto mg = to_multigraph(g);
    print_result(greedy ? greedy_peel_unconstrained(mg) : exact_dsp_flow(mg), g, opts);
  } else {
    print_result(greedy ? greedy_peel_unconstrained(g) : exact_dsp_flow(g), g, opts);
  }
  return kOk;
}

int cmd_alhe(const std::string& file, std::int64_t h, bool exact, bool trace, const Globals& opts) {
  const auto g = load(file, opts);
  if (trace) {
    std::cout << to_json(at_least_h_edges_trace(g, h), g).dump(2) << '\n';
    return kOk;
  }
  print_result(exact ? brute_force_at_least_h_edges(g, h, {opts.oracle_cap}) : at_least_h_edges_peel(g, h), g, opts);
  return kOk;
}

RequirementMode parse_mode(const std::string& mode) {
  if (mode == "atleast") return RequirementMode::AtLeast;
  if (mode == "atmost") return RequirementMode::AtMost;
  if (mode == "exactly") return RequirementMode::Exactly;
  throw std::invalid_argument("unknown mode '" + mode + "'");
}

int cmd_alhc(const std::string& file, const std::string& h, bool multi, const std::string& algo,
             const std::string& patch, const std::string& mode, const Globals& opts) {
  const auto g = load(file, opts);
  const auto req = parse_requirement(h, g, parse_mode(mode));
  const bool use_multi = multi || !g.single_colored();
  SubgraphResult r;
  if (algo == "colapprox") {
    const ColApproxOptions options{patch == "add" ? PatchMode::AddEdges : PatchMode::DeficitSet};
    r = use_multi ? col_approx_multi(g, req, options) : col_approx(g, req, options);
  } else if (algo == "heuristic") {
    r = use_multi ? heuristic_peel(to_multigraph(g), req) : heuristic_peel(g, req);
  } else {
    const BruteForceOptions bf{opts.oracle_cap};
    r = use_multi ? brute_force_colored(to_multigraph(g), req, bf) : brute_force_colored(g, req, bf);
  }
  print_result(r, g, opts);
  return kOk;
}

int cmd_ladder(const std::string& file, std::size_t steps, bool adversarial, bool oracle, const Globals& opts) {
  const auto original = load(file, opts);
  auto graph = std::make_shared<const EdgeColoredGraph>(adversarial ? adversarial_augment(original) : original);
  std::vector<Problem> problems;
  const auto rungs = requirement_ladder(original, steps);
  for (std::size_t i = 0; i < rungs.size(); ++i) {
    Problem p;
    p.id = "rung" + std::to_string(i + 1);
    p.graph = graph;
    p.req = rungs[i];
    if (adversarial) p.req.h.push_back(1);
    problems.push_back(std::move(p));
  }
  EvaluateOptions ev;
  ev.oracle = oracle;
  ev.oracle_cap = opts.oracle_cap;
  print_runs(evaluate(problems, ev), opts, false);
  return kOk;
}

int cmd_sweep(const std::string& file, std::size_t steps, bool exact, const Globals& opts) {
  const auto g = load(file, opts);
  const auto sweep = sweep_h(g, exact ? SweepAlgorithm::BruteForce : SweepAlgorithm::Peel, steps, opts.oracle_cap);
  if (opts.format == "json") {
    auto rows = nlohmann::json::array();
    for (const auto& r : sweep.rows) {
      rows.push_back({{"i", r.i},
                      {"h", r.h},
                      {"nodes", r.nodes},
                      {"edges", r.edges},
                      {"density", r.density.fraction()},
                      {"density_value", r.density.value()}});
    }
    std::cout << nlohmann::json{{"w", sweep.w}, {"exact_baseline", sweep.exact_baseline}, {"rows", rows}}.dump(2)
              << '\n';
    return kOk;
  }
  write_sweep_csv(std::cout, sweep);
  return kOk;
}

int cmd_colors(const std::string& file, bool dsp, const Globals& opts) {
  const auto g = load(file, opts);
  if (dsp) {
    const auto nodes = exact_dsp_flow(g).nodes;
    write_color_distribution(std::cout, g, &nodes);
  } else {
    write_color_distribution(std::cout, g);
  }
  return kOk;
}

int cmd_random(const std::string& file, std::size_t count, const Globals& opts) {
  const auto g = load(file, opts);
  std::cout << "index,requirement,lambda\n";
  const auto reqs = random_color_instances(g, count, opts.seed);
  for (std::size_t i = 0; i < reqs.size(); ++i) {
    std::cout << i << ",\"" << format_requirement(reqs[i].req, g) << "\"," << format_decimal(reqs[i].lambda) << '\n';
  }
  return kOk;
}

int cmd_ilp(const std::string& file, const std::string& h, const std::string& out, std::string name,
            const Globals& opts) {
  const auto g = load(file, opts);
  if (name.empty()) name = std::filesystem::path(file).stem().string();
  const bool colored = h.find_first_of(",=") != std::string::npos || g.num_colors() == 1;
  const auto paths = colored ? export_ilp(g, parse_requirement(h, g), out, name) : export_ilp(g, std::stoll(h), out, name);
  for (const auto& p : paths) std::cout << p.string() << '\n';
  return kOk;
}

int cmd_generate(const SyntheticParams& params) {
  std::cout << serialize_edge_list(generate_graph(params));
  return kOk;
}

int cmd_bench(const std::string& spec_path, bool timing, const Globals& opts) {
  std::ifstream in(spec_path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + spec_path);
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json spec;
  try {
    spec = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bench spec: ") + e.what());
  }
  if (opts.seed_set) spec["seed"] = opts.seed;
  if (opts.repeats_set) spec["repeats"] = opts.repeats;
  if (opts.oracle_cap_set) spec["oracle_cap"] = opts.oracle_cap;
  if (timing) spec["timing"] = true;
  const auto base_dir = std::filesystem::path(spec_path).parent_path().string();
  const auto plan = parse_bench_spec(spec.dump(), base_dir.empty() ? "." : base_dir);
  const auto records = evaluate(plan.problems, plan.options);
  print_runs(records, opts, plan.options.timing);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Densest subgraphs of edge-colored graphs"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();

  Globals opts;
  std::string separator;
  app.add_option("--seed", opts.seed, "Seed for generated instances and requirements")
      ->each([&](const std::string&) { opts.seed_set = true; });
  app.add_option("--repeats", opts.repeats, "Timing repetitions")->each([&](const std::string&) {
    opts.repeats_set = true;
  });
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--oracle-cap", opts.oracle_cap, "Largest node count for brute-force oracles")
      ->each([&](const std::string&) { opts.oracle_cap_set = true; });
  app.add_option("--sep", separator, "Single-character field separator (one color per line)");

  std::string file;
  std::int64_t h_edges = 1;
  std::string h_text;
  bool exact = false, greedy = false, multi = false, trace = false, adversarial = false, oracle = false;
  bool timing = false, dsp = false;
  std::string algo = "colapprox", patch = "deficit", mode = "atleast", out_dir, name;
  std::size_t steps = 10, count = 10;
  SyntheticParams synth;

  auto* stats = app.add_subcommand("stats", "Graph size and per-color edge counts");
  stats->add_option("file", file)->required();

  auto* dsp_cmd = app.add_subcommand("dsp", "Unconstrained densest subgraph");
  dsp_cmd->add_option("file", file)->required();
  auto* exact_flag = dsp_cmd->add_flag("--exact", exact, "Max-flow exact solver (default)");
  dsp_cmd->add_flag("--greedy", greedy, "Greedy peeling 2-approximation")->excludes(exact_flag);
  dsp_cmd->add_flag("--multi", multi, "Solve on the parallel-edge multigraph");

  auto* alhe = app.add_subcommand("alhe", "Densest subgraph with at least h edges");
  alhe->add_option("file", file)->required();
  alhe->add_option("--h", h_edges, "Required edges")->required();
  alhe->add_flag("--exact", exact, "Brute force instead of peeling");
  alhe->add_flag("--trace", trace, "Print the peeling trace as JSON");

  auto* alhc = app.add_subcommand("alhc", "Densest subgraph with at least h_c edges of every color");
  alhc->add_option("file", file)->required();
  alhc->add_option("--h", h_text, "Requirement, e.g. c1=5,c2=3 or 5,3")->required();
  alhc->add_flag("--multi", multi, "Use the multigraph variant");
  alhc->add_option("--algo", algo)->check(CLI::IsMember({"colapprox", "heuristic", "brute"}));
  alhc->add_option("--patch", patch, "Feasibility repair for colapprox")->check(CLI::IsMember({"deficit", "add"}));
  alhc->add_option("--mode", mode, "Requirement mode (brute force only)")
      ->check(CLI::IsMember({"atleast", "atmost", "exactly"}));

  auto* ladder = app.add_subcommand("ladder", "ColApprox and Heuristic on a requirement ladder");
  ladder->add_option("file", file)->required();
  ladder->add_option("--steps", steps);
  ladder->add_flag("--adversarial", adversarial, "Add a two-node edge of a fresh required color");
  ladder->add_flag("--oracle", oracle, "Compare against brute force");

  auto* sweep = app.add_subcommand("sweep", "At-least-h-edges densities for h = w + i");
  sweep->add_option("file", file)->required();
  sweep->add_option("--steps", steps);
  sweep->add_flag("--exact", exact, "Brute force instead of peeling");

  auto* colors = app.add_subcommand("colors", "Per-color edge fractions");
  colors->add_option("file", file)->required();
  colors->add_flag("--dsp", dsp, "Also report the unconstrained densest subgraph");

  auto* random = app.add_subcommand("random", "Random requirements with h_c in [f_c, g_c]");
  random->add_option("file", file)->required();
  random->add_option("--count", count);

  auto* ilp = app.add_subcommand("ilp-export", "Write one LP model per node count k");
  ilp->add_option("file", file)->required();
  ilp->add_option("--h", h_text, "Edge count, or a color requirement")->required();
  ilp->add_option("--out", out_dir, "Output directory")->required();
  ilp->add_option("--name", name, "Instance name (default: file stem)");

  auto* generate = app.add_subcommand("generate", "Random G(n, m) edge list");
  generate->add_option("--n", synth.n);
  generate->add_option("--m", synth.m);
  generate->add_option("--colors", synth.colors);
  generate->add_option("--colors-per-edge", synth.colors_per_edge);
  generate->add_option("--planted-nodes", synth.planted_nodes);
  generate->add_option("--planted-edges", synth.planted_edges);

  auto* bench = app.add_subcommand("bench", "Run a JSON bench description");
  bench->add_option("spec", file)->required();
  bench->add_flag("--timing", timing, "Add timing columns");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  if (separator.size() > 1) {
    std::cerr << "error: --sep takes a single character\n";
    return kOther;
  }
  if (separator.size() == 1) opts.separator = separator[0];

  try {
    if (*stats) return cmd_stats(file, opts);
    if (*dsp_cmd) return cmd_dsp(file, greedy, multi, opts);
    if (*alhe) return cmd_alhe(file, h_edges, exact, trace, opts);
    if (*alhc) return cmd_alhc(file, h_text, multi, algo, patch, mode, opts);
    if (*ladder) return cmd_ladder(file, steps, adversarial, oracle, opts);
    if (*sweep) return cmd_sweep(file, steps, exact, opts);
    if (*colors) return cmd_colors(file, dsp, opts);
    if (*random) return cmd_random(file, count, opts);
    if (*ilp) return cmd_ilp(file, h_text, out_dir, name, opts);
    if (*generate) {
      synth.seed = opts.seed;
      return cmd_generate(synth);
    }
    if (*bench) return cmd_bench(file, timing, opts);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOther;
  }
  return kOther;
}
