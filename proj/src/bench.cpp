#include <coldsp/bench.hpp>
#include <coldsp/constrained.hpp>
#include <coldsp/errors.hpp>
#include <coldsp/io.hpp>
#include <coldsp/oracles.hpp>
#include <coldsp/peeling.hpp>
#include <coldsp/random.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

namespace coldsp {

EdgeColoredGraph generate_graph(const SyntheticParams& p) {
  const std::uint64_t pairs = p.n < 2 ? 0 : static_cast<std::uint64_t>(p.n) * (p.n - 1) / 2;
  const std::uint64_t planted_pairs =
      p.planted_nodes < 2 ? 0 : static_cast<std::uint64_t>(p.planted_nodes) * (p.planted_nodes - 1) / 2;
  if (p.m > pairs) throw std::invalid_argument("more edges than node pairs");
  if (p.colors == 0) throw std::invalid_argument("need at least one color");
  if (p.colors_per_edge == 0 || p.colors_per_edge > p.colors) {
    throw std::invalid_argument("colors_per_edge must lie in [1, colors]");
  }
  if (p.planted_nodes > p.n || p.planted_edges > p.m || p.planted_edges > planted_pairs) {
    throw std::invalid_argument("planted subgraph does not fit");
  }

  Rng rng(p.seed);
  GraphBuilder b;
  for (std::size_t v = 0; v < p.n; ++v) b.add_node(std::to_string(v));
  for (std::size_t c = 0; c < p.colors; ++c) b.add_color(std::to_string(c + 1));

  std::unordered_set<std::uint64_t> used;
  std::vector<ColorIndex> palette(p.colors);
  auto add_random_edge = [&](std::uint64_t range) {
    while (true) {
      auto u = rng.below(range), v = rng.below(range);
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (!used.insert(u * p.n + v).second) continue;
      std::iota(palette.begin(), palette.end(), ColorIndex{0});
      const auto k = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(p.colors_per_edge)));
      for (std::size_t i = 0; i < k; ++i) {
        std::swap(palette[i], palette[i + rng.below(p.colors - i)]);
      }
      std::vector<ColorIndex> chosen(palette.begin(), palette.begin() + static_cast<std::ptrdiff_t>(k));
      b.add_edge(static_cast<NodeIndex>(u), static_cast<NodeIndex>(v), chosen);
      return;
    }
  };
  for (std::size_t i = 0; i < p.planted_edges; ++i) add_random_edge(p.planted_nodes);
  for (std::size_t i = p.planted_edges; i < p.m; ++i) add_random_edge(p.n);
  return std::move(b).build();
}

ColorBaseline color_baseline(const EdgeColoredGraph& g, std::size_t exact_limit) {
  if (g.num_edges() == 0) throw std::invalid_argument("color baseline needs at least one edge");
  ColorBaseline base;
  base.exact = g.num_nodes() <= exact_limit;
  const auto dsp = base.exact ? exact_dsp_flow(g) : greedy_peel_unconstrained(g);
  base.f = dsp.color_counts;
  base.g.assign(g.color_totals().begin(), g.color_totals().end());
  base.dsp_edges = dsp.edge_count;
  base.dsp_density = dsp.density;
  return base;
}

std::vector<RandomRequirement> random_color_instances(const ColorBaseline& base, std::size_t count,
                                                      std::uint64_t seed) {
  std::int64_t spread = 0;
  for (std::size_t c = 0; c < base.g.size(); ++c) spread += base.g[c] - base.f[c];
  if (spread == 0) throw std::invalid_argument("degenerate interval: g_c = f_c for every color");
  Rng rng(seed);
  std::vector<RandomRequirement> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    RandomRequirement r;
    r.req.h.resize(base.g.size());
    for (std::size_t c = 0; c < base.g.size(); ++c) r.req.h[c] = rng.uniform(base.f[c], base.g[c]);
    r.lambda = static_cast<double>(r.req.total()) / static_cast<double>(spread);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RandomRequirement> random_color_instances(const EdgeColoredGraph& g, std::size_t count,
                                                      std::uint64_t seed) {
  if (count == 0) return {};
  return random_color_instances(color_baseline(g), count, seed);
}

std::vector<ColorRequirement> requirement_ladder(const std::vector<std::int64_t>& t,
                                                 const std::vector<std::int64_t>& f, std::size_t steps) {
  if (t.size() != f.size()) throw std::invalid_argument("t and f differ in length");
  std::vector<ColorRequirement> out;
  for (std::size_t i = 1; i <= steps; ++i) {
    ColorRequirement r;
    r.h.resize(t.size());
    for (std::size_t c = 0; c < t.size(); ++c) {
      const std::int64_t rest = std::max<std::int64_t>(t[c] - f[c], 0);
      r.h[c] = static_cast<std::int64_t>(i) * rest / static_cast<std::int64_t>(steps);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ColorRequirement> requirement_ladder(const EdgeColoredGraph& g, std::size_t steps) {
  const auto base = color_baseline(g);
  return requirement_ladder(base.g, base.f, steps);
}

namespace {

std::vector<double> fractions(const std::vector<std::int64_t>& counts) {
  const auto total = std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
  std::vector<double> out(counts.size(), 0.0);
  if (total == 0) return out;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    out[c] = static_cast<double>(counts[c]) / static_cast<double>(total);
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

std::string fresh_label(const std::unordered_set<std::string>& taken, const std::string& prefix) {
  std::string label = prefix;
  for (int i = 1; taken.count(label); ++i) label = prefix + std::to_string(i);
  return label;
}

}  // namespace

std::vector<double> color_distribution(const EdgeColoredGraph& g) {
  return fractions({g.color_totals().begin(), g.color_totals().end()});
}

std::vector<double> color_distribution(const EdgeColoredGraph& g, std::span<const NodeIndex> nodes) {
  return fractions(color_counts(g, nodes));
}

void write_color_distribution(std::ostream& out, const EdgeColoredGraph& g, const std::vector<NodeIndex>* nodes) {
  const auto whole = color_distribution(g);
  std::vector<double> sub;
  if (nodes) sub = color_distribution(g, *nodes);
  out << "color,graph,subset\n";
  for (std::size_t c = 0; c < g.num_colors(); ++c) {
    out << csv_field(g.color_label(static_cast<ColorIndex>(c))) << ',' << format_decimal(whole[c]) << ',';
    if (nodes) out << format_decimal(sub[c]);
    out << '\n';
  }
}

EdgeColoredGraph adversarial_augment(const EdgeColoredGraph& g) {
  GraphBuilder b;
  std::unordered_set<std::string> node_labels, color_labels;
  for (std::size_t v = 0; v < g.num_nodes(); ++v) {
    const auto& label = g.node_label(static_cast<NodeIndex>(v));
    b.add_node(label);
    node_labels.insert(label);
  }
  for (std::size_t c = 0; c < g.num_colors(); ++c) {
    const auto& label = g.color_label(static_cast<ColorIndex>(c));
    b.add_color(label);
    color_labels.insert(label);
  }
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.endpoints(e);
    b.add_edge(u, v, g.edge_colors(e));
  }
  const auto a_label = fresh_label(node_labels, "adv_a");
  node_labels.insert(a_label);
  const NodeIndex a = b.add_node(a_label);
  const NodeIndex z = b.add_node(fresh_label(node_labels, "adv_b"));
  const ColorIndex c = b.add_color(fresh_label(color_labels, "adv"));
  b.add_edge(a, z, c);
  return std::move(b).build();
}

SweepResult sweep_h(const EdgeColoredGraph& g, SweepAlgorithm algorithm, std::size_t steps, std::size_t oracle_cap) {
  if (steps == 0) throw std::invalid_argument("sweep needs at least one step");
  const auto base = color_baseline(g);
  const auto m = static_cast<std::int64_t>(g.num_edges());
  SweepResult out;
  out.w = base.dsp_edges;
  out.exact_baseline = base.exact;
  if (m <= out.w) throw std::invalid_argument("nothing to sweep: the densest subgraph already holds every edge");
  std::int64_t last = -1;
  for (std::size_t j = 0; j <= steps; ++j) {
    const std::int64_t i = static_cast<std::int64_t>(j) * (m - out.w) / static_cast<std::int64_t>(steps);
    if (i == last) continue;
    last = i;
    const std::int64_t h = out.w + i;
    const auto r = algorithm == SweepAlgorithm::Peel ? at_least_h_edges_peel(g, h)
                                                     : brute_force_at_least_h_edges(g, h, {oracle_cap});
    out.rows.push_back({i, h, static_cast<std::int64_t>(r.nodes.size()), r.edge_count, r.density});
  }
  return out;
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
  out << "# coldsp-sweep v1\n";
  out << "# w=" << sweep.w << " baseline=" << (sweep.exact_baseline ? "exact" : "greedy") << '\n';
  out << "i,h,nodes,edges,density_exact,density\n";
  for (const auto& r : sweep.rows) {
    out << r.i << ',' << r.h << ',' << r.nodes << ',' << r.edges << ',' << r.density.fraction() << ','
        << format_decimal(r.density.value()) << '\n';
  }
}

const char* kind_name(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Unconstrained:
      return "dsp";
    case ProblemKind::AtLeastEdges:
      return "alhe";
    case ProblemKind::Colored:
      return "alhc";
  }
  return "";
}

std::vector<std::string> default_algorithms(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Unconstrained:
      return {"greedy", "exact"};
    case ProblemKind::AtLeastEdges:
      return {"alhe"};
    case ProblemKind::Colored:
      return {"colapprox", "heuristic"};
  }
  return {};
}

double relative_error_pct(const Density& approx, const Density& opt) {
  if (opt.edges == 0) return 0.0;
  const __int128 num = static_cast<__int128>(opt.edges) * approx.nodes - static_cast<__int128>(approx.edges) * opt.nodes;
  const __int128 den = static_cast<__int128>(opt.edges) * approx.nodes;
  return 100.0 * static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
}

namespace {

bool within_pct(const Density& approx, const Density& opt, std::int64_t pct) {
  // (opt - approx) / opt <= pct / 100, cross-multiplied.
  const __int128 lhs = 100 * (static_cast<__int128>(opt.edges) * approx.nodes -
                              static_cast<__int128>(approx.edges) * opt.nodes);
  const __int128 rhs = static_cast<__int128>(pct) * opt.edges * approx.nodes;
  return lhs <= rhs;
}

struct Outcome {
  SubgraphResult result;
  std::optional<std::int64_t> steps;
};

Outcome run_algorithm(const Problem& p, const std::string& algo, std::size_t cap) {
  const auto& g = *p.graph;
  const bool multi = p.multigraph || !g.single_colored();
  const BruteForceOptions bf{cap};
  switch (p.kind) {
    case ProblemKind::Unconstrained:
      if (algo == "greedy") return {greedy_peel_unconstrained(g), std::nullopt};
      if (algo == "exact") return {exact_dsp_flow(g), std::nullopt};
      if (algo == "oracle") return {brute_force_densest(g, bf), std::nullopt};
      break;
    case ProblemKind::AtLeastEdges:
      if (algo == "alhe") {
        const auto trace = at_least_h_edges_trace(g, p.h);
        return {make_result(g, trace.prefix_nodes(trace.best_prefix(), g.num_nodes())),
                static_cast<std::int64_t>(trace.steps())};
      }
      if (algo == "oracle") return {brute_force_at_least_h_edges(g, p.h, bf), std::nullopt};
      break;
    case ProblemKind::Colored: {
      if (algo == "colapprox" || algo == "colapprox-add") {
        const ColApproxOptions opt{algo == "colapprox" ? PatchMode::DeficitSet : PatchMode::AddEdges};
        return {multi ? col_approx_multi(g, p.req, opt) : col_approx(g, p.req, opt), std::nullopt};
      }
      if (algo == "heuristic") {
        return {multi ? heuristic_peel(to_multigraph(g), p.req) : heuristic_peel(g, p.req), std::nullopt};
      }
      if (algo == "oracle") {
        return {multi ? brute_force_colored(to_multigraph(g), p.req, bf) : brute_force_colored(g, p.req, bf),
                std::nullopt};
      }
      break;
    }
  }
  throw std::invalid_argument("unknown algorithm '" + algo + "' for " + kind_name(p.kind) + " problems");
}

bool satisfies(const Problem& p, const SubgraphResult& r) {
  switch (p.kind) {
    case ProblemKind::Unconstrained:
      return !r.nodes.empty();
    case ProblemKind::AtLeastEdges:
      return r.edge_count >= p.h;
    case ProblemKind::Colored:
      return p.req.satisfied_by(r.color_counts);
  }
  return false;
}

std::string requirement_text(const Problem& p) {
  switch (p.kind) {
    case ProblemKind::Unconstrained:
      return "";
    case ProblemKind::AtLeastEdges:
      return "h=" + std::to_string(p.h);
    case ProblemKind::Colored:
      return format_requirement(p.req, *p.graph);
  }
  return "";
}

std::pair<double, double> mean_sd(const std::vector<double>& xs) {
  if (xs.empty()) return {0.0, 0.0};
  const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
  if (xs.size() < 2) return {mean, 0.0};
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / static_cast<double>(xs.size() - 1))};
}

}  // namespace

std::vector<RunRecord> evaluate(const std::vector<Problem>& problems, const EvaluateOptions& options) {
  std::vector<RunRecord> records;
  for (const auto& p : problems) {
    if (!p.graph) throw std::invalid_argument("problem '" + p.id + "' has no graph");
    const auto& g = *p.graph;
    std::optional<Density> oracle;
    if (options.oracle) {
      if (g.num_nodes() > options.oracle_cap) throw CapExceededError(g.num_nodes(), options.oracle_cap);
      try {
        oracle = run_algorithm(p, "oracle", options.oracle_cap).result.density;
      } catch (const InfeasibleError&) {
      }
    }
    const auto algorithms = p.algorithms.empty() ? default_algorithms(p.kind) : p.algorithms;
    for (const auto& algo : algorithms) {
      RunRecord rec;
      rec.instance = p.id;
      rec.algorithm = algo;
      rec.kind = p.kind;
      rec.n = g.num_nodes();
      rec.m = g.num_edges();
      rec.colors = g.num_colors();
      rec.requirement = requirement_text(p);
      rec.lambda = p.lambda;
      rec.oracle = oracle;
      try {
        auto outcome = run_algorithm(p, algo, options.oracle_cap);
        if (options.timing) {
          std::vector<double> ms;
          const int repeats = std::max(options.repeats, 1);
          for (int r = 0; r < repeats; ++r) {
            const auto t0 = std::chrono::steady_clock::now();
            run_algorithm(p, algo, options.oracle_cap);
            const auto t1 = std::chrono::steady_clock::now();
            ms.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
          }
          const auto [mean, sd] = mean_sd(ms);
          rec.time_mean_ms = mean;
          rec.time_sd_ms = sd;
          rec.repeats = repeats;
        }
        rec.feasible = satisfies(p, outcome.result);
        rec.nodes = static_cast<std::int64_t>(outcome.result.nodes.size());
        rec.edges = outcome.result.edge_count;
        rec.density = outcome.result.density;
        rec.peel_steps = outcome.steps;
        if (oracle) rec.rel_error_pct = relative_error_pct(rec.density, *oracle);
      } catch (const InfeasibleError& e) {
        rec.ok = false;
        rec.error = "infeasible";
      }
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::vector<ErrorSummary> summarize(const std::vector<RunRecord>& records) {
  std::vector<ErrorSummary> out;
  std::vector<std::vector<const RunRecord*>> groups;
  for (const auto& r : records) {
    auto it = std::find_if(out.begin(), out.end(), [&](const ErrorSummary& s) { return s.algorithm == r.algorithm; });
    if (it == out.end()) {
      out.push_back({});
      out.back().algorithm = r.algorithm;
      groups.emplace_back();
      it = out.end() - 1;
    }
    groups[static_cast<std::size_t>(it - out.begin())].push_back(&r);
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto& s = out[i];
    std::vector<double> all, nonopt;
    std::size_t optimal = 0, within = 0;
    for (const RunRecord* r : groups[i]) {
      ++s.runs;
      if (!r->ok || !r->oracle) continue;
      ++s.compared;
      all.push_back(*r->rel_error_pct);
      if (r->optimal()) {
        ++optimal;
      } else {
        nonopt.push_back(*r->rel_error_pct);
      }
      if (within_pct(r->density, *r->oracle, 1)) ++within;
    }
    if (s.compared == 0) continue;
    s.optimal_pct = 100.0 * static_cast<double>(optimal) / static_cast<double>(s.compared);
    s.within1_pct = 100.0 * static_cast<double>(within) / static_cast<double>(s.compared);
    s.mean_all = mean_sd(all).first;
    if (!nonopt.empty()) {
      std::tie(s.mean, s.sd) = mean_sd(nonopt);
      std::sort(nonopt.begin(), nonopt.end());
      const std::size_t k = nonopt.size();
      s.median = k % 2 ? nonopt[k / 2] : (nonopt[k / 2 - 1] + nonopt[k / 2]) / 2;
      s.max = nonopt.back();
    }
  }
  return out;
}

void write_runs_csv(std::ostream& out, const std::vector<RunRecord>& records, bool timing) {
  out << "# coldsp-runs v1\n";
  out << "instance,algorithm,kind,n,m,colors,requirement,lambda,status,feasible,nodes,edges,density_exact,density,"
         "oracle_exact,oracle,rel_error_pct,optimal,peel_steps";
  if (timing) out << ",time_mean_ms,time_sd_ms,repeats";
  out << '\n';
  for (const auto& r : records) {
    out << csv_field(r.instance) << ',' << csv_field(r.algorithm) << ',' << kind_name(r.kind) << ',' << r.n << ','
        << r.m << ',' << r.colors << ',' << csv_field(r.requirement) << ','
        << (r.lambda ? format_decimal(*r.lambda) : "") << ',' << (r.ok ? "ok" : r.error) << ',';
    if (r.ok) {
      out << (r.feasible ? 1 : 0) << ',' << r.nodes << ',' << r.edges << ',' << r.density.fraction() << ','
          << format_decimal(r.density.value()) << ',';
    } else {
      out << ",,,,,";
    }
    if (r.oracle) {
      out << r.oracle->fraction() << ',' << format_decimal(r.oracle->value()) << ',';
    } else {
      out << ",,";
    }
    out << (r.rel_error_pct ? format_decimal(*r.rel_error_pct) : "") << ',';
    out << (r.ok && r.oracle ? (r.optimal() ? "1" : "0") : "") << ',';
    out << (r.peel_steps ? std::to_string(*r.peel_steps) : "");
    if (timing) {
      out << ',' << (r.time_mean_ms ? format_decimal(*r.time_mean_ms, 3) : "") << ','
          << (r.time_sd_ms ? format_decimal(*r.time_sd_ms, 3) : "") << ',' << r.repeats;
    }
    out << '\n';
  }
}

void write_summary_csv(std::ostream& out, const std::vector<ErrorSummary>& summary) {
  out << "# coldsp-summary v1\n";
  out << "algorithm,runs,compared,optimal_pct,within1_pct,err_mean,err_sd,err_median,err_max,err_mean_all\n";
  for (const auto& s : summary) {
    out << csv_field(s.algorithm) << ',' << s.runs << ',' << s.compared << ',' << format_decimal(s.optimal_pct) << ','
        << format_decimal(s.within1_pct) << ',' << format_decimal(s.mean) << ',' << format_decimal(s.sd) << ','
        << format_decimal(s.median) << ',' << format_decimal(s.max) << ',' << format_decimal(s.mean_all) << '\n';
  }
}

namespace {

using nlohmann::json;

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  const auto it = j.find(key);
  return it == j.end() ? fallback : it->get<T>();
}

SyntheticParams synthetic_params(const json& j, std::uint64_t seed) {
  SyntheticParams p;
  p.n = get_or<std::size_t>(j, "n", p.n);
  p.m = get_or<std::size_t>(j, "m", p.m);
  p.colors = get_or<std::size_t>(j, "colors", p.colors);
  p.colors_per_edge = get_or<std::size_t>(j, "colors_per_edge", p.colors_per_edge);
  p.planted_nodes = get_or<std::size_t>(j, "planted_nodes", p.planted_nodes);
  p.planted_edges = get_or<std::size_t>(j, "planted_edges", p.planted_edges);
  p.seed = seed;
  return p;
}

std::string instance_id(const std::string& id, std::size_t replicates, std::size_t r, std::size_t reqs, std::size_t q) {
  std::string out = id;
  if (replicates > 1) out += "/r" + std::to_string(r);
  if (reqs > 1) out += "/q" + std::to_string(q);
  return out;
}

void expand_instance(const json& inst, std::size_t index, std::uint64_t seed, const std::string& base_dir,
                     std::vector<Problem>& out) {
  const auto id = inst.at("id").get<std::string>();
  const auto& graph_spec = inst.at("graph");
  const auto replicates = get_or<std::size_t>(inst, "replicates", 1);
  const bool adversarial = get_or<bool>(inst, "adversarial", false);
  const bool multigraph = get_or<bool>(inst, "multigraph", false);
  const auto algorithms = get_or<std::vector<std::string>>(inst, "algorithms", {});
  const json req_spec = inst.contains("requirement") ? inst.at("requirement") : json{{"kind", "unconstrained"}};
  const auto kind = req_spec.at("kind").get<std::string>();

  for (std::size_t r = 0; r < replicates; ++r) {
    const std::uint64_t graph_seed = splitmix64(splitmix64(seed + index) + r);
    std::shared_ptr<const EdgeColoredGraph> original;
    if (graph_spec.contains("synthetic")) {
      auto params = synthetic_params(graph_spec.at("synthetic"), graph_seed);
      if (graph_spec.at("synthetic").contains("seed")) {
        params.seed = graph_spec.at("synthetic").at("seed").get<std::uint64_t>() + r;
      }
      original = std::make_shared<const EdgeColoredGraph>(generate_graph(params));
    } else if (graph_spec.contains("path")) {
      std::filesystem::path path = graph_spec.at("path").get<std::string>();
      if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
      ParseOptions po;
      const auto sep = get_or<std::string>(graph_spec, "separator", "");
      if (sep.size() == 1) po.field_separator = sep[0];
      original = std::make_shared<const EdgeColoredGraph>(load_edge_list(path, po));
    } else {
      throw ParseError("instance '" + id + "': graph needs 'synthetic' or 'path'");
    }
    auto graph = adversarial ? std::make_shared<const EdgeColoredGraph>(adversarial_augment(*original)) : original;

    std::vector<Problem> made;
    auto colored = [&](ColorRequirement req, std::optional<double> lambda) {
      if (adversarial) req.h.push_back(1);
      Problem p;
      p.graph = graph;
      p.kind = ProblemKind::Colored;
      p.req = std::move(req);
      p.lambda = lambda;
      made.push_back(std::move(p));
    };
    const std::uint64_t req_seed = splitmix64(graph_seed + 1);
    if (kind == "unconstrained") {
      Problem p;
      p.graph = graph;
      p.kind = ProblemKind::Unconstrained;
      made.push_back(std::move(p));
    } else if (kind == "alhe") {
      Problem p;
      p.graph = graph;
      p.kind = ProblemKind::AtLeastEdges;
      p.h = req_spec.at("h").get<std::int64_t>();
      made.push_back(std::move(p));
    } else if (kind == "sweep") {
      const auto base = color_baseline(*graph);
      const auto m = static_cast<std::int64_t>(graph->num_edges());
      const auto steps = get_or<std::int64_t>(req_spec, "steps", 10);
      std::int64_t last = -1;
      for (std::int64_t j = 0; j <= steps && m > base.dsp_edges; ++j) {
        const std::int64_t i = j * (m - base.dsp_edges) / steps;
        if (i == last) continue;
        last = i;
        Problem p;
        p.graph = graph;
        p.kind = ProblemKind::AtLeastEdges;
        p.h = base.dsp_edges + i;
        made.push_back(std::move(p));
      }
    } else if (kind == "fixed") {
      colored(parse_requirement(req_spec.at("h").get<std::string>(), *original), std::nullopt);
    } else if (kind == "random") {
      const auto count = get_or<std::size_t>(req_spec, "count", 1);
      const auto base = color_baseline(*original);
      std::int64_t spread = 0;
      for (std::size_t c = 0; c < base.g.size(); ++c) spread += base.g[c] - base.f[c];
      if (spread == 0) continue;
      for (auto& rr : random_color_instances(base, count, req_seed)) colored(std::move(rr.req), rr.lambda);
    } else if (kind == "ladder") {
      const auto steps = get_or<std::size_t>(req_spec, "steps", 10);
      for (auto& req : requirement_ladder(*original, steps)) colored(std::move(req), std::nullopt);
    } else {
      throw ParseError("instance '" + id + "': unknown requirement kind '" + kind + "'");
    }
    for (std::size_t q = 0; q < made.size(); ++q) {
      made[q].id = instance_id(id, replicates, r, made.size(), q);
      made[q].multigraph = multigraph;
      made[q].algorithms = algorithms;
      out.push_back(std::move(made[q]));
    }
  }
}

}  // namespace

BenchPlan parse_bench_spec(std::string_view json_text, const std::string& base_dir) {
  BenchPlan plan;
  try {
    const auto j = json::parse(json_text);
    const auto seed = get_or<std::uint64_t>(j, "seed", 1);
    plan.options.oracle = get_or<bool>(j, "oracle", plan.options.oracle);
    plan.options.oracle_cap = get_or<std::size_t>(j, "oracle_cap", plan.options.oracle_cap);
    plan.options.timing = get_or<bool>(j, "timing", plan.options.timing);
    plan.options.repeats = get_or<int>(j, "repeats", plan.options.repeats);
    const auto& instances = j.at("instances");
    for (std::size_t i = 0; i < instances.size(); ++i) {
      expand_instance(instances.at(i), i, seed, base_dir, plan.problems);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("bench spec: ") + e.what());
  }
  return plan;
}

void run_bench(std::ostream& out, const BenchPlan& plan) {
  const auto records = evaluate(plan.problems, plan.options);
  write_runs_csv(out, records, plan.options.timing);
  write_summary_csv(out, summarize(records));
}

}  // namespace coldsp
