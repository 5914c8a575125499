#include <coldsp/errors.hpp>
#include <coldsp/ilp.hpp>
#include <coldsp/peeling.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace coldsp {

namespace {

constexpr std::size_t kMaxLine = 255;

bool plain_name(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isalnum(ch) || ch == '.'; });
}

// LP identifiers: labels when every label is alphanumeric (dots allowed), else a prefix and index.
std::vector<std::string> lp_names(std::size_t count, const auto& label_of, char fallback) {
  std::vector<std::string> names(count);
  bool all_plain = true;
  for (std::size_t i = 0; i < count; ++i) {
    names[i] = label_of(i);
    all_plain = all_plain && plain_name(names[i]);
  }
  if (!all_plain) {
    for (std::size_t i = 0; i < count; ++i) names[i] = fallback + std::to_string(i);
  }
  return names;
}

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::optional<double> parse_number(std::string_view tok) {
  double x = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) return std::nullopt;
  return x;
}

IlpModel build_model(const EdgeColoredGraph& g, std::int64_t h, const ColorRequirement* req, std::int64_t k,
                     std::string name) {
  if (g.num_edges() == 0) throw std::invalid_argument("ILP export needs at least one edge");
  const auto [k_lo, k_hi] = ilp_k_range(g, h);
  if (k < k_lo || k > k_hi) {
    throw std::out_of_range("k=" + std::to_string(k) + " outside [" + std::to_string(k_lo) + ", " +
                            std::to_string(k_hi) + "]");
  }
  const auto node = lp_names(g.num_nodes(), [&](std::size_t v) { return g.node_label(static_cast<NodeIndex>(v)); }, 'n');
  const auto color =
      lp_names(g.num_colors(), [&](std::size_t c) { return g.color_label(static_cast<ColorIndex>(c)); }, 'c');

  struct XVar {
    std::string name;
    NodeIndex a, b;  // a's name sorts first
    EdgeIndex edge;
  };
  std::vector<XVar> xs;
  xs.reserve(g.num_edges());
  for (EdgeIndex e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.endpoints(e);
    if (node[b] < node[a]) std::swap(a, b);
    xs.push_back({"x_" + node[a] + "_" + node[b], a, b, e});
  }
  std::sort(xs.begin(), xs.end(), [](const XVar& l, const XVar& r) { return l.name < r.name; });

  IlpModel m;
  m.name = std::move(name);
  m.k = k;
  const double inv_k = 1.0 / static_cast<double>(k);
  for (const auto& x : xs) m.objective.push_back({x.name, inv_k});

  LinearConstraint edges{"edges", {}, Sense::GreaterEqual, static_cast<double>(h)};
  for (const auto& x : xs) edges.terms.push_back({x.name, 1.0});
  m.constraints.push_back(std::move(edges));

  LinearConstraint nodes{"nodes", {}, Sense::Equal, static_cast<double>(k)};
  for (std::size_t v = 0; v < g.num_nodes(); ++v) nodes.terms.push_back({"y_" + node[v], 1.0});
  m.constraints.push_back(std::move(nodes));

  if (req) {
    for (std::size_t c = 0; c < g.num_colors(); ++c) {
      LinearConstraint row{"color_" + color[c], {}, Sense::GreaterEqual, static_cast<double>(req->h[c])};
      for (const auto& x : xs) {
        const auto cs = g.edge_colors(x.edge);
        if (std::find(cs.begin(), cs.end(), static_cast<ColorIndex>(c)) != cs.end()) row.terms.push_back({x.name, 1.0});
      }
      if (row.terms.empty()) row.terms.push_back({xs.front().name, 0.0});
      m.constraints.push_back(std::move(row));
    }
  }

  for (const auto& x : xs) {
    const std::string base = "cpl_" + node[x.a] + "_" + node[x.b];
    m.constraints.push_back({base + "_u", {{x.name, 1.0}, {"y_" + node[x.a], -1.0}}, Sense::LessEqual, 0.0});
    m.constraints.push_back({base + "_v", {{x.name, 1.0}, {"y_" + node[x.b], -1.0}}, Sense::LessEqual, 0.0});
  }
  for (const auto& x : xs) m.bounds.push_back({x.name, 0.0, 1.0});
  for (std::size_t v = 0; v < g.num_nodes(); ++v) m.binaries.push_back("y_" + node[v]);
  return m;
}

class LineWriter {
 public:
  explicit LineWriter(std::string& out) : out_(out) {}

  void start(std::string_view head) {
    out_ += ' ';
    out_ += head;
    width_ = head.size() + 1;
  }
  void piece(std::string_view p) {
    if (width_ + 1 + p.size() > kMaxLine) {
      out_ += '\n';
      width_ = 0;
    }
    out_ += ' ';
    out_ += p;
    width_ += p.size() + 1;
  }
  void finish() { out_ += '\n'; }

 private:
  std::string& out_;
  std::size_t width_ = 0;
};

void write_terms(LineWriter& w, const std::vector<LinearTerm>& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (t.coef < 0) {
      w.piece("-");
    } else if (i > 0) {
      w.piece("+");
    }
    const double mag = t.coef < 0 ? -t.coef : t.coef;
    if (mag != 1.0) w.piece(format_number(mag));
    w.piece(t.var);
  }
}

const char* sense_text(Sense s) {
  switch (s) {
    case Sense::LessEqual:
      return "<=";
    case Sense::GreaterEqual:
      return ">=";
    case Sense::Equal:
      return "=";
  }
  return "=";
}

std::string lower(std::string_view s) {
  std::string r(s);
  for (auto& ch : r) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return r;
}

enum class Section { None, Objective, Constraints, Bounds, Binaries, End };

std::optional<Section> section_keyword(std::string_view line) {
  const auto l = lower(line);
  if (l == "maximize" || l == "maximise" || l == "max") return Section::Objective;
  if (l == "subject to" || l == "such that" || l == "st" || l == "s.t.") return Section::Constraints;
  if (l == "bounds") return Section::Bounds;
  if (l == "binaries" || l == "binary" || l == "bin") return Section::Binaries;
  if (l == "end") return Section::End;
  return std::nullopt;
}

// Accumulates "name: [+|-] [coef] var ... [sense rhs]" rows across lines.
class RowParser {
 public:
  explicit RowParser(bool objective) : objective_(objective) {}

  void token(std::string_view tok, std::size_t line) {
    line_ = line;
    if (expect_rhs_) {
      const auto v = parse_number(tok);
      if (!v) throw ParseError("expected right-hand side, got '" + std::string(tok) + "'", line);
      row_->rhs = *v;
      expect_rhs_ = false;
      done_.push_back(std::move(*row_));
      row_.reset();
      return;
    }
    if (tok.size() > 1 && tok.back() == ':') {
      close(line);
      row_ = LinearConstraint{std::string(tok.substr(0, tok.size() - 1)), {}, Sense::LessEqual, 0.0};
      return;
    }
    if (!row_) throw ParseError("term outside of a named row", line);
    if (tok == "+" || tok == "-") {
      sign_ = tok == "-" ? -sign_ : sign_;
      return;
    }
    if (tok == "<=" || tok == "=<" || tok == ">=" || tok == "=>" || tok == "=") {
      if (objective_) throw ParseError("comparison in objective", line);
      row_->sense = tok == "=" ? Sense::Equal : (tok[0] == '<' || tok[1] == '<') ? Sense::LessEqual : Sense::GreaterEqual;
      expect_rhs_ = true;
      return;
    }
    if (const auto v = parse_number(tok)) {
      if (coef_) throw ParseError("two coefficients in a row", line);
      coef_ = *v;
      return;
    }
    row_->terms.push_back({std::string(tok), sign_ * coef_.value_or(1.0)});
    sign_ = 1.0;
    coef_.reset();
  }

  std::vector<LinearConstraint> finish() {
    close(line_);
    return std::move(done_);
  }

 private:
  void close(std::size_t line) {
    if (expect_rhs_) throw ParseError("missing right-hand side", line);
    if (!row_) return;
    if (!objective_) throw ParseError("row '" + row_->name + "' has no comparison", line);
    done_.push_back(std::move(*row_));
    row_.reset();
  }

  bool objective_;
  std::optional<LinearConstraint> row_;
  std::vector<LinearConstraint> done_;
  double sign_ = 1.0;
  std::optional<double> coef_;
  bool expect_rhs_ = false;
  std::size_t line_ = 0;
};

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t j = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > j) out.push_back(s.substr(j, i - j));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto toks = split_ws(s);
  if (toks.empty()) return {};
  return {toks.front().data(), static_cast<std::size_t>(toks.back().data() + toks.back().size() - toks.front().data())};
}

}  // namespace

std::pair<std::int64_t, std::int64_t> ilp_k_range(const EdgeColoredGraph& g, std::int64_t h) {
  const std::int64_t lo = h <= 0 ? 1 : lower_bound_nodes(h);
  return {lo, static_cast<std::int64_t>(g.num_nodes())};
}

std::int64_t ilp_edge_requirement(const EdgeColoredGraph& g, const ColorRequirement& req) {
  if (req.h.size() != g.num_colors()) throw std::invalid_argument("requirement length differs from color count");
  std::int64_t largest = 0;
  for (auto h : req.h) largest = std::max(largest, h);
  const auto per_edge = static_cast<std::int64_t>(std::max<std::size_t>(g.max_colors_per_edge(), 1));
  const std::int64_t total = req.total();
  return std::max(largest, (total + per_edge - 1) / per_edge);
}

IlpModel build_ilp(const EdgeColoredGraph& g, std::int64_t h, std::int64_t k, std::string name) {
  if (h < 0) throw std::invalid_argument("negative edge requirement");
  return build_model(g, h, nullptr, k, std::move(name));
}

IlpModel build_ilp(const EdgeColoredGraph& g, const ColorRequirement& req, std::int64_t k, std::string name) {
  if (req.mode != RequirementMode::AtLeast) throw std::invalid_argument("ILP export supports AtLeast requirements");
  return build_model(g, ilp_edge_requirement(g, req), &req, k, std::move(name));
}

std::string write_lp(const IlpModel& model) {
  std::string out = "\\ coldsp model " + model.name + " k=" + std::to_string(model.k) + "\n";
  LineWriter w(out);
  out += "Maximize\n";
  w.start("obj:");
  write_terms(w, model.objective);
  w.finish();
  out += "Subject To\n";
  for (const auto& row : model.constraints) {
    w.start(row.name + ":");
    write_terms(w, row.terms);
    w.piece(sense_text(row.sense));
    w.piece(format_number(row.rhs));
    w.finish();
  }
  out += "Bounds\n";
  for (const auto& b : model.bounds) {
    out += ' ' + format_number(b.lower) + " <= " + b.var + " <= " + format_number(b.upper) + '\n';
  }
  out += "Binaries\n";
  if (!model.binaries.empty()) {
    w.start(model.binaries.front());
    for (std::size_t i = 1; i < model.binaries.size(); ++i) w.piece(model.binaries[i]);
    w.finish();
  }
  out += "End\n";
  return out;
}

IlpModel parse_lp(std::string_view text) {
  IlpModel model;
  Section section = Section::None;
  RowParser objective(true), constraints(false);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size() && section != Section::End) {
    const auto eol = std::min(text.find('\n', pos), text.size());
    const auto line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty()) {
      if (eol == text.size()) break;
      continue;
    }
    if (line.front() == '\\') {
      const auto toks = split_ws(line.substr(1));
      if (toks.size() == 4 && toks[0] == "coldsp" && toks[1] == "model" && toks[3].starts_with("k=")) {
        model.name = std::string(toks[2]);
        const auto k = toks[3].substr(2);
        const auto res = std::from_chars(k.data(), k.data() + k.size(), model.k);
        if (res.ec != std::errc{} || res.ptr != k.data() + k.size()) throw ParseError("bad k in header", line_no);
      }
      continue;
    }
    if (const auto next = section_keyword(line)) {
      section = *next;
      continue;
    }
    const auto toks = split_ws(line);
    switch (section) {
      case Section::None:
      case Section::End:
        throw ParseError("content outside of a section", line_no);
      case Section::Objective:
        for (auto t : toks) objective.token(t, line_no);
        break;
      case Section::Constraints:
        for (auto t : toks) constraints.token(t, line_no);
        break;
      case Section::Bounds: {
        if (toks.size() != 5 || toks[1] != "<=" || toks[3] != "<=") throw ParseError("expected 'lo <= var <= hi'", line_no);
        const auto lo = parse_number(toks[0]), hi = parse_number(toks[4]);
        if (!lo || !hi) throw ParseError("bad bound value", line_no);
        model.bounds.push_back({std::string(toks[2]), *lo, *hi});
        break;
      }
      case Section::Binaries:
        for (auto t : toks) model.binaries.emplace_back(t);
        break;
    }
  }
  if (section != Section::End) throw ParseError("missing End", line_no);
  auto obj = objective.finish();
  if (obj.size() != 1) throw ParseError("expected exactly one objective row", line_no);
  model.objective = std::move(obj.front().terms);
  model.constraints = constraints.finish();
  return model;
}

namespace {

std::vector<std::filesystem::path> write_models(const EdgeColoredGraph& g, std::int64_t h, const ColorRequirement* req,
                                                const std::filesystem::path& dir, std::string_view instance) {
  std::filesystem::create_directories(dir);
  const auto [lo, hi] = ilp_k_range(g, h);
  std::vector<std::filesystem::path> paths;
  for (std::int64_t k = lo; k <= hi; ++k) {
    const std::string name = std::string(instance) + "_k" + std::to_string(k);
    const auto model = req ? build_ilp(g, *req, k, name) : build_ilp(g, h, k, name);
    auto path = dir / (name + ".lp");
    std::ofstream out(path, std::ios::binary);
    out << write_lp(model);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace

std::vector<std::filesystem::path> export_ilp(const EdgeColoredGraph& g, const ColorRequirement& req,
                                              const std::filesystem::path& dir, std::string_view instance) {
  return write_models(g, ilp_edge_requirement(g, req), &req, dir, instance);
}

std::vector<std::filesystem::path> export_ilp(const EdgeColoredGraph& g, std::int64_t h,
                                              const std::filesystem::path& dir, std::string_view instance) {
  return write_models(g, h, nullptr, dir, instance);
}

}  // namespace coldsp
