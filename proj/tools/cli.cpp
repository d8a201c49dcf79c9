#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <set>

#include "andgraph/characterization.hpp"
#include "andgraph/constructors.hpp"
#include "andgraph/errors.hpp"
#include "andgraph/feasibility.hpp"
#include "andgraph/generators.hpp"
#include "andgraph/intersection_model.hpp"
#include "andgraph/io.hpp"
#include "svg.hpp"

namespace andgraph::cli {

namespace {

struct Verdict {
  int code = kYes;
};

const char* verdict_name(int code) {
  switch (code) {
    case kYes: return "yes";
    case kNo: return "no";
    default: return "exhausted";
  }
}

// Thrown for inputs that parse but do not fit the requested operation.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph;
  std::string realization;
  std::string second;
  std::string ordering;
  std::string output;
  std::string witness;
  std::string aux;
  std::string codes;
  std::string out_realization;
  std::string interval;
  std::string outerplanar;
  std::string rooted_path;
  std::vector<std::string> family;
  std::vector<int> h;
  std::string eps = "1/2";
  bool block = false;
  bool cycle = false;
  bool central = false;
  VertexId w1 = 0;
  VertexId w2 = 0;
  std::uint64_t seed = 1;
  std::uint64_t node_budget = SearchLimits{}.node_budget;
  std::uint64_t case_budget = CandLimits{}.case_budget;
  int max_complete_n = CandLimits{}.max_complete_n;
};

void write_if(const std::string& path, const std::string& text) {
  if (!path.empty()) write_file_atomic(path, text);
}

Graph load_graph(const std::string& path) { return parse_graph(read_file(path)); }
Realization load_realization(const std::string& path) { return parse_realization(read_file(path)); }

std::string violation_witness(const Violation& v) {
  return "c four-point violation x < u < v < y: xv, uy edges, uv non-edge\nw " +
         std::to_string(v.x) + " " + std::to_string(v.u) + " " + std::to_string(v.v) + " " +
         std::to_string(v.y) + "\n";
}

void require_same(const Graph& model, const Graph& g, const char* what) {
  if (!(model == g)) throw UsageError(std::string(what) + " does not describe the input graph");
}

Verdict cmd_gen(const Options& o) {
  if (o.family.empty()) throw UsageError("--family needs a name");
  std::vector<int> params;
  for (std::size_t i = 1; i < o.family.size(); ++i) {
    try {
      std::size_t used = 0;
      params.push_back(std::stoi(o.family[i], &used));
      if (used != o.family[i].size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw UsageError("family parameter '" + o.family[i] + "' is not an integer");
    }
  }
  const GraphBundle b = generate(parse_family(o.family[0], params), o.seed);
  write_if(o.output, format_graph(b.graph));
  if (!o.aux.empty()) {
    std::string text;
    if (const auto* m = std::get_if<IntervalModel>(&b.aux)) {
      text = format_interval_model(*m);
    } else if (const auto* m = std::get_if<OuterplanarModel>(&b.aux)) {
      text = format_outerplanar_model(*m);
    } else if (const auto* m = std::get_if<RootedPathModel>(&b.aux)) {
      text = format_rooted_path_model(*m);
    } else {
      throw UsageError("family " + o.family[0] + " has no auxiliary model file");
    }
    write_file_atomic(o.aux, text);
  }
  return {};
}

Verdict cmd_realize(const Options& o) {
  const Graph g = load_graph(o.graph);
  const int methods = !o.interval.empty() + !o.outerplanar.empty() + !o.rooted_path.empty() +
                      !o.ordering.empty() + o.block + o.cycle + !o.h.empty();
  if (methods != 1) {
    throw UsageError(
        "choose exactly one of --interval, --outerplanar, --rooted-path, --ordering, --block, "
        "--cycle, --h-graph");
  }
  Realization r;
  if (!o.interval.empty()) {
    const IntervalModel m = parse_interval_model(read_file(o.interval));
    require_same(interval_graph(m), g, "interval model");
    r = interval_to_cand1(m);
  } else if (!o.outerplanar.empty()) {
    const OuterplanarModel m = parse_outerplanar_model(read_file(o.outerplanar));
    require_same(outerplanar_graph(m, g.order()), g, "outerplanar model");
    r = outerplanar_cand1(m, g.order());
  } else if (!o.rooted_path.empty()) {
    const RootedPathModel m = parse_rooted_path_model(read_file(o.rooted_path));
    require_same(rooted_path_graph(m), g, "rooted path model");
    r = realization_from_ordering(g, rdp_ordering(m));
  } else if (!o.ordering.empty()) {
    const Ordering ord = parse_ordering(read_file(o.ordering));
    if (auto v = four_point_check(g, ord)) {
      write_if(o.witness, violation_witness(*v));
      return {kNo};
    }
    r = realization_from_ordering(g, ord);
  } else if (o.block) {
    r = block_graph_cand1(g);
  } else if (o.cycle) {
    require_same(cycle_graph(g.order()), g, "the cycle 1..n");
    r = cycle_cand1(g.order(), parse_rational(o.eps));
  } else {
    if (o.h.size() != 3) throw UsageError("--h-graph takes lx ly lz");
    const HGraphSpec spec = make_h_spec(o.h[0], o.h[1], o.h[2]);
    require_same(h_graph_from_spec(spec), g, "the H graph");
    r = realization_from_ordering(g, h_graph_ordering(spec));
  }
  if (!verify(r, g).empty()) throw std::logic_error("constructed realization failed verification");
  write_if(o.output, format_realization(r));
  return {};
}

Verdict cmd_verify(const Options& o) {
  const Graph g = load_graph(o.graph);
  const Realization r = load_realization(o.realization);
  const VerifyReport rep = verify(r, g);
  std::string text;
  for (const Edge& e : rep.missing_edges) text += "missing " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  for (const Edge& e : rep.extra_edges) text += "extra " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  const bool central_ok = !o.central || (r.dimension() == 1 && is_central(r));
  if (!central_ok) text += "c realization is not central\n";
  write_if(o.witness, text);
  return {rep.empty() && central_ok ? kYes : kNo};
}

Verdict cmd_check_order(const Options& o) {
  const Graph g = load_graph(o.graph);
  const Ordering ord = parse_ordering(read_file(o.ordering));
  if (ord.size() != g.order()) throw UsageError("ordering and graph sizes differ");
  if (auto v = four_point_check(g, ord)) {
    write_if(o.witness, violation_witness(*v));
    return {kNo};
  }
  write_if(o.out_realization, format_realization(realization_from_ordering(g, ord)));
  write_if(o.codes, format_implicit_codes(implicit_encode(g, ord)));
  return {};
}

Verdict cmd_recognize_and1(const Options& o) {
  const Graph g = load_graph(o.graph);
  const And1Result res = and1_recognize(g, SearchLimits{o.node_budget});
  if (res.found()) {
    write_if(o.output, format_ordering(res.ordering()));
    write_if(o.out_realization, format_realization(realization_from_ordering(g, res.ordering())));
    return {};
  }
  std::string text;
  if (res.not_member()) {
    text = "c complete search: no vertex ordering passes the four-point check\n";
    if (has_double_nonadjacent_common_neighbors(g)) {
      text += "c two non-adjacent vertices have two non-adjacent common neighbors\n";
    }
  } else {
    text = "c node budget exhausted; membership undecided\n";
  }
  text += "c nodes " + std::to_string(res.nodes) + "\n";
  write_if(o.witness, text);
  return {res.not_member() ? kNo : kExhausted};
}

Verdict cmd_recognize_cand1(const Options& o) {
  const Graph g = load_graph(o.graph);
  const Cand1Result res =
      cand1_recognize(g, CandLimits{o.node_budget, o.case_budget, o.max_complete_n});
  if (res.found()) {
    write_if(o.output, format_realization(res.realization()));
    return {};
  }
  std::string text = res.not_member()
                         ? "c complete search: no ordering admits a central realization\n"
                         : "c budget or size cap reached; membership undecided\n";
  text += "c orderings " + std::to_string(res.orderings) + "\nc cases " +
          std::to_string(res.cases) + "\n";
  write_if(o.witness, text);
  return {res.not_member() ? kNo : kExhausted};
}

Verdict cmd_to_boxes(const Options& o) {
  write_if(o.output, format_corner_boxes(to_corner_boxes(load_realization(o.realization))));
  return {};
}

Verdict cmd_to_triangles(const Options& o) {
  write_if(o.output, format_semisquares(to_semisquares(load_realization(o.realization))));
  return {};
}

Verdict cmd_glue(const Options& o) {
  const Realization r1 = load_realization(o.realization);
  const Realization r2 = load_realization(o.second);
  write_if(o.output, format_realization(glue_at_safe_vertex(r1, o.w1, r2, o.w2).realization));
  return {};
}

Verdict cmd_render(const Options& o) {
  write_if(o.output, render_svg(load_realization(o.realization)));
  return {};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"AND(d) and central AND(1) graph realizations"};
  app.require_subcommand(1);
  Options o;
  std::function<Verdict(const Options&)> action;

  auto budgets = [&](CLI::App* sub, bool cases) {
    sub->add_option("--node-budget", o.node_budget, "search node budget")->capture_default_str();
    if (cases) {
      sub->add_option("--case-budget", o.case_budget, "feasibility systems budget")
          ->capture_default_str();
      sub->add_option("--max-complete-n", o.max_complete_n,
                      "largest component that may be reported as a non-member")
          ->capture_default_str();
    }
  };
  auto bind = [&](CLI::App* sub, Verdict (*fn)(const Options&)) {
    sub->callback([&action, fn] { action = fn; });
  };

  auto* gen = app.add_subcommand("gen", "generate a graph of a named family");
  gen->add_option("--family", o.family, "family name followed by its integer parameters")
      ->required()
      ->expected(1, -1);
  gen->add_option("-o,--output", o.output, "graph file")->required();
  gen->add_option("--aux", o.aux, "auxiliary model file (interval, dissection, ...)");
  gen->add_option("--seed", o.seed, "generator seed")->capture_default_str();
  bind(gen, cmd_gen);

  auto* realize = app.add_subcommand("realize", "build a realization with a constructor");
  realize->add_option("graph", o.graph)->required();
  realize->add_option("-o,--output", o.output, "realization file");
  realize->add_option("--interval", o.interval, "interval model file");
  realize->add_option("--outerplanar", o.outerplanar, "outerplanar model file");
  realize->add_option("--rooted-path", o.rooted_path, "rooted path model file");
  realize->add_option("--ordering", o.ordering, "ordering file");
  realize->add_flag("--block", o.block, "graph whose blocks are cliques");
  realize->add_flag("--cycle", o.cycle, "the cycle 1..n");
  realize->add_option("--eps", o.eps, "cycle overlap in (0, 1)")->capture_default_str();
  realize->add_option("--h-graph", o.h, "H graph parameters lx ly lz")->expected(3);
  realize->add_option("-w,--witness", o.witness, "violation file when --ordering fails");
  bind(realize, cmd_realize);

  auto* ver = app.add_subcommand("verify", "check that a realization induces a graph");
  ver->add_option("graph", o.graph)->required();
  ver->add_option("realization", o.realization)->required();
  ver->add_flag("--central", o.central, "also require a central realization");
  ver->add_option("-w,--witness", o.witness, "missing and extra edges");
  bind(ver, cmd_verify);

  auto* check = app.add_subcommand("check-order", "four-point check of a vertex ordering");
  check->add_option("graph", o.graph)->required();
  check->add_option("ordering", o.ordering)->required();
  check->add_option("-r,--realization", o.out_realization, "realization from the ordering");
  check->add_option("--codes", o.codes, "implicit codes file");
  check->add_option("-w,--witness", o.witness, "violating quadruple");
  bind(check, cmd_check_order);

  auto* and1 = app.add_subcommand("recognize-and1", "decide AND(1) membership");
  and1->add_option("graph", o.graph)->required();
  and1->add_option("-o,--output", o.output, "ordering file");
  and1->add_option("-r,--realization", o.out_realization, "realization file");
  and1->add_option("-w,--witness", o.witness, "certificate summary when not a member");
  budgets(and1, false);
  bind(and1, cmd_recognize_and1);

  auto* cand1 = app.add_subcommand("recognize-cand1", "decide central AND(1) membership");
  cand1->add_option("graph", o.graph)->required();
  cand1->add_option("-o,--output", o.output, "realization file");
  cand1->add_option("-w,--witness", o.witness, "certificate summary when not a member");
  budgets(cand1, true);
  bind(cand1, cmd_recognize_cand1);

  auto* boxes = app.add_subcommand("to-boxes", "corner-box model of a realization");
  boxes->add_option("realization", o.realization)->required();
  boxes->add_option("-o,--output", o.output, "corner-box file")->required();
  bind(boxes, cmd_to_boxes);

  auto* tri = app.add_subcommand("to-triangles", "semi-square model of a central realization");
  tri->add_option("realization", o.realization)->required();
  tri->add_option("-o,--output", o.output, "semi-square file")->required();
  bind(tri, cmd_to_triangles);

  auto* glue = app.add_subcommand("glue", "identify a vertex of one realization with a safe one");
  glue->add_option("first", o.realization)->required();
  glue->add_option("w1", o.w1)->required();
  glue->add_option("second", o.second)->required();
  glue->add_option("w2", o.w2)->required();
  glue->add_option("-o,--output", o.output, "realization file")->required();
  bind(glue, cmd_glue);

  auto* render = app.add_subcommand("render", "SVG of a realization and its corner boxes");
  render->add_option("realization", o.realization)->required();
  render->add_option("-o,--output", o.output, "SVG file")->required();
  bind(render, cmd_render);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  const std::vector<std::string> outputs{o.output, o.witness, o.aux, o.codes, o.out_realization};
  std::set<std::string> paths{o.graph, o.realization, o.second, o.ordering,
                              o.interval, o.outerplanar, o.rooted_path};
  paths.erase("");
  for (const std::string& path : outputs) {
    if (path.empty()) continue;
    if (!paths.insert(path).second) {
      err << "error: path " << path << " is used twice\n";
      return kUsage;
    }
  }

  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = action(o);
  } catch (const ParseError& e) {
    err << "format error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {  // PreconditionError and bad numbers
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::runtime_error& e) {  // UsageError and I/O failures
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  out << "verdict=" << verdict_name(v.code) << " time_ms=" << ms << "\n";
  return v.code;
}

}  // namespace andgraph::cli
