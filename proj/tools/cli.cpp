#include "cli.hpp"

#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "diamaug/distance.hpp"
#include "diamaug/gadget.hpp"
#include "diamaug/graph_io.hpp"
#include "diamaug/harness.hpp"
#include "diamaug/normalize.hpp"
#include "diamaug/solvers.hpp"

namespace diamaug::cli {

namespace {

struct Options {
  std::string in;
  std::string out;
  std::string map;
  std::string edges;
  std::string report;
  std::string summary;
  std::string problem;
  std::string variant = "closed-neighborhood";
  std::string mode;
  std::string format = "text";
  std::size_t k = 0;
  std::uint32_t target_diameter = 2;
  std::uint64_t max_nodes = SolverLimits{}.max_nodes;
  bool timing = false;
  CampaignConfig campaign;
};

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::DisconnectedInput: return kDisconnected;
    case Errc::NotAugmenting: return kNotAugmenting;
    case Errc::RuleUnsound:
    case Errc::NonTermination:
    case Errc::UMinusNonEmpty:
    case Errc::NotProper: return kRuleFailure;
    default: return kUsage;
  }
}

std::string join_vertices(const VertexSet& s) {
  std::string out;
  for (Vertex v : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::string join_edges(const EdgeSet& s) {
  std::string out;
  for (const Edge& e : s) {
    if (!out.empty()) out += ' ';
    out += to_string(e);
  }
  return out;
}

nlohmann::json edges_json(const EdgeSet& s) {
  auto arr = nlohmann::json::array();
  for (const Edge& e : s) arr.push_back({e.u, e.v});
  return arr;
}

void emit_line(std::ostream& out, const std::string& key, const std::string& value) {
  out << key;
  if (!value.empty()) out << ' ' << value;
  out << '\n';
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const Graph g1 = parse_graph(read_file(o.in));
  const GadgetGraph gadget = build_gadget(g1, parse_variant(o.variant));
  write_file(o.out, serialize_graph(gadget.graph()));
  write_file(o.map, serialize_gadget_map(gadget));
  out << "gadget " << to_string(gadget.variant()) << " n " << gadget.order() << " m "
      << gadget.graph().size() << '\n';
  return kOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const Graph g = parse_graph(read_file(o.in));
  const SolverLimits limits{o.max_nodes};

  Answer answer;
  std::string witness;
  std::uint64_t nodes;
  std::chrono::nanoseconds elapsed;
  if (o.problem == "ds") {
    const auto r = solve_dominating_set(g, o.k, limits);
    answer = r.answer;
    if (r.witness) witness = join_vertices(*r.witness);
    nodes = r.nodes_expanded;
    elapsed = r.elapsed;
  } else {
    const auto r = o.problem == "aug" ? solve_diameter_augmentation(g, o.k, o.target_diameter, limits)
                                      : solve_diameter_improvement(g, o.k, limits);
    answer = r.answer;
    if (r.witness) witness = join_edges(*r.witness);
    nodes = r.nodes_expanded;
    elapsed = r.elapsed;
  }

  emit_line(out, "problem", o.problem);
  emit_line(out, "n", std::to_string(g.order()));
  emit_line(out, "m", std::to_string(g.size()));
  emit_line(out, "k", std::to_string(o.k));
  if (o.problem == "aug") emit_line(out, "target_diameter", std::to_string(o.target_diameter));
  emit_line(out, "answer", to_string(answer));
  if (answer == Answer::Yes) emit_line(out, "witness", witness);
  emit_line(out, "nodes_expanded", std::to_string(nodes));
  if (o.timing) {
    emit_line(out, "time_ms",
              std::to_string(std::chrono::duration<double, std::milli>(elapsed).count()));
  }
  switch (answer) {
    case Answer::Yes: return kOk;
    case Answer::No: return kNo;
    case Answer::ResourceExceeded: return kResource;
  }
  return kUsage;
}

void print_trace(const SwapTrace& trace, const std::string& format, std::ostream& out,
                 const std::optional<EdgeSet>& proper, const std::optional<VertexSet>& dom) {
  if (format == "json") {
    nlohmann::json j;
    j["initial"] = edges_json(trace.initial);
    j["steps"] = nlohmann::json::array();
    for (const auto& s : trace.steps) {
      nlohmann::json step;
      step["rule"] = s.rule;
      step["removed"] = edges_json(s.removed);
      step["added"] = edges_json(s.added);
      if (s.diameter_after == kUnreachable) step["diameter_after"] = nullptr;
      else step["diameter_after"] = s.diameter_after;
      j["steps"].push_back(step);
    }
    if (proper) j["proper"] = edges_json(*proper);
    if (dom) j["dominating"] = dom->members();
    out << j.dump(2) << '\n';
    return;
  }
  emit_line(out, "initial", join_edges(trace.initial));
  for (const auto& s : trace.steps) {
    out << "step rule " << s.rule << " removed " << join_edges(s.removed) << " added "
        << (s.added.empty() ? "-" : join_edges(s.added)) << " diameter_after ";
    if (s.diameter_after == kUnreachable) out << "inf";
    else out << s.diameter_after;
    out << '\n';
  }
  emit_line(out, "steps", std::to_string(trace.steps.size()));
  if (proper) emit_line(out, "proper", join_edges(*proper));
  if (dom) emit_line(out, "dominating", join_vertices(*dom));
}

int cmd_normalize(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g2 = parse_graph(read_file(o.in));
  const GadgetGraph gadget = load_gadget(g2, read_file(o.map));
  const EdgeSet s = parse_edge_set(read_file(o.edges));
  try {
    const Normalized norm = normalize(gadget, s);
    const VertexSet dom = extract_dominating_set(gadget, norm.proper);
    print_trace(norm.trace, o.format, out, norm.proper, dom);
    if (!o.out.empty()) write_file(o.out, serialize_edge_set(norm.proper));
    return kOk;
  } catch (const NormalizeError& e) {
    print_trace(e.trace(), o.format, out, std::nullopt, std::nullopt);
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kRuleFailure;
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  CampaignConfig config = o.campaign;
  config.variant = parse_variant(o.variant);
  config.limits.max_nodes = o.max_nodes;
  if (o.mode.empty()) {
    config.mode = config.n_max <= 5 ? CampaignMode::Exhaustive : CampaignMode::Random;
  } else {
    config.mode = parse_mode(o.mode);
  }
  validate(config);

  const VerificationReport report = run_campaign(config);
  const std::string summary = report_summary(report);
  if (!o.report.empty()) write_file(o.report, report_csv(report));
  if (!o.summary.empty()) write_file(o.summary, summary);
  out << summary;
  // A campaign that only ran out of search budget has not falsified anything.
  if (report.hard_failures() > report.resource_exceeded()) return kVerifyFailure;
  return report.resource_exceeded() > 0 ? kResource : kOk;
}

const char* role_colour(Role r) {
  switch (r) {
    case Role::U1: return "lightblue";
    case Role::U2: return "palegreen";
    case Role::Y: return "lightgoldenrod";
    case Role::Z: return "salmon";
    case Role::X: return "orchid";
  }
  return "white";
}

int cmd_export_dot(const Options& o, std::ostream& out) {
  const Graph g = parse_graph(read_file(o.in));
  std::optional<GadgetGraph> gadget;
  if (!o.map.empty()) gadget = load_gadget(g, read_file(o.map));

  std::ostringstream dot;
  dot << "graph G {\n";
  if (gadget) dot << "  node [style=filled];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    dot << "  " << v;
    if (gadget) {
      dot << " [label=\"" << vertex_label(*gadget, v) << "\", role=\"" << to_string(gadget->role(v))
          << "\", fillcolor=\"" << role_colour(gadget->role(v)) << "\"]";
    }
    dot << ";\n";
  }
  for (const Edge& e : g.edges()) dot << "  " << e.u << " -- " << e.v << ";\n";
  dot << "}\n";

  if (o.out.empty()) out << dot.str();
  else write_file(o.out, dot.str());
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Dominating Set to Diameter-2 Augmentation reduction toolkit", "diamaug"};
  app.require_subcommand(1);

  const auto variants = CLI::IsMember({"closed-neighborhood", "twin-only"});

  auto* reduce = app.add_subcommand("reduce", "Build the gadget graph and its sidecar map");
  reduce->add_option("--in", o.in, "Input graph file")->required();
  reduce->add_option("--out", o.out, "Output gadget graph file")->required();
  reduce->add_option("--map", o.map, "Output sidecar map file")->required();
  reduce->add_option("--variant", o.variant, "Gadget variant")->check(variants);

  auto* solve = app.add_subcommand("solve", "Solve ds, aug or improve exactly");
  solve->add_option("problem", o.problem, "ds | aug | improve")
      ->required()
      ->check(CLI::IsMember({"ds", "aug", "improve"}));
  solve->add_option("--in", o.in, "Input graph file")->required();
  solve->add_option("-k", o.k, "Budget")->required();
  solve->add_option("--target-diameter", o.target_diameter, "Target diameter for aug")
      ->check(CLI::PositiveNumber);
  solve->add_option("--max-nodes", o.max_nodes, "Search node cap");
  solve->add_flag("--timing", o.timing, "Also print time_ms");

  auto* norm = app.add_subcommand("normalize", "Rewrite an augmenting set into a proper one");
  norm->add_option("--in", o.in, "Gadget graph file")->required();
  norm->add_option("--map", o.map, "Gadget sidecar map")->required();
  norm->add_option("--edges", o.edges, "Augmenting edge set file")->required();
  norm->add_option("--out", o.out, "Write the proper set here");
  norm->add_option("--format", o.format, "text | json")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run a verification campaign");
  verify->add_option("--n-min", o.campaign.n_min, "Smallest base graph order");
  verify->add_option("--n-max", o.campaign.n_max, "Largest base graph order");
  verify->add_option("--mode", o.mode, "exhaustive | random (default: exhaustive iff n-max <= 5)")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  verify->add_option("--samples", o.campaign.samples, "Random instances");
  verify->add_option("--edge-prob", o.campaign.edge_prob, "Extra-edge probability");
  verify->add_option("--seed", o.campaign.seed, "Campaign seed");
  verify->add_option("--variant", o.variant, "Gadget variant")->check(variants);
  verify->add_option("-k,--k-max", o.campaign.k_max, "Largest augmentation budget tried");
  verify->add_option("--trials", o.campaign.rule_trials, "Sampled augmenting sets per instance");
  verify->add_option("--max-nodes", o.max_nodes, "Search node cap per solve");
  verify->add_option("--report", o.report, "CSV report path");
  verify->add_option("--summary", o.summary, "Summary output path");

  auto* dot = app.add_subcommand("export-dot", "Write a Graphviz description");
  dot->add_option("--in", o.in, "Input graph file")->required();
  dot->add_option("--map", o.map, "Gadget sidecar map for role styling");
  dot->add_option("--out", o.out, "Output path (default stdout)");

  std::vector<std::string> argv_storage{"diamaug"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (reduce->parsed()) return cmd_reduce(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (norm->parsed()) return cmd_normalize(o, out, err);
    if (verify->parsed()) return cmd_verify(o, out);
    if (dot->parsed()) return cmd_export_dot(o, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kUsage;
}

}  // namespace diamaug::cli
