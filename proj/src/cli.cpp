#include "tb/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "tb/audit.hpp"
#include "tb/balloon.hpp"
#include "tb/construction.hpp"
#include "tb/decomposition.hpp"
#include "tb/error.hpp"
#include "tb/formulas.hpp"
#include "tb/graph6.hpp"
#include "tb/oracle.hpp"
#include "tb/subgraph.hpp"

namespace tb::cli {

namespace {

using json = nlohmann::ordered_json;

std::string branch_name(Branch b) { return b == Branch::k_eq_k1 ? "k_eq_k1" : "k_gt_k1"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

std::string first_line(const std::string& text) {
  std::string line = text.substr(0, text.find('\n'));
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

/// A host graph given as a graph6 file, a construct role-map JSON, or a literal graph6 string.
Graph load_host(const std::string& arg) {
  if (!std::filesystem::exists(arg)) return decode_graph6(arg);
  std::string text = read_file(arg);
  if (arg.ends_with(".json")) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.contains("graph6")) throw ParseError("expected a JSON object with \"graph6\"", 0);
    return decode_graph6(j["graph6"].get<std::string>());
  }
  return decode_graph6(first_line(text));
}

/// A forbidden graph given as a spec file (its ballooning) or a graph6 string.
Graph load_pattern(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    BalloonInput in = load_spec_file(arg);
    return build_balloon(in.tree, in.spec);
  }
  return decode_graph6(arg);
}

json vertex_list(VertexSet s) {
  json out = json::array();
  for (; s; s &= s - 1) out.push_back(lowest(s));
  return out;
}

json edge_list(const Graph& g) {
  json out = json::array();
  for (const Edge& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

EdgeColoring load_coloring(const std::string& path) {
  json j = json::parse(read_file(path), nullptr, false);
  if (j.is_discarded() || !j.contains("n") || !j.contains("red")) {
    throw ParseError("colouring file needs {\"n\": N, \"red\": [[u, v], ...]}", 0);
  }
  int n = j["n"].get<int>();
  if (n < 0 || n > max_vertices()) throw CapacityError("colouring order out of range");
  Graph red(n);
  for (const auto& e : j["red"]) {
    int u = e.at(0).get<int>();
    int v = e.at(1).get<int>();
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParameterError("red edge outside the vertex range");
    red.add_edge(u, v);
  }
  return EdgeColoring{red};
}

void print_rows(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << '\n';
}

json analysis_json(const AnalysisReport& r) {
  return {{"a", r.a},         {"b_size", r.b_size}, {"k", r.k},       {"k1", r.k1},
          {"u", r.u_name},    {"beta", r.beta},     {"nu", r.nu},     {"good", r.good},
          {"branch", branch_name(r.branch)}};
}

json turan_json(const TuranReport& r) {
  return {{"n", r.n},
          {"a", r.a},
          {"k", r.k},
          {"k1", r.k1},
          {"branch", branch_name(r.branch)},
          {"base", r.base},
          {"middle", r.middle},
          {"tail", r.tail},
          {"total", r.total},
          {"large_n_only", r.large_n_only},
          {"notes", {{"base", r.base_note}, {"middle", r.middle_note}, {"tail", r.tail_note}}}};
}

json construction_json(const LabeledConstruction& c) {
  return {{"n", c.graph.order()},
          {"edges", c.graph.size()},
          {"graph6", encode_graph6(c.graph)},
          {"branch", branch_name(c.branch)},
          {"roles", {{"X", vertex_list(c.x)}, {"X1", vertex_list(c.x1)}, {"X2", vertex_list(c.x2)}}},
          {"x_edges", edge_list(c.x_graph)},
          {"x1_embedded", vertex_list(c.x1_embedded)},
          {"x1_description", c.x1_description}};
}

struct Options {
  std::string spec;
  std::string host;
  std::string target;
  std::string output;
  std::string coloring;
  std::string dot;
  std::string audit;
  std::vector<std::string> forbid;
  int n = -1;
  int side = 0;
  int matching = -1;
  int max_degree = -1;
  long long samples = 10000;
  std::uint64_t seed = 0;
  bool json = false;
  bool oracle = false;
  bool b = false;
  bool trace = false;
};

int cmd_analyze(const Options& o, std::ostream& out) {
  BalloonInput in = load_spec_file(o.spec);
  GoodnessReport good = validate_good(in.tree, in.spec);
  if (!good.good) {
    std::string why;
    for (const auto& v : good.violations) why += "\n  " + in.tree.edge_name(v.edge) + ": " + v.reason;
    throw PreconditionError("the ballooning is not good:" + why);
  }
  AnalysisReport r = analyze(in.tree, in.spec);
  if (o.json) {
    out << analysis_json(r).dump(2) << '\n';
    return 0;
  }
  print_rows(out, {{"a", std::to_string(r.a)},
                   {"|B|", std::to_string(r.b_size)},
                   {"k", std::to_string(r.k)},
                   {"k1", std::to_string(r.k1)},
                   {"u", r.u_name},
                   {"beta(T)", std::to_string(r.beta)},
                   {"nu(T)", std::to_string(r.nu)},
                   {"good", "yes"},
                   {"branch", r.branch == Branch::k_eq_k1 ? "k = k1" : "k > k1"}});
  return 0;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  BalloonInput in = load_spec_file(o.spec);
  GraphFamily family = decomposition_family(in.tree, in.spec);
  if (o.oracle) {
    GraphFamily check = decomposition_oracle(in.tree, in.spec, o.side);
    if (!(check == family)) {
      err << "oracle disagrees: " << check.size() << " oracle member(s), " << family.size() << " from splitting\n";
      for (const auto& line : check.graph6_lines()) err << "  oracle " << line << '\n';
      return 1;
    }
  }
  const GraphFamily shown = o.b ? b_family(in.tree, family) : family;
  if (o.trace) {
    for (const FamilyMember& m : shown.members()) out << encode_graph6(m.graph) << "  " << m.trace << '\n';
  } else {
    for (const auto& line : shown.graph6_lines()) out << line << '\n';
  }
  if (o.oracle) err << "oracle agrees (" << family.size() << " member(s))\n";
  return 0;
}

int cmd_turan(const Options& o, std::ostream& out) {
  BalloonInput in = load_spec_file(o.spec);
  TuranReport r = turan_number(o.n, in.tree, in.spec);
  if (o.json) {
    out << turan_json(r).dump(2) << '\n';
    return 0;
  }
  print_rows(out, {{"n", std::to_string(r.n)},
                   {"a", std::to_string(r.a)},
                   {"k", std::to_string(r.k)},
                   {"k1", std::to_string(r.k1)},
                   {"base", std::to_string(r.base) + "  " + r.base_note},
                   {"middle", std::to_string(r.middle) + "  " + r.middle_note},
                   {"tail", std::to_string(r.tail) + "  " + r.tail_note},
                   {"total", std::to_string(r.total)},
                   {"regime", "value guaranteed only for sufficiently large n"}});
  return 0;
}

int cmd_construct(const Options& o, std::ostream& out) {
  BalloonInput in = load_spec_file(o.spec);
  LabeledConstruction c = extremal_candidate(o.n, in.tree, in.spec);
  const bool contained = contains_subgraph(c.graph, build_balloon(in.tree, in.spec));
  json j = construction_json(c);
  j["t_o_contained"] = contained;
  if (!o.output.empty()) {
    write_file(o.output, encode_graph6(c.graph) + "\n");
    write_file(o.output + ".json", j.dump(2) + "\n");
  }
  if (!o.coloring.empty()) {
    EdgeColoring col = coloring_candidate(o.n, in.tree, in.spec);
    json cj = {{"n", col.order()}, {"red", edge_list(col.red)}};
    write_file(o.coloring, cj.dump() + "\n");
  }
  if (!o.dot.empty()) {
    std::vector<std::string> labels;
    for (int v = 0; v < c.graph.order(); ++v) labels.push_back(role_name(c.roles[v]) + ":" + std::to_string(v));
    write_file(o.dot, export_dot(c.graph, labels));
  }
  if (o.json) {
    out << j.dump(2) << '\n';
  } else {
    print_rows(out, {{"graph6", encode_graph6(c.graph)},
                     {"vertices", std::to_string(c.graph.order())},
                     {"edges", std::to_string(c.graph.size())},
                     {"X", vertex_list(c.x).dump()},
                     {"X1", vertex_list(c.x1).dump()},
                     {"X2", vertex_list(c.x2).dump()},
                     {"in X", std::to_string(c.x_graph.size()) + " edge(s)"},
                     {"in X1", c.x1_description + " on " + vertex_list(c.x1_embedded).dump()}});
    out << (contained ? "T_o contained" : "T_o not contained") << '\n';
  }
  return contained ? 1 : 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Graph host = load_host(o.host);
  BalloonInput in = load_spec_file(o.spec);
  const bool contained = contains_subgraph(host, build_balloon(in.tree, in.spec));
  if (o.json) {
    out << json{{"n", host.order()}, {"edges", host.size()}, {"contained", contained}}.dump(2) << '\n';
  } else {
    out << (contained ? "T_o contained" : "T_o not contained") << '\n';
  }
  return 0;
}

int cmd_oracle_ex(const Options& o, std::ostream& out) {
  if (o.matching >= 0 || o.max_degree >= 0) {
    if (o.matching < 0 || o.max_degree < 0) throw ParameterError("--matching and --max-degree go together");
    int value = ex_bounded_degree_matching(o.matching, o.max_degree);
    out << json{{"value", value},
                {"nu", o.matching},
                {"delta", o.max_degree},
                {"formula", chvatal_hanson(o.matching, o.max_degree)}}
               .dump(2)
        << '\n';
    return 0;
  }
  if (o.n < 0) throw ParameterError("oracle ex needs -n");
  std::vector<Graph> family;
  for (const std::string& arg : o.forbid) family.push_back(load_pattern(arg));
  ExResult r = ex_exact(o.n, family);
  out << json{{"value", r.value},
              {"witness_graph6", encode_graph6(r.witness)},
              {"nodes_explored", r.nodes_explored},
              {"elapsed_ms", r.elapsed_ms}}
             .dump(2)
      << '\n';
  return 0;
}

int cmd_oracle_f2(const Options& o, std::ostream& out) {
  Graph h = load_pattern(o.target);
  if (!o.coloring.empty()) {
    EdgeColoring col = load_coloring(o.coloring);
    if (o.n >= 0 && o.n != col.order()) throw ParameterError("-n does not match the colouring order");
    out << json{{"value", f2_count_uncovered(col, h)}, {"n", col.order()}, {"mode", "coloring"}}.dump(2) << '\n';
    return 0;
  }
  if (o.n < 0) throw ParameterError("oracle f2 needs -n");
  out << json{{"value", f2_exact(o.n, h)}, {"n", o.n}, {"mode", "exact"}}.dump(2) << '\n';
  return 0;
}

int cmd_audit(const Options& o, std::ostream& out) {
  AuditResult r = run_audit(o.audit, o.samples, o.seed);
  if (o.json) {
    out << json{{"audit", r.name},
                {"cases", r.cases},
                {"premises_met", r.premises_met},
                {"counterexamples", r.counterexamples},
                {"first_counterexample", r.first_counterexample},
                {"elapsed_ms", r.elapsed_ms}}
               .dump(2)
        << '\n';
  } else {
    print_rows(out, {{"audit", r.name},
                     {"cases", std::to_string(r.cases)},
                     {"premises met", std::to_string(r.premises_met)},
                     {"counterexamples", std::to_string(r.counterexamples)}});
    if (!r.passed()) out << "first counterexample: " << r.first_counterexample << '\n';
  }
  return r.passed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Turan numbers of good odd-balloonings of trees", "tb"};
  app.require_subcommand(1);
  Options o;

  auto* analyze_cmd = app.add_subcommand("analyze", "bipartition, k, k1 and branch of a spec");
  analyze_cmd->add_option("spec", o.spec, "spec file")->required();
  analyze_cmd->add_flag("--json", o.json);

  auto* decompose_cmd = app.add_subcommand("decompose", "decomposition family as sorted graph6 lines");
  decompose_cmd->add_option("spec", o.spec, "spec file")->required();
  decompose_cmd->add_flag("--oracle", o.oracle, "cross-check against the embedding oracle");
  decompose_cmd->add_flag("--b", o.b, "emit the covering family B instead");
  decompose_cmd->add_flag("--trace", o.trace, "show how each member arises");
  decompose_cmd->add_option("--side", o.side, "oracle host side size (0 = automatic)");

  auto* turan_cmd = app.add_subcommand("turan", "closed-form Turan number");
  turan_cmd->add_option("spec", o.spec, "spec file")->required();
  turan_cmd->add_option("-n", o.n, "host order")->required()->check(CLI::NonNegativeNumber);
  turan_cmd->add_flag("--json", o.json);

  auto* construct_cmd = app.add_subcommand("construct", "extremal candidate with a freeness check");
  construct_cmd->add_option("spec", o.spec, "spec file")->required();
  construct_cmd->add_option("-n", o.n, "host order")->required()->check(CLI::NonNegativeNumber);
  construct_cmd->add_option("-o,--output", o.output, "write graph6 here and the role map to <file>.json");
  construct_cmd->add_option("--coloring", o.coloring, "write the red/blue colouring candidate as JSON");
  construct_cmd->add_option("--dot", o.dot, "write Graphviz output");
  construct_cmd->add_flag("--json", o.json);

  auto* verify_cmd = app.add_subcommand("verify", "does the host contain T_o?");
  verify_cmd->add_option("host", o.host, "graph6 file, construct JSON, or graph6 string")->required();
  verify_cmd->add_option("spec", o.spec, "spec file")->required();
  verify_cmd->add_flag("--json", o.json);

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive ground truth");
  oracle_cmd->require_subcommand(1);
  auto* ex_cmd = oracle_cmd->add_subcommand("ex", "exact ex(n, F)");
  ex_cmd->add_option("-n", o.n, "order")->check(CLI::NonNegativeNumber);
  ex_cmd->add_option("--forbid", o.forbid, "forbidden graphs: graph6 strings or spec files");
  ex_cmd->add_option("--matching", o.matching, "bounded variant: matching number bound");
  ex_cmd->add_option("--max-degree", o.max_degree, "bounded variant: degree bound");
  auto* f2_cmd = oracle_cmd->add_subcommand("f2", "edges in no monochromatic copy");
  f2_cmd->add_option("-n", o.n, "order")->check(CLI::NonNegativeNumber);
  f2_cmd->add_option("target", o.target, "spec file or graph6 string")->required();
  f2_cmd->add_option("--coloring", o.coloring, "count on this colouring instead of maximising");

  auto* audit_cmd = app.add_subcommand("audit", "lemma audits");
  audit_cmd->add_option("name", o.audit, "audit name")->required()->check(CLI::IsMember(audit_names()));
  audit_cmd->add_option("--samples", o.samples, "random samples")->check(CLI::NonNegativeNumber);
  audit_cmd->add_option("--seed", o.seed, "random seed");
  audit_cmd->add_flag("--json", o.json);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(o, out);
    if (*decompose_cmd) return cmd_decompose(o, out, err);
    if (*turan_cmd) return cmd_turan(o, out);
    if (*construct_cmd) return cmd_construct(o, out);
    if (*verify_cmd) return cmd_verify(o, out);
    if (*ex_cmd) {
      if (o.forbid.empty() && o.matching < 0 && o.max_degree < 0) {
        err << "oracle ex needs --forbid or --matching/--max-degree\n";
        return 2;
      }
      return cmd_oracle_ex(o, out);
    }
    if (*f2_cmd) return cmd_oracle_f2(o, out);
    if (*audit_cmd) return cmd_audit(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace tb::cli
