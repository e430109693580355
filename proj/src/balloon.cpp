#include "tb/balloon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "tb/error.hpp"
#include "tb/matching.hpp"

namespace tb {

int BipartiteTree::edge_index(int u, int v) const {
  Edge want(u, v);
  auto it = std::find(edges.begin(), edges.end(), want);
  return it == edges.end() ? -1 : static_cast<int>(it - edges.begin());
}

std::string BipartiteTree::edge_name(int e) const { return names[edges[e].u] + "-" + names[edges[e].v]; }

namespace {

bool valid_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

struct Token {
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokens_after(std::string_view line, std::size_t base, std::string_view label) {
  std::vector<Token> out;
  std::size_t i = label.size();
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({std::string(line.substr(start, i - start)), base + start});
  }
  return out;
}

std::pair<std::string, std::string> split_edge(const Token& tok, std::string_view text) {
  auto dash = text.find('-');
  if (dash == std::string_view::npos || text.find('-', dash + 1) != std::string_view::npos) {
    throw ParseError("expected an edge 'u-v', got '" + tok.text + "'", tok.offset);
  }
  std::string u(text.substr(0, dash));
  std::string v(text.substr(dash + 1));
  if (!valid_name(u)) throw ParseError("bad vertex name '" + u + "'", tok.offset);
  if (!valid_name(v)) throw ParseError("bad vertex name '" + v + "'", tok.offset + dash + 1);
  return {u, v};
}

struct RawSpec {
  std::vector<std::pair<std::string, std::string>> tree;
  std::vector<std::pair<std::pair<std::string, std::string>, int>> cycles;
};

BalloonInput assemble(const RawSpec& raw) {
  std::vector<std::string> names;
  std::map<std::string, int> index;
  auto id = [&](const std::string& name) {
    auto [it, fresh] = index.emplace(name, static_cast<int>(names.size()));
    if (fresh) names.push_back(name);
    return it->second;
  };
  std::vector<Edge> edges;
  for (const auto& [u, v] : raw.tree) {
    if (u == v) throw StructureError("self-loop at '" + u + "' in the tree");
    int a = id(u);
    int b = id(v);
    edges.emplace_back(a, b);
  }
  std::vector<int> lengths(edges.size(), 0);
  std::vector<bool> seen(edges.size(), false);
  for (const auto& [uv, len] : raw.cycles) {
    auto iu = index.find(uv.first);
    auto iv = index.find(uv.second);
    int e = -1;
    if (iu != index.end() && iv != index.end()) {
      auto it = std::find(edges.begin(), edges.end(), Edge(iu->second, iv->second));
      if (it != edges.end()) e = static_cast<int>(it - edges.begin());
    }
    if (e < 0) throw CompletenessError("cycle length given for non-edge " + uv.first + "-" + uv.second);
    if (seen[e]) throw CompletenessError("edge " + uv.first + "-" + uv.second + " has two cycle lengths");
    seen[e] = true;
    lengths[e] = len;
  }
  return make_balloon_input(std::move(names), std::move(edges), std::move(lengths));
}

}  // namespace

BalloonInput make_balloon_input(std::vector<std::string> names, std::vector<Edge> edges, std::vector<int> lengths) {
  const int n = static_cast<int>(names.size());
  if (edges.empty()) throw StructureError("the tree needs at least one edge");
  if (n > max_vertices()) throw CapacityError("tree has more vertices than the cap");
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u == e.v) throw StructureError("self-loop at '" + names[e.u] + "'");
    if (g.has_edge(e.u, e.v)) throw StructureError("duplicate edge " + names[e.u] + "-" + names[e.v]);
    g.add_edge(e.u, e.v);
  }
  if (!g.is_connected()) throw StructureError("the edge set is disconnected, not a tree");
  if (static_cast<int>(edges.size()) != n - 1) throw StructureError("the edge set contains a cycle, not a tree");
  if (lengths.size() != edges.size()) throw CompletenessError("every tree edge needs exactly one cycle length");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::string name = names[edges[e].u] + "-" + names[edges[e].v];
    if (lengths[e] == 0) throw CompletenessError("missing cycle length for edge " + name);
    if (lengths[e] < 3 || lengths[e] % 2 == 0) {
      throw LengthError("cycle length " + std::to_string(lengths[e]) + " for edge " + name + " must be odd and >= 3");
    }
  }
  BalloonInput in;
  in.tree.names = std::move(names);
  in.tree.edges = std::move(edges);
  in.tree.graph = g;
  in.spec.lengths = std::move(lengths);
  auto [a, b] = bipartition(in.tree, in.spec);
  in.tree.side_a = a;
  in.tree.side_b = b;
  return in;
}

BalloonInput parse_spec(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') lines.emplace_back(line.substr(first), pos + first);
    pos = end + 1;
  }
  if (lines.size() != 2) throw ParseError("expected a 'tree:' line followed by a 'cycles:' line", 0);
  if (!lines[0].first.starts_with("tree:")) throw ParseError("first line must start with 'tree:'", lines[0].second);
  if (!lines[1].first.starts_with("cycles:")) throw ParseError("second line must start with 'cycles:'", lines[1].second);

  RawSpec raw;
  for (const Token& tok : tokens_after(lines[0].first, lines[0].second, "tree:")) {
    raw.tree.push_back(split_edge(tok, tok.text));
  }
  for (const Token& tok : tokens_after(lines[1].first, lines[1].second, "cycles:")) {
    auto colon = tok.text.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'u-v:L', got '" + tok.text + "'", tok.offset);
    auto uv = split_edge(tok, std::string_view(tok.text).substr(0, colon));
    std::string len = tok.text.substr(colon + 1);
    if (len.empty() || len.size() > 6 || !std::all_of(len.begin(), len.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw ParseError("bad cycle length '" + len + "'", tok.offset + colon + 1);
    }
    raw.cycles.emplace_back(uv, std::stoi(len));
  }
  return assemble(raw);
}

BalloonInput parse_spec_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte > 0 ? e.byte - 1 : 0);
  }
  auto name_of = [](const nlohmann::json& j) -> std::string {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw ParseError("vertex names must be strings or integers", 0);
  };
  if (!doc.is_object() || !doc.contains("tree") || !doc.contains("cycles")) {
    throw ParseError("JSON spec needs 'tree' and 'cycles' keys", 0);
  }
  RawSpec raw;
  if (!doc["tree"].is_array()) throw ParseError("'tree' must be a list of edges", 0);
  for (const auto& e : doc["tree"]) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each tree edge must be a 2-element list", 0);
    std::string u = name_of(e[0]);
    std::string v = name_of(e[1]);
    if (!valid_name(u) || !valid_name(v)) throw ParseError("bad vertex name in tree edge", 0);
    raw.tree.emplace_back(u, v);
  }
  if (!doc["cycles"].is_object()) throw ParseError("'cycles' must map 'u-v' to a length", 0);
  for (const auto& [key, value] : doc["cycles"].items()) {
    Token tok{key, 0};
    if (!value.is_number_integer()) throw ParseError("cycle length for " + key + " must be an integer", 0);
    raw.cycles.emplace_back(split_edge(tok, key), value.get<int>());
  }
  return assemble(raw);
}

BalloonInput load_spec_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open spec file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  if (path.size() >= 5 && path.ends_with(".json")) return parse_spec_json(buf.str());
  return parse_spec(buf.str());
}

std::string format_spec(const BalloonInput& input) {
  const auto& t = input.tree;
  std::string out = "tree:";
  for (std::size_t e = 0; e < t.edges.size(); ++e) out += " " + t.edge_name(static_cast<int>(e));
  out += "\ncycles:";
  for (std::size_t e = 0; e < t.edges.size(); ++e) {
    out += " " + t.edge_name(static_cast<int>(e)) + ":" + std::to_string(input.spec.lengths[e]);
  }
  return out + "\n";
}

std::pair<VertexSet, VertexSet> bipartition(const BipartiteTree& tree, const BalloonSpec& spec) {
  const Graph& g = tree.graph;
  VertexSet even = bit(0);
  VertexSet seen = bit(0);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (VertexSet s = g.row(u) & ~seen; s; s &= s - 1) {
      int w = lowest(s);
      seen |= bit(w);
      if (!(even & bit(u))) even |= bit(w);
      stack.push_back(w);
    }
  }
  VertexSet odd = g.vertices() & ~even;
  if (popcount(even) < popcount(odd)) return {even, odd};
  if (popcount(odd) < popcount(even)) return {odd, even};
  bool even_good = validate_good(tree, spec, even).good;
  bool odd_good = validate_good(tree, spec, odd).good;
  if (even_good != odd_good) return even_good ? std::pair{even, odd} : std::pair{odd, even};
  int least = 0;
  for (int v = 1; v < g.order(); ++v) {
    if (tree.names[v] < tree.names[least]) least = v;
  }
  return (even & bit(least)) ? std::pair{even, odd} : std::pair{odd, even};
}

GoodnessReport validate_good(const BipartiteTree& tree, const BalloonSpec& spec, VertexSet side_a) {
  GoodnessReport report;
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    int e = static_cast<int>(i);
    if (edge_type(spec, e) != EdgeType::I) continue;
    const Edge& uv = tree.edges[e];
    if (!tree.is_leaf_edge(e)) {
      report.violations.push_back({e, "triangle edge " + tree.edge_name(e) + " is not a leaf-edge"});
      continue;
    }
    for (int end : {uv.u, uv.v}) {
      if (!tree.is_leaf(end) && !(side_a & bit(end))) {
        report.violations.push_back(
            {e, "triangle edge " + tree.edge_name(e) + " has its non-leaf end '" + tree.names[end] + "' outside A"});
      }
    }
  }
  report.good = report.violations.empty();
  return report;
}

GoodnessReport validate_good(const BipartiteTree& tree, const BalloonSpec& spec) {
  return validate_good(tree, spec, tree.side_a);
}

AnalysisReport analyze(const BipartiteTree& tree, const BalloonSpec& spec) {
  GoodnessReport good = validate_good(tree, spec);
  if (!good.good) throw PreconditionError("the odd-ballooning is not good: " + good.violations.front().reason);
  AnalysisReport r;
  r.good = true;
  r.a = tree.a();
  r.b_size = popcount(tree.side_b);
  r.k = kMaxVertices;
  for (VertexSet s = tree.side_a; s; s &= s - 1) r.k = std::min(r.k, tree.graph.degree(lowest(s)));
  r.k1 = kMaxVertices;
  for (VertexSet s = tree.side_a; s; s &= s - 1) {
    int v = lowest(s);
    if (tree.graph.degree(v) != r.k) continue;
    int triangles = 0;
    for (VertexSet t = tree.graph.row(v); t; t &= t - 1) {
      triangles += edge_type(spec, tree.edge_index(v, lowest(t))) == EdgeType::I;
    }
    if (triangles < r.k1) {
      r.k1 = triangles;
      r.u = v;
    }
  }
  r.u_name = tree.names[r.u];
  r.nu = max_matching(tree.graph);
  r.beta = min_vertex_cover(tree.graph);
  r.branch = r.k == r.k1 ? Branch::k_eq_k1 : Branch::k_gt_k1;
  return r;
}

Graph build_balloon(const BipartiteTree& tree, const BalloonSpec& spec) {
  int total = tree.order();
  for (int len : spec.lengths) total += len - 2;
  if (total > max_vertices()) {
    throw CapacityError("odd-ballooning needs " + std::to_string(total) + " vertices, above the cap");
  }
  Graph g(total);
  int next = tree.order();
  for (std::size_t e = 0; e < tree.edges.size(); ++e) {
    const Edge& uv = tree.edges[e];
    g.add_edge(uv.u, uv.v);
    int prev = uv.u;
    for (int i = 0; i < spec.lengths[e] - 2; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, uv.v);
  }
  return g;
}

BalloonInput balloon_from_tree(const Graph& tree, std::vector<int> lengths) {
  std::vector<std::string> names;
  for (int v = 0; v < tree.order(); ++v) names.push_back(std::to_string(v + 1));
  return make_balloon_input(std::move(names), tree.edges(), std::move(lengths));
}

}  // namespace tb
