#include "tb/decomposition.hpp"

#include <algorithm>

#include "tb/enumerate.hpp"
#include "tb/error.hpp"
#include "tb/matching.hpp"
#include "tb/subgraph.hpp"

namespace tb {

namespace {

Edge skeleton_edge(const DerivedGraph& g, Edge e) {
  auto it = g.origin.find(e);
  return it == g.origin.end() ? e : it->second;
}

std::string names_of(const BipartiteTree& tree, VertexSet s) {
  std::string out = "{";
  for (VertexSet t = s; t; t &= t - 1) {
    if (out.size() > 1) out += ",";
    out += tree.names[lowest(t)];
  }
  return out + "}";
}

}  // namespace

DerivedGraph split_vertices(const Graph& g, VertexSet split) {
  split &= g.vertices();
  for (VertexSet s = split; s; s &= s - 1) {
    if (g.row(lowest(s)) & split) throw PreconditionError("vertices to split must form an independent set");
  }
  std::vector<int> first(g.order());
  int total = 0;
  for (int v = 0; v < g.order(); ++v) {
    first[v] = total;
    total += (split & bit(v)) ? g.degree(v) : 1;
  }
  if (total > max_vertices()) throw CapacityError("splitting exceeds the vertex cap");
  DerivedGraph out{Graph(total), {}, std::vector<int>(total, -1)};
  for (int v = 0; v < g.order(); ++v) {
    int copies = (split & bit(v)) ? g.degree(v) : 1;
    for (int i = 0; i < copies; ++i) out.source[first[v] + i] = v;
  }
  // Copy i of a split vertex takes its i-th neighbour in increasing order.
  auto end_for = [&](int v, int w) {
    if (!(split & bit(v))) return first[v];
    return first[v] + popcount(g.row(v) & full_set(w));
  };
  for (const Edge& e : g.edges()) {
    int x = end_for(e.u, e.v);
    int y = end_for(e.v, e.u);
    out.graph.add_edge(x, y);
    out.origin.emplace(Edge(x, y), e);
  }
  return out;
}

DerivedGraph peel_edges(const DerivedGraph& g, std::span<const Edge> edges, const BipartiteTree& tree,
                        const BalloonSpec& spec) {
  for (const Edge& e : edges) {
    const std::string name = std::to_string(e.u) + "-" + std::to_string(e.v);
    if (e.v >= g.graph.order() || !g.graph.has_edge(e.u, e.v)) throw PreconditionError("cannot peel non-edge " + name);
    if (g.graph.degree(e.u) != 1 && g.graph.degree(e.v) != 1) {
      throw PreconditionError("cannot peel " + name + ": not a leaf-edge");
    }
    Edge sk = skeleton_edge(g, e);
    int idx = tree.edge_index(sk.u, sk.v);
    if (idx < 0) throw PreconditionError("edge " + name + " has no skeleton edge");
    if (edge_type(spec, idx) != EdgeType::II) {
      throw PreconditionError("cannot peel " + name + ": its cycle is a triangle");
    }
  }
  int added = 0;
  for (const Edge& e : edges) {
    if (g.graph.degree(e.u) != 1 || g.graph.degree(e.v) != 1) ++added;
  }
  if (g.graph.order() + added > max_vertices()) throw CapacityError("peeling exceeds the vertex cap");
  DerivedGraph out{Graph(g.graph.order() + added), g.origin, g.source};
  for (const Edge& e : g.graph.edges()) out.graph.add_edge(e.u, e.v);
  int next = g.graph.order();
  for (const Edge& e : edges) {
    int du = out.graph.degree(e.u);
    int dv = out.graph.degree(e.v);
    if (du == 1 && dv == 1) continue;
    int leaf = du == 1 ? e.u : e.v;
    int hub = leaf == e.u ? e.v : e.u;
    Edge sk = skeleton_edge(out, e);
    out.graph.remove_edge(leaf, hub);
    out.graph.add_edge(leaf, next);
    out.origin.erase(e);
    out.origin.emplace(Edge(leaf, next), sk);
    out.source.push_back(-1);
    ++next;
  }
  // Edges that became no-ops leave spare vertices unused; drop them.
  if (next < out.graph.order()) {
    out.graph = out.graph.induced(full_set(next));
    out.source.resize(next);
  }
  return out;
}

GraphFamily decomposition_family(const BipartiteTree& tree, const BalloonSpec& spec) {
  const Graph& t = tree.graph;
  if (t.order() > 12 || t.size() > 8) throw CapacityError("decomposition family is limited to 12 vertices and 8 edges");
  GraphFamily family;
  for (VertexSet split = 0;; ++split) {
    bool independent = true;
    for (VertexSet s = split; s && independent; s &= s - 1) independent = !(t.row(lowest(s)) & split);
    if (independent) {
      DerivedGraph base = split_vertices(t, split);
      std::vector<Edge> peelable;
      for (const Edge& e : base.graph.edges()) {
        int du = base.graph.degree(e.u);
        int dv = base.graph.degree(e.v);
        if ((du == 1) == (dv == 1)) continue;  // interior edge, or a no-op peel
        Edge sk = skeleton_edge(base, e);
        if (edge_type(spec, tree.edge_index(sk.u, sk.v)) == EdgeType::II) peelable.push_back(e);
      }
      const std::uint32_t subsets = 1U << peelable.size();
      for (std::uint32_t pick = 0; pick < subsets; ++pick) {
        std::vector<Edge> chosen;
        std::string peeled;
        for (std::size_t i = 0; i < peelable.size(); ++i) {
          if (!((pick >> i) & 1U)) continue;
          chosen.push_back(peelable[i]);
          Edge sk = skeleton_edge(base, peelable[i]);
          peeled += (peeled.empty() ? "" : ",") + tree.names[sk.u] + "-" + tree.names[sk.v];
        }
        DerivedGraph leaf = chosen.empty() ? base : peel_edges(base, chosen, tree, spec);
        family.insert(leaf.graph, "split " + names_of(tree, split) + "; peel {" + peeled + "}");
      }
    }
    if (split == full_set(t.order())) break;
  }
  family.prune_nonminimal();
  return family;
}

GraphFamily decomposition_oracle(const BipartiteTree& tree, const BalloonSpec& spec, int side) {
  const Graph balloon = build_balloon(tree, spec);
  const int e = tree.graph.size();
  const int needed = balloon.order() + 2 * (e + 1);
  if (side == 0) side = needed;
  if (side < needed) throw ParameterError("host side must hold a candidate plus a full copy of T_o");
  if (2 * side > max_vertices()) {
    throw CapacityError("oracle host needs " + std::to_string(2 * side) + " vertices, above the cap");
  }
  const SubgraphMatcher target(balloon);
  const Graph bipartite = complete_bipartite(side, side);
  auto levels = graphs_by_edge_count(e + 1, [](const Graph&) { return true; });
  GraphFamily family;
  for (std::size_t m = 1; m < levels.size(); ++m) {
    for (const Graph& cand : levels[m]) {
      Graph host = bipartite;
      for (const Edge& ce : cand.edges()) host.add_edge(ce.u, ce.v);
      if (target.found_in(host)) family.insert(cand, "embedding creates T_o");
    }
  }
  family.prune_nonminimal();
  return family;
}

GraphFamily b_family(const BipartiteTree& tree, const GraphFamily& decomposition) {
  const int a = tree.a();
  GraphFamily out;
  bool any = false;
  for (const FamilyMember& m : decomposition.members()) {
    if (min_vertex_cover(m.graph) >= a) continue;
    any = true;
    for (int size = 0; size < a; ++size) {
      for (VertexSet s : subsets_of_size(m.graph.vertices(), size)) {
        if (is_vertex_cover(m.graph, s)) out.insert(m.graph.induced(s), "cover of " + m.trace, false);
      }
    }
  }
  if (!any) out.insert(complete_graph(a), "no member has a covering below a", false);
  return out;
}

GraphFamily b_family(const BipartiteTree& tree, const BalloonSpec& spec) {
  return b_family(tree, decomposition_family(tree, spec));
}

}  // namespace tb
