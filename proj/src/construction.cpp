#include "tb/construction.hpp"

#include <algorithm>
#include <map>

#include "tb/canon.hpp"
#include "tb/decomposition.hpp"
#include "tb/enumerate.hpp"
#include "tb/error.hpp"
#include "tb/matching.hpp"
#include "tb/subgraph.hpp"

namespace tb {

std::string role_name(Role r) {
  switch (r) {
    case Role::X: return "X";
    case Role::X1: return "X1";
    case Role::X2: return "X2";
  }
  return "?";
}

Graph extremal_small_F(int k) {
  if (k < 1) throw ParameterError("F needs k >= 1");
  if (k > 5) throw CapacityError("F is searched only for k <= 5");
  const int bound = k - 1;
  if (bound == 0) return Graph(0);
  // Best connected graph for each matching number, then the best combination
  // of components whose matching numbers sum to at most k-1.
  auto levels = graphs_by_edge_count(
      kMaxVertices,
      [&](const Graph& g) {
        return g.order() <= kMaxCanonicalVertices && g.max_degree() <= bound && max_matching(g) <= bound;
      },
      true);
  std::vector<Graph> best(bound + 1);
  std::vector<int> best_edges(bound + 1, -1);
  for (const auto& level : levels) {
    for (const Graph& g : level) {
      int nu = max_matching(g);
      if (nu >= 1 && g.size() > best_edges[nu]) {
        best_edges[nu] = g.size();
        best[nu] = g;
      }
    }
  }
  std::vector<int> dp(bound + 1, 0);
  std::vector<int> pick(bound + 1, 0);
  for (int t = 1; t <= bound; ++t) {
    dp[t] = dp[t - 1];
    pick[t] = 0;
    for (int j = 1; j <= t; ++j) {
      if (best_edges[j] >= 0 && dp[t - j] + best_edges[j] > dp[t]) {
        dp[t] = dp[t - j] + best_edges[j];
        pick[t] = j;
      }
    }
  }
  Graph out(0);
  for (int t = bound; t > 0;) {
    if (pick[t] == 0) {
      --t;
      continue;
    }
    out = disjoint_union(out, best[pick[t]]);
    t -= pick[t];
  }
  return out;
}

std::pair<Graph, int> max_B_free(int m, const GraphFamily& family) {
  if (m < 0) throw ParameterError("max_B_free needs m >= 0");
  if (m > 7) throw CapacityError("max_B_free is limited to m <= 7");
  std::vector<SubgraphMatcher> forbidden;
  for (const FamilyMember& f : family.members()) forbidden.emplace_back(f.graph);
  std::map<CanonicalKey, Graph> level;
  level.emplace(canonical_key(complete_graph(m)), complete_graph(m));
  while (!level.empty()) {
    for (const auto& [key, g] : level) {
      if (is_free_of(g, forbidden)) return {canonical_form(g), g.size()};
    }
    std::map<CanonicalKey, Graph> next;
    for (const auto& [key, g] : level) {
      for (const Edge& e : g.edges()) {
        Graph h = g;
        h.remove_edge(e.u, e.v);
        next.emplace(canonical_key(h), std::move(h));
      }
    }
    level = std::move(next);
  }
  throw PreconditionError("no family-free graph on " + std::to_string(m) + " vertices exists");
}

LabeledConstruction extremal_candidate(int n, const BipartiteTree& tree, const BalloonSpec& spec) {
  AnalysisReport an = analyze(tree, spec);
  const int xs = an.a - 1;
  if (xs > 7) throw CapacityError("the X part is built exactly only for a - 1 <= 7");
  if (n < an.a) throw PreconditionError("construction needs n >= a");
  if (n > max_vertices()) throw CapacityError("construction exceeds " + std::to_string(max_vertices()) + " vertices");
  const int rest = n - xs;
  const int x1_size = (rest + 1) / 2;

  LabeledConstruction c;
  c.branch = an.branch;
  c.x = full_set(xs);
  c.x1 = full_set(xs + x1_size) & ~c.x;
  c.x2 = full_set(n) & ~c.x & ~c.x1;
  if (an.branch == Branch::k_eq_k1) {
    c.x_graph = Graph(xs);
    c.x1_graph = extremal_small_F(an.k);
    c.x1_description = "F: f(" + std::to_string(an.k - 1) + "," + std::to_string(an.k - 1) + ") extremal graph";
  } else {
    c.x_graph = max_B_free(xs, b_family(tree, spec)).first;
    c.x1_graph = complete_bipartite(an.k - 1, an.k - 1);
    c.x1_description = "K_{" + std::to_string(an.k - 1) + "," + std::to_string(an.k - 1) + "}";
  }
  if (c.x1_graph.order() > x1_size) {
    throw PreconditionError("n = " + std::to_string(n) + " leaves X1 too small for " + c.x1_description);
  }

  Graph g(n);
  c.roles.assign(n, Role::X2);
  for (int v = 0; v < n; ++v) {
    if (c.x & bit(v)) c.roles[v] = Role::X;
    else if (c.x1 & bit(v)) c.roles[v] = Role::X1;
  }
  for (int u = 0; u < xs; ++u) {
    for (int v = xs; v < n; ++v) g.add_edge(u, v);
  }
  for (const Edge& e : c.x_graph.edges()) g.add_edge(e.u, e.v);
  for (VertexSet s = c.x1; s; s &= s - 1) {
    for (VertexSet t = c.x2; t; t &= t - 1) g.add_edge(lowest(s), lowest(t));
  }
  for (const Edge& e : c.x1_graph.edges()) g.add_edge(xs + e.u, xs + e.v);
  c.x1_embedded = full_set(c.x1_graph.order()) << xs;
  c.graph = g;
  return c;
}

EdgeColoring coloring_candidate(int n, const BipartiteTree& tree, const BalloonSpec& spec) {
  if (analyze(tree, spec).branch != Branch::k_gt_k1) throw PreconditionError("the colouring candidate needs k > k1");
  return EdgeColoring{extremal_candidate(n, tree, spec).graph};
}

}  // namespace tb
