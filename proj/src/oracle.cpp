#include "tb/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "tb/canon.hpp"
#include "tb/construction.hpp"
#include "tb/enumerate.hpp"
#include "tb/error.hpp"
#include "tb/formulas.hpp"
#include "tb/matching.hpp"
#include "tb/subgraph.hpp"

namespace tb {

ExResult ex_exact(int n, const std::vector<Graph>& family) {
  if (n < 0) throw ParameterError("ex(n, F) needs n >= 0");
  if (n > 10) throw CapacityError("exact ex(n, F) is limited to n <= 10");
  if (family.empty()) throw ParameterError("ex(n, F) needs a nonempty family");
  const auto start = std::chrono::steady_clock::now();
  std::vector<SubgraphMatcher> matchers;
  matchers.reserve(family.size());
  for (const Graph& f : family) matchers.emplace_back(f);
  OrderLevels gen = graphs_by_order(n, [&](const Graph& g) { return is_free_of(g, matchers); });
  const std::vector<Graph>& top = gen.levels[n];
  if (top.empty()) throw PreconditionError("no family-free graph on " + std::to_string(n) + " vertices exists");
  ExResult r;
  r.value = -1;
  for (const Graph& g : top) {
    if (g.size() > r.value) {
      r.value = g.size();
      r.witness = g;
    }
  }
  r.nodes_explored = gen.nodes;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

ExResult ex_exact(int n, const GraphFamily& family) {
  std::vector<Graph> graphs;
  for (const FamilyMember& m : family.members()) graphs.push_back(m.graph);
  return ex_exact(n, graphs);
}

int ex_bounded_degree_matching(int nu, int delta) {
  if (nu < 0 || delta < 0) throw ParameterError("bounds must be >= 0");
  if (nu > 3 || delta > 3) throw CapacityError("exhaustive f(nu, delta) is limited to nu, delta <= 3");
  auto levels = graphs_by_edge_count(kMaxVertices, [&](const Graph& g) {
    return g.max_degree() <= delta && max_matching(g) <= nu;
  });
  int best = 0;
  for (std::size_t m = 0; m < levels.size(); ++m) {
    if (!levels[m].empty()) best = static_cast<int>(m);
  }
  return best;
}

StarMatchingResult star_matching_max(int k) {
  if (k < 1) throw ParameterError("star-matching bound needs k >= 1");
  if (k > 4) throw CapacityError("star-matching search is limited to k <= 4");
  std::vector<SubgraphMatcher> forbidden;
  forbidden.emplace_back(star_graph(k));
  forbidden.emplace_back(graph_from_edges(2 * k, [&] {
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i) es.emplace_back(2 * i, 2 * i + 1);
    return es;
  }()));
  forbidden.emplace_back(disjoint_union(star_graph(k - 1), complete_graph(2)));
  auto levels = graphs_by_edge_count(kMaxVertices, [&](const Graph& g) { return is_free_of(g, forbidden); });
  StarMatchingResult r;
  for (std::size_t m = 0; m < levels.size(); ++m) {
    if (!levels[m].empty()) {
      r.value = static_cast<int>(m);
      r.witnesses = levels[m];
    }
  }
  return r;
}

int uncovered_edges(const Graph& g, const Graph& h) {
  SubgraphMatcher matcher(h);
  if (!matcher.found_in(g)) return g.size();
  int count = 0;
  for (const Edge& e : g.edges()) count += !matcher.edge_in_copy(g, e);
  return count;
}

int f2_exact(int n, const Graph& h) {
  if (n < 0) throw ParameterError("f(n, H) needs n >= 0");
  if (n > 7) throw CapacityError("exact f(n, H) is limited to n <= 7");
  const int pairs = n * (n - 1) / 2;
  if (h.order() > n) return pairs;
  // Colourings up to relabelling are the isomorphism classes of the red graph.
  OrderLevels gen = graphs_by_order(n, [](const Graph&) { return true; });
  std::map<CanonicalKey, int> uncovered;
  for (const Graph& g : gen.levels[n]) uncovered.emplace(canonical_key(g), uncovered_edges(g, h));
  int best = 0;
  for (const Graph& g : gen.levels[n]) {
    best = std::max(best, uncovered.at(canonical_key(g)) + uncovered.at(canonical_key(g.complement())));
  }
  return best;
}

int f2_count_uncovered(const EdgeColoring& coloring, const Graph& h) {
  if (coloring.order() > 40) throw CapacityError("uncovered-edge counting is limited to 40 vertices");
  return uncovered_edges(coloring.red, h) + uncovered_edges(coloring.blue(), h);
}

int PartitionedGraph::cross_edges() const {
  int c = 0;
  for (VertexSet s = part0; s; s &= s - 1) c += popcount(graph.row(lowest(s)) & part1());
  return c;
}

namespace {

// S_{k-l} u l K_2.
Graph star_plus_matching(int star, int edges) {
  Graph g(star + 1 + 2 * edges);
  for (int v = 1; v <= star; ++v) g.add_edge(0, v);
  for (int i = 0; i < edges; ++i) g.add_edge(star + 1 + 2 * i, star + 2 + 2 * i);
  return g;
}

}  // namespace

PartitionAudit lemma_partition_audit(const PartitionedGraph& p, int k, int k1) {
  if (k < 1 || k1 < 0) throw ParameterError("partition audit needs k >= 1 and k1 >= 0");
  if (k < k1) throw ParameterError("partition audit needs k >= k1");
  const Graph& g = p.graph;
  PartitionAudit r;

  std::vector<SubgraphMatcher> forbidden;
  const int upto = std::min(k - k1, k - 2);
  for (int l = 0; l <= k - 1; ++l) {
    if (l <= upto || l == k - 1) forbidden.emplace_back(star_plus_matching(k - l, l));
  }
  bool premises = true;
  for (int i = 0; i < 2 && premises; ++i) premises = is_free_of(p.side(i), forbidden);
  for (int i = 0; i < 2 && premises; ++i) {
    const VertexSet own = p.part(i);
    const VertexSet other = p.part(1 - i);
    for (VertexSet s = own; s && premises; s &= s - 1) {
      int v = lowest(s);
      int inside = popcount(g.row(v) & own);
      VertexSet across = g.row(v) & other;
      if (inside + max_matching(g.induced(across)) > k - 1) premises = false;
      if (premises && k > k1 && inside == k - 1) {
        for (VertexSet t = across; t; t &= t - 1) {
          if (g.row(lowest(t)) & other) {
            premises = false;
            break;
          }
        }
      }
    }
  }
  r.premises_hold = premises;

  const long long n0 = popcount(p.part0);
  const long long n1 = popcount(p.part1());
  r.lhs = p.side(0).size() + p.side(1).size() - (n0 * n1 - p.cross_edges());
  r.bound = k > k1 ? static_cast<long long>(k - 1) * (k - 1) : chvatal_hanson(k - 1, k - 1);
  r.inequality_holds = r.lhs <= r.bound;
  return r;
}

bool degree_sum_audit(const Graph& g, int b, int delta) {
  if (delta < 0) delta = g.max_degree();
  if (g.max_degree() > delta) throw PreconditionError("degree-sum bound needs Delta(G) <= delta");
  if (b < 0 || b > delta - 2) throw PreconditionError("degree-sum bound needs 0 <= b <= delta - 2");
  long long lhs = 0;
  for (int v = 0; v < g.order(); ++v) lhs += std::min(g.degree(v), b);
  return lhs <= static_cast<long long>(max_matching(g)) * (b + delta);
}

}  // namespace tb
