#pragma once

#include <cstdint>
#include <vector>

#include "tb/family.hpp"
#include "tb/graph.hpp"

namespace tb {

struct EdgeColoring;

struct ExResult {
  int value = 0;
  Graph witness;
  std::uint64_t nodes_explored = 0;
  double elapsed_ms = 0.0;
};

/// Exact ex(n, family) by vertex-by-vertex generation of family-free graphs
/// up to isomorphism.  n <= 10.  The witness is the least canonical form
/// among the maximisers.  Throws PreconditionError when no family-free graph
/// on n vertices exists (a member with at most n vertices and no edges).
ExResult ex_exact(int n, const std::vector<Graph>& family);
ExResult ex_exact(int n, const GraphFamily& family);

/// max e(G) over graphs with nu(G) <= nu and Delta(G) <= delta, by exhaustive
/// edge-by-edge generation.  nu, delta <= 3.
int ex_bounded_degree_matching(int nu, int delta);

struct StarMatchingResult {
  int value = 0;
  std::vector<Graph> witnesses;  // canonical forms, one per isomorphism class
};

/// Maximum size of a {S_k, kK_2, S_{k-1} u K_2}-free graph without isolated
/// vertices, with every maximiser.  1 <= k <= 4.
StarMatchingResult star_matching_max(int k);

/// Number of edges of g lying in no copy of h inside g.
int uncovered_edges(const Graph& g, const Graph& h);

/// max over 2-edge-colourings of K_n of the edges in no monochromatic h.  n <= 7.
int f2_exact(int n, const Graph& h);

/// Edges of the colouring lying in no copy of h within their own colour class.
int f2_count_uncovered(const EdgeColoring& coloring, const Graph& h);

/// Graph with a vertex partition V_0 (`part0`) and V_1 (the rest).
struct PartitionedGraph {
  Graph graph;
  VertexSet part0 = 0;

  VertexSet part1() const { return graph.vertices() & ~part0; }
  VertexSet part(int i) const { return i == 0 ? part0 : part1(); }
  Graph side(int i) const { return graph.induced(part(i)); }
  int cross_edges() const;
};

struct PartitionAudit {
  bool premises_hold = false;
  bool inequality_holds = false;
  long long lhs = 0;
  long long bound = 0;
};

/// Evaluates the three premises of the partition inequality literally and the
/// inequality e(G_0) + e(G_1) - (|V_0||V_1| - e(G_cr)) <= bound, where the
/// bound is (k-1)^2 for k > k1 and f(k-1, k-1) for k = k1.
/// Throws ParameterError unless 1 <= k and 0 <= k1 <= k.
PartitionAudit lemma_partition_audit(const PartitionedGraph& p, int k, int k1);

/// sum_v min(d(v), b) <= nu(G) (b + delta).  delta < 0 means Delta(G).
/// Throws PreconditionError unless Delta(G) <= delta and 0 <= b <= delta - 2.
bool degree_sum_audit(const Graph& g, int b, int delta = -1);

}  // namespace tb
