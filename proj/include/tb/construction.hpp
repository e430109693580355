#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tb/balloon.hpp"
#include "tb/family.hpp"
#include "tb/graph.hpp"

namespace tb {

enum class Role { X, X1, X2 };

std::string role_name(Role r);

/// Extremal candidate with its vertex roles.  X holds the a-1 universal
/// vertices, X1 and X2 the two Turan sides (X1 the larger).
struct LabeledConstruction {
  Graph graph;
  std::vector<Role> roles;
  VertexSet x = 0;
  VertexSet x1 = 0;
  VertexSet x2 = 0;
  Graph x_graph;                  // graph embedded into X
  Graph x1_graph;                 // K_{k-1,k-1} or F, on the first vertices of X1
  VertexSet x1_embedded = 0;      // X1 vertices carrying x1_graph
  std::string x1_description;
  Branch branch = Branch::k_gt_k1;
};

/// Red/blue colouring of K_n, stored as the red graph.
struct EdgeColoring {
  Graph red;

  int order() const { return red.order(); }
  Graph blue() const { return red.complement(); }
  bool is_red(int u, int v) const { return red.has_edge(u, v); }
};

/// A graph with nu <= k-1, Delta <= k-1 and f(k-1, k-1) edges, found by
/// searching connected graphs under both bounds and combining components.
/// k <= 5.
Graph extremal_small_F(int k);

/// A family-free graph on m vertices with the most edges, and that count.
/// Search removes edges from K_m level by level until a family-free class
/// appears; ties go to the least canonical key.  m <= 7.
std::pair<Graph, int> max_B_free(int m, const GraphFamily& family);

/// Requires a good ballooning, a - 1 <= 7 and room for the embedded graphs.
LabeledConstruction extremal_candidate(int n, const BipartiteTree& tree, const BalloonSpec& spec);

/// Red: the extremal candidate.  Blue: every other pair, including the pairs
/// inside X that the embedded graph leaves out.  Requires branch k > k1.
EdgeColoring coloring_candidate(int n, const BipartiteTree& tree, const BalloonSpec& spec);

}  // namespace tb
