#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tb/graph.hpp"

namespace tb {

/// Tree skeleton with its bipartition; `side_a` is the smaller side A.
struct BipartiteTree {
  std::vector<std::string> names;  // vertex i is names[i], indexed by first appearance
  std::vector<Edge> edges;         // input order; Edge stores (min, max) index
  Graph graph;
  VertexSet side_a = 0;
  VertexSet side_b = 0;

  int order() const { return graph.order(); }
  int a() const { return popcount(side_a); }
  bool is_leaf(int v) const { return graph.degree(v) == 1; }
  bool is_leaf_edge(int e) const { return is_leaf(edges[e].u) || is_leaf(edges[e].v); }
  int edge_index(int u, int v) const;  // -1 when uv is not a tree edge
  std::string edge_name(int e) const;
};

/// Odd cycle length per tree edge, parallel to BipartiteTree::edges.
struct BalloonSpec {
  std::vector<int> lengths;
};

enum class EdgeType { I, II };

inline EdgeType edge_type(const BalloonSpec& spec, int e) { return spec.lengths[e] == 3 ? EdgeType::I : EdgeType::II; }

struct BalloonInput {
  BipartiteTree tree;
  BalloonSpec spec;
};

/// Validates a tree + lengths and fixes the bipartition.  Throws
/// StructureError, LengthError or CompletenessError.
BalloonInput make_balloon_input(std::vector<std::string> names, std::vector<Edge> edges, std::vector<int> lengths);

/// Two-line text form:
///   tree: u-v u-w ...
///   cycles: u-v:L u-w:L ...
BalloonInput parse_spec(std::string_view text);
/// JSON form: {"tree": [["u","v"], ...], "cycles": {"u-v": L, ...}}.
BalloonInput parse_spec_json(std::string_view text);
/// Reads a file; `.json` selects the JSON form.
BalloonInput load_spec_file(const std::string& path);
std::string format_spec(const BalloonInput& input);

/// Sides of the tree's 2-colouring.  The smaller side is A.  On a tie, the side
/// that makes the ballooning good is A; if both or neither do, the side holding
/// the lexicographically least vertex name is A.
std::pair<VertexSet, VertexSet> bipartition(const BipartiteTree& tree, const BalloonSpec& spec);

struct GoodnessViolation {
  int edge;
  std::string reason;
};

struct GoodnessReport {
  bool good = true;
  std::vector<GoodnessViolation> violations;
};

/// Good: every triangle (Type I) edge is a leaf-edge whose non-leaf end, if any, lies in `side_a`.
GoodnessReport validate_good(const BipartiteTree& tree, const BalloonSpec& spec, VertexSet side_a);
GoodnessReport validate_good(const BipartiteTree& tree, const BalloonSpec& spec);

enum class Branch { k_gt_k1, k_eq_k1 };

struct AnalysisReport {
  int a = 0;
  int b_size = 0;
  int k = 0;   // min degree over A
  int k1 = 0;  // triangle edges at the selected u
  int u = -1;
  std::string u_name;
  int beta = 0;
  int nu = 0;
  bool good = false;
  Branch branch = Branch::k_gt_k1;
};

/// Throws PreconditionError when the ballooning is not good.
AnalysisReport analyze(const BipartiteTree& tree, const BalloonSpec& spec);

/// The odd-ballooning T_o: tree vertices keep their indices; each edge's
/// length-2 new path vertices follow in edge order.
Graph build_balloon(const BipartiteTree& tree, const BalloonSpec& spec);

/// Named tree from an unlabelled tree graph; vertex i is named str(i+1).
BalloonInput balloon_from_tree(const Graph& tree, std::vector<int> lengths);

}  // namespace tb
