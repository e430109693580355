#pragma once

#include <map>
#include <span>

#include "tb/balloon.hpp"
#include "tb/family.hpp"
#include "tb/graph.hpp"

namespace tb {

/// Maps each edge of a derived graph to the skeleton edge it came from.
using EdgeOrigin = std::map<Edge, Edge>;

struct DerivedGraph {
  Graph graph;
  EdgeOrigin origin;
  std::vector<int> source;  // source[v]: vertex of the input graph v descends from (-1 when new)
};

/// Replaces every u in `split` by deg(u) pendant vertices, one per incident
/// edge.  Vertices are renumbered in input order, a split vertex expanding
/// in place.  Throws PreconditionError unless `split` is independent.
DerivedGraph split_vertices(const Graph& g, VertexSet split);

/// Re-hangs each listed leaf-edge on a fresh vertex (no-op when both ends are
/// leaves).  An edge is peelable only if its skeleton edge (through `origin`,
/// or itself when absent from `origin`) has a cycle of length >= 5.
DerivedGraph peel_edges(const DerivedGraph& g, std::span<const Edge> edges, const BipartiteTree& tree,
                        const BalloonSpec& spec);

/// Splitting/peeling family: every independent set split, then every
/// admissible peel subset; deduplicated and reduced to subgraph-minimal members.
/// |T| <= 12, e(T) <= 8.
GraphFamily decomposition_family(const BipartiteTree& tree, const BalloonSpec& spec);

/// Definition-based family: candidate graphs M with up to e(T)+1 edges are
/// embedded in one side of K_{side,side}; those whose host contains T_o are
/// kept and reduced to minimal members.  side = 0 picks |T_o| + 2e(T) + 2,
/// the least size for which unused twins never matter.
GraphFamily decomposition_oracle(const BipartiteTree& tree, const BalloonSpec& spec, int side = 0);

/// {K_a} when no member has a covering below a; otherwise the induced
/// subgraphs M[S] over all members and all coverings S with |S| < a.
GraphFamily b_family(const BipartiteTree& tree, const BalloonSpec& spec);
GraphFamily b_family(const BipartiteTree& tree, const GraphFamily& decomposition);

}  // namespace tb
