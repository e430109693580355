#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tb/graph.hpp"

namespace tb {

using GraphPredicate = std::function<bool(const Graph&)>;

/// Isomorphism classes of graphs without isolated vertices, grouped by edge
/// count: levels[m] holds the classes with m edges (levels[0] is the empty
/// graph).  `keep` must be closed under taking subgraphs; graphs failing it
/// are not extended.  With `connected_only`, only connected graphs are built.
/// Each level is sorted by canonical key.
std::vector<std::vector<Graph>> graphs_by_edge_count(int max_edges, const GraphPredicate& keep,
                                                     bool connected_only = false);

struct OrderLevels {
  std::vector<std::vector<Graph>> levels;  // levels[v]: classes on v vertices
  std::uint64_t nodes = 0;                 // children examined
};

/// Isomorphism classes of graphs on 0..n vertices, built one vertex at a time
/// and deduplicated by canonical key.  `keep` must be closed under taking
/// induced subgraphs.  n <= 16.
OrderLevels graphs_by_order(int n, const GraphPredicate& keep);

/// All unlabelled trees on n vertices (n >= 1).
std::vector<Graph> trees_by_order(int n);

/// Subsets of `universe` of exactly `size` elements, in increasing numeric order.
std::vector<VertexSet> subsets_of_size(VertexSet universe, int size);

}  // namespace tb
