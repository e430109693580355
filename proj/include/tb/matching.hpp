#pragma once

#include <vector>

#include "tb/graph.hpp"

namespace tb {

/// Maximum matching of a general graph (Edmonds' blossom search).
/// mate[v] is v's partner, or -1 when v is unmatched.
std::vector<int> maximum_matching(const Graph& g);

/// Matching number nu(G).
int max_matching(const Graph& g);

/// Vertex cover number beta(G), exact.  Non-bipartite inputs are limited to
/// 24 vertices; bipartite inputs are cross-checked against nu(G).
int min_vertex_cover(const Graph& g);

bool is_vertex_cover(const Graph& g, VertexSet cover);

}  // namespace tb
