#pragma once

#include <string>
#include <vector>

#include "tb/graph.hpp"

namespace tb {

inline constexpr int kMaxCanonicalVertices = 16;

/// Byte string naming an isomorphism class: the vertex count followed by the
/// adjacency rows (two bytes each) under a canonical vertex order.
using CanonicalKey = std::string;

/// Canonical vertex order: order[i] is the vertex placed at position i.
///
/// Disconnected graphs are ordered component by component (components sorted
/// by key), trees by their centre-rooted AHU encoding, graphs with a
/// disconnected complement through the complement, and everything else by
/// individualisation-refinement keeping the least adjacency matrix.
/// Limited to 16 vertices.
std::vector<int> canonical_order(const Graph& g);

CanonicalKey canonical_key(const Graph& g);

/// The graph relabelled into canonical order.
Graph canonical_form(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

/// Key of g under an explicit order (no canonicalisation).
CanonicalKey key_for_order(const Graph& g, const std::vector<int>& order);

}  // namespace tb
