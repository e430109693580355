#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tb/graph.hpp"

namespace tb {

/// Header-less graph6; n <= 62.
std::string encode_graph6(const Graph& g);

/// Throws ParseError with the offending byte offset.
Graph decode_graph6(std::string_view text);

/// Graphviz text; `labels` may be empty or hold one label per vertex.
std::string export_dot(const Graph& g, const std::vector<std::string>& labels = {});

}  // namespace tb
