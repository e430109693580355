#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "tb/graph.hpp"

namespace tb {

/// Requires the pattern edge to be mapped onto the host edge (either orientation).
struct Anchor {
  Edge pattern_edge;
  Edge host_edge;
};

/// Non-induced subgraph search for one fixed pattern against many hosts.
///
/// Backtracking over pattern vertices in a connectivity-first order.  Candidate
/// sets are word-wide intersections of mapped neighbours' rows, filtered by
/// degree, with forward checking on unmapped neighbours.  Host vertices with
/// identical neighbourhoods (twins) are interchangeable while unused, so only
/// the least unused twin of each class is tried.
class SubgraphMatcher {
 public:
  explicit SubgraphMatcher(const Graph& pattern);

  const Graph& pattern() const { return pattern_; }

  bool found_in(const Graph& host) const;
  bool found_in(const Graph& host, const Anchor& anchor) const;
  /// True when some copy of the pattern in `host` uses `host_edge`.
  bool edge_in_copy(const Graph& host, Edge host_edge) const;

  /// Search nodes visited by the last call (diagnostics).
  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Search;

  bool run(const Graph& host, const std::optional<Anchor>& anchor) const;

  Graph pattern_;
  int core_count_ = 0;
  std::vector<int> default_order_;
  mutable std::uint64_t nodes_ = 0;
};

bool contains_subgraph(const Graph& host, const Graph& pattern,
                       const std::optional<Anchor>& anchor = std::nullopt);

/// True when `host` contains no member of `family`.
bool is_free_of(const Graph& host, const std::vector<SubgraphMatcher>& family);

}  // namespace tb
