#pragma once

#include <map>
#include <string>
#include <vector>

#include "tb/canon.hpp"
#include "tb/graph.hpp"
#include "tb/subgraph.hpp"

namespace tb {

struct FamilyMember {
  Graph graph;  // canonical form
  CanonicalKey key;
  std::string trace;
};

/// Isomorphism-deduplicated set of graphs, iterated in canonical-key order.
class GraphFamily {
 public:
  /// Adds g (isolated vertices removed when `strip_isolated`).  Returns false
  /// when an isomorphic member already exists; the first trace is kept.
  bool insert(const Graph& g, std::string trace = {}, bool strip_isolated = true);

  bool contains(const Graph& g, bool strip_isolated = true) const;
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  std::vector<FamilyMember> members() const;

  /// Removes every member that contains another member as a subgraph.
  void prune_nonminimal();

  /// Canonical graph6 strings, sorted.
  std::vector<std::string> graph6_lines() const;

  std::vector<SubgraphMatcher> matchers() const;

  friend bool operator==(const GraphFamily& a, const GraphFamily& b);

 private:
  std::map<CanonicalKey, FamilyMember> members_;
};

}  // namespace tb
