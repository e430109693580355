#include "tb/family.hpp"

#include <algorithm>

#include "tb/graph6.hpp"

namespace tb {

bool GraphFamily::insert(const Graph& g, std::string trace, bool strip_isolated) {
  Graph h = strip_isolated ? g.without_isolated() : g;
  std::vector<int> order = canonical_order(h);
  CanonicalKey key = key_for_order(h, order);
  if (members_.contains(key)) return false;
  members_.emplace(key, FamilyMember{h.relabel(order), key, std::move(trace)});
  return true;
}

bool GraphFamily::contains(const Graph& g, bool strip_isolated) const {
  return members_.contains(canonical_key(strip_isolated ? g.without_isolated() : g));
}

std::vector<FamilyMember> GraphFamily::members() const {
  std::vector<FamilyMember> out;
  out.reserve(members_.size());
  for (const auto& [key, m] : members_) out.push_back(m);
  return out;
}

void GraphFamily::prune_nonminimal() {
  std::vector<CanonicalKey> doomed;
  for (const auto& [key, big] : members_) {
    for (const auto& [other, small] : members_) {
      if (other == key || small.graph.size() > big.graph.size()) continue;
      if (contains_subgraph(big.graph, small.graph)) {
        doomed.push_back(key);
        break;
      }
    }
  }
  for (const auto& key : doomed) members_.erase(key);
}

std::vector<std::string> GraphFamily::graph6_lines() const {
  std::vector<std::string> out;
  for (const auto& [key, m] : members_) out.push_back(encode_graph6(m.graph));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubgraphMatcher> GraphFamily::matchers() const {
  std::vector<SubgraphMatcher> out;
  for (const auto& [key, m] : members_) out.emplace_back(m.graph);
  return out;
}

bool operator==(const GraphFamily& a, const GraphFamily& b) {
  if (a.members_.size() != b.members_.size()) return false;
  return std::equal(a.members_.begin(), a.members_.end(), b.members_.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first; });
}

}  // namespace tb
