#include "tb/enumerate.hpp"

#include <map>

#include "tb/canon.hpp"
#include "tb/error.hpp"

namespace tb {

namespace {

std::vector<Graph> sorted_values(std::map<CanonicalKey, Graph>& found) {
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

void offer(std::map<CanonicalKey, Graph>& found, const Graph& h, const GraphPredicate& keep) {
  if (!keep(h)) return;
  if (h.order() > kMaxCanonicalVertices) {
    throw CapacityError("enumeration reached a graph on " + std::to_string(h.order()) +
                        " vertices, above the canonical-labelling cap");
  }
  std::vector<int> order = canonical_order(h);
  CanonicalKey key = key_for_order(h, order);
  if (!found.contains(key)) found.emplace(std::move(key), h.relabel(order));
}

Graph with_new_vertex(const Graph& g, VertexSet neighbours) {
  Graph h(g.order() + 1);
  for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
  for (VertexSet s = neighbours; s; s &= s - 1) h.add_edge(g.order(), lowest(s));
  return h;
}

}  // namespace

std::vector<std::vector<Graph>> graphs_by_edge_count(int max_edges, const GraphPredicate& keep, bool connected_only) {
  std::vector<std::vector<Graph>> levels{{Graph(0)}};
  for (int m = 0; m < max_edges; ++m) {
    std::map<CanonicalKey, Graph> next;
    for (const Graph& g : levels[m]) {
      const int n = g.order();
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          Graph h = g;
          h.add_edge(u, v);
          offer(next, h, keep);
        }
      }
      for (int u = 0; u < n; ++u) {
        Graph h = with_new_vertex(g, bit(u));
        offer(next, h, keep);
      }
      if (!connected_only || n == 0) {
        Graph h(n + 2);
        for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
        h.add_edge(n, n + 1);
        offer(next, h, keep);
      }
    }
    levels.push_back(sorted_values(next));
    if (levels.back().empty()) break;
  }
  return levels;
}

OrderLevels graphs_by_order(int n, const GraphPredicate& keep) {
  if (n > kMaxCanonicalVertices) throw CapacityError("graph generation by order is limited to 16 vertices");
  OrderLevels out;
  out.levels.push_back({Graph(0)});
  for (int v = 0; v < n; ++v) {
    std::map<CanonicalKey, Graph> next;
    for (const Graph& g : out.levels[v]) {
      for (VertexSet s = 0;; ++s) {
        ++out.nodes;
        offer(next, with_new_vertex(g, s), keep);
        if (s == full_set(v)) break;
      }
    }
    out.levels.push_back(sorted_values(next));
  }
  return out;
}

std::vector<Graph> trees_by_order(int n) {
  if (n < 1) throw ParameterError("trees need at least one vertex");
  if (n > kMaxCanonicalVertices) throw CapacityError("tree generation is limited to 16 vertices");
  std::vector<Graph> level{Graph(1)};
  for (int v = 1; v < n; ++v) {
    std::map<CanonicalKey, Graph> next;
    auto any = [](const Graph&) { return true; };
    for (const Graph& g : level) {
      for (int u = 0; u < v; ++u) offer(next, with_new_vertex(g, bit(u)), any);
    }
    level = sorted_values(next);
  }
  return level;
}

std::vector<VertexSet> subsets_of_size(VertexSet universe, int size) {
  std::vector<int> items;
  for (VertexSet s = universe; s; s &= s - 1) items.push_back(lowest(s));
  std::vector<VertexSet> out;
  if (size < 0 || size > static_cast<int>(items.size())) return out;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  for (;;) {
    VertexSet s = 0;
    for (int i : idx) s |= bit(items[i]);
    out.push_back(s);
    int i = size - 1;
    while (i >= 0 && idx[i] == static_cast<int>(items.size()) - size + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace tb
