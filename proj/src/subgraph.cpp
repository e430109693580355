#include "tb/subgraph.hpp"

#include <algorithm>

namespace tb {

namespace {

// Greedy connectivity-first order over the non-isolated pattern vertices,
// beginning with `start` (which may be empty).
std::vector<int> search_order(const Graph& p, std::vector<int> start) {
  VertexSet placed = 0;
  for (int v : start) placed |= bit(v);
  VertexSet core = p.vertices() & ~p.isolated_vertices();
  std::vector<int> order = std::move(start);
  while (placed != core) {
    int best = -1;
    int best_links = -1;
    int best_degree = -1;
    for (VertexSet s = core & ~placed; s; s &= s - 1) {
      int v = lowest(s);
      int links = popcount(p.row(v) & placed);
      int d = p.degree(v);
      if (links > best_links || (links == best_links && d > best_degree)) {
        best = v;
        best_links = links;
        best_degree = d;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }
  return order;
}

}  // namespace

struct SubgraphMatcher::Search {
  const Graph& host;
  const Graph& pattern;
  const std::vector<int>& order;
  std::array<int, kMaxVertices> position{};
  std::array<VertexSet, kMaxVertices> degree_ok{};
  std::array<VertexSet, kMaxVertices> lower_twins{};
  std::array<int, kMaxVertices> image{};
  std::array<VertexSet, 2> forced{~VertexSet{0}, ~VertexSet{0}};
  std::uint64_t nodes = 0;

  Search(const Graph& h, const Graph& p, const std::vector<int>& ord) : host(h), pattern(p), order(ord) {
    position.fill(-1);
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<int>(i);
    for (int v : order) {
      int need = p.degree(v);
      VertexSet ok = 0;
      for (int x = 0; x < h.order(); ++x) {
        if (h.degree(x) >= need) ok |= bit(x);
      }
      degree_ok[v] = ok;
    }
    for (int x = 0; x < h.order(); ++x) {
      for (int y = 0; y < x; ++y) {
        if ((h.row(x) & ~bit(y)) == (h.row(y) & ~bit(x))) lower_twins[x] |= bit(y);
      }
    }
  }

  // Host vertices still available to pattern vertex v given the first `depth` assignments.
  VertexSet domain(int v, std::size_t depth, VertexSet used) const {
    VertexSet cand = degree_ok[v] & ~used;
    for (VertexSet s = pattern.row(v); s && cand; s &= s - 1) {
      int q = lowest(s);
      if (position[q] >= 0 && static_cast<std::size_t>(position[q]) < depth) cand &= host.row(image[q]);
    }
    return cand;
  }

  bool dfs(std::size_t depth, VertexSet used) {
    if (depth == order.size()) return true;
    ++nodes;
    int v = order[depth];
    VertexSet cand = domain(v, depth, used);
    if (depth < 2) cand &= forced[depth];
    for (VertexSet s = cand; s; s &= s - 1) {
      int x = lowest(s);
      if (lower_twins[x] & cand) continue;
      image[v] = x;
      VertexSet now_used = used | bit(x);
      bool alive = true;
      for (VertexSet t = pattern.row(v); t; t &= t - 1) {
        int r = lowest(t);
        if (static_cast<std::size_t>(position[r]) > depth && domain(r, depth + 1, now_used) == 0) {
          alive = false;
          break;
        }
      }
      if (alive && dfs(depth + 1, now_used)) return true;
    }
    return false;
  }
};

SubgraphMatcher::SubgraphMatcher(const Graph& pattern)
    : pattern_(pattern), default_order_(search_order(pattern, {})) {
  core_count_ = static_cast<int>(default_order_.size());
}

bool SubgraphMatcher::run(const Graph& host, const std::optional<Anchor>& anchor) const {
  nodes_ = 0;
  if (pattern_.order() > host.order()) return false;
  if (pattern_.size() > host.size()) return false;
  if (pattern_.max_degree() > host.max_degree()) return false;
  if (core_count_ == 0) return true;
  if (!anchor) {
    Search search(host, pattern_, default_order_);
    bool found = search.dfs(0, 0);
    nodes_ = search.nodes;
    return found;
  }
  const Edge pe = anchor->pattern_edge;
  const Edge he = anchor->host_edge;
  if (pe.u >= pattern_.order() || pe.v >= pattern_.order() || !pattern_.has_edge(pe.u, pe.v)) return false;
  if (he.u >= host.order() || he.v >= host.order() || !host.has_edge(he.u, he.v)) return false;
  std::vector<int> order = search_order(pattern_, {pe.u, pe.v});
  Search search(host, pattern_, order);
  search.forced = {bit(he.u), bit(he.v)};
  bool found = search.dfs(0, 0);
  if (!found) {
    search.forced = {bit(he.v), bit(he.u)};
    found = search.dfs(0, 0);
  }
  nodes_ = search.nodes;
  return found;
}

bool SubgraphMatcher::found_in(const Graph& host) const { return run(host, std::nullopt); }

bool SubgraphMatcher::found_in(const Graph& host, const Anchor& anchor) const { return run(host, anchor); }

bool SubgraphMatcher::edge_in_copy(const Graph& host, Edge host_edge) const {
  std::uint64_t total = 0;
  for (const Edge& pe : pattern_.edges()) {
    bool hit = run(host, Anchor{pe, host_edge});
    total += nodes_;
    if (hit) {
      nodes_ = total;
      return true;
    }
  }
  nodes_ = total;
  return false;
}

bool contains_subgraph(const Graph& host, const Graph& pattern, const std::optional<Anchor>& anchor) {
  SubgraphMatcher m(pattern);
  return anchor ? m.found_in(host, *anchor) : m.found_in(host);
}

bool is_free_of(const Graph& host, const std::vector<SubgraphMatcher>& family) {
  return std::none_of(family.begin(), family.end(), [&](const SubgraphMatcher& m) { return m.found_in(host); });
}

}  // namespace tb
