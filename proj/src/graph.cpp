#include "tb/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "tb/error.hpp"

namespace tb {

int max_vertices() {
  if (const char* env = std::getenv("TB_MAX_VERTICES")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v >= 0 && v < kMaxVertices) return static_cast<int>(v);
  }
  return kMaxVertices;
}

namespace {

void check_capacity(int n, const char* what) {
  if (n > max_vertices()) {
    throw CapacityError(std::string(what) + ": " + std::to_string(n) + " vertices exceeds the cap of " +
                        std::to_string(max_vertices()));
  }
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw ParameterError(msg);
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw ParameterError("vertex count must be >= 0");
  if (n > kMaxVertices) throw CapacityError("graphs are limited to 64 vertices");
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
  return twice / 2;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = kMaxVertices;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

void Graph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw ParameterError("invalid edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (VertexSet s = adj_[u] & ~full_set(u + 1); s; s &= s - 1) out.emplace_back(u, lowest(s));
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::array<int, kMaxVertices> index{};
  int m = 0;
  for (VertexSet s = keep; s; s &= s - 1) index[lowest(s)] = m++;
  Graph g(m);
  for (VertexSet s = keep; s; s &= s - 1) {
    int u = lowest(s);
    for (VertexSet t = adj_[u] & keep; t; t &= t - 1) g.adj_[index[u]] |= bit(index[lowest(t)]);
  }
  return g;
}

Graph Graph::relabel(std::span<const int> order) const {
  std::array<int, kMaxVertices> pos{};
  for (int i = 0; i < n_; ++i) pos[order[i]] = i;
  Graph g(n_);
  for (int u = 0; u < n_; ++u) {
    for (VertexSet s = adj_[u]; s; s &= s - 1) g.adj_[pos[u]] |= bit(pos[lowest(s)]);
  }
  return g;
}

Graph Graph::complement() const {
  Graph g(n_);
  for (int v = 0; v < n_; ++v) g.adj_[v] = ~adj_[v] & vertices() & ~bit(v);
  return g;
}

VertexSet Graph::isolated_vertices() const {
  VertexSet s = 0;
  for (int v = 0; v < n_; ++v) {
    if (adj_[v] == 0) s |= bit(v);
  }
  return s;
}

Graph Graph::without_isolated() const { return induced(vertices() & ~isolated_vertices()); }

std::vector<VertexSet> Graph::components() const {
  std::vector<VertexSet> out;
  VertexSet left = vertices();
  while (left) {
    VertexSet comp = bit(lowest(left));
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet s = frontier; s; s &= s - 1) next |= adj_[lowest(s)];
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    left &= ~comp;
  }
  return out;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

bool Graph::is_acyclic() const {
  return size() + static_cast<int>(components().size()) == n_;
}

bool Graph::is_bipartite() const {
  std::array<int, kMaxVertices> side{};
  side.fill(-1);
  for (int r = 0; r < n_; ++r) {
    if (side[r] >= 0) continue;
    side[r] = 0;
    std::vector<int> stack{r};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (VertexSet s = adj_[u]; s; s &= s - 1) {
        int w = lowest(s);
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          stack.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return false;
  return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

Graph graph_from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph path_graph(int n) {
  require(n >= 0, "path requires n >= 0");
  check_capacity(n, "path");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle requires n >= 3");
  check_capacity(n, "cycle");
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph complete_graph(int n) {
  require(n >= 0, "complete graph requires n >= 0");
  check_capacity(n, "complete graph");
  return Graph(n).complement();
}

Graph empty_graph(int n) {
  require(n >= 0, "empty graph requires n >= 0");
  check_capacity(n, "empty graph");
  return Graph(n);
}

Graph star_graph(int k) {
  require(k >= 0, "star requires k >= 0");
  check_capacity(k + 1, "star");
  Graph g(k + 1);
  for (int v = 1; v <= k; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  require(a >= 0 && b >= 0, "complete bipartite requires a, b >= 0");
  check_capacity(a + b, "complete bipartite");
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph turan_graph(int n, int p) {
  require(n >= 0, "turan requires n >= 0");
  require(p >= 1, "turan requires p >= 1");
  check_capacity(n, "turan");
  std::vector<int> part(n);
  // Parts 0..r-1 get ceil(n/p) vertices.
  int q = n / p;
  int r = n % p;
  int v = 0;
  for (int i = 0; i < p; ++i) {
    int len = q + (i < r ? 1 : 0);
    for (int j = 0; j < len; ++j) part[v++] = i;
  }
  Graph g(n);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (part[x] != part[y]) g.add_edge(x, y);
    }
  }
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph build_standard(StandardKind kind, std::span<const int> params) {
  auto need = [&](std::size_t count, const char* name) {
    if (params.size() != count) {
      throw ParameterError(std::string(name) + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  switch (kind) {
    case StandardKind::path:
      need(1, "path");
      return path_graph(params[0]);
    case StandardKind::cycle:
      need(1, "cycle");
      return cycle_graph(params[0]);
    case StandardKind::complete:
      need(1, "complete");
      return complete_graph(params[0]);
    case StandardKind::empty:
      need(1, "empty");
      return empty_graph(params[0]);
    case StandardKind::star:
      need(1, "star");
      return star_graph(params[0]);
    case StandardKind::complete_bipartite:
      need(2, "complete_bipartite");
      return complete_bipartite(params[0], params[1]);
    case StandardKind::turan:
      need(2, "turan");
      return turan_graph(params[0], params[1]);
  }
  throw ParameterError("unknown graph kind");
}

Graph join(const Graph& g, const Graph& h) {
  check_capacity(g.order() + h.order(), "join");
  Graph out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  }
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  check_capacity(g.order() + h.order(), "disjoint union");
  Graph out(g.order() + h.order());
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) out.add_edge(g.order() + e.u, g.order() + e.v);
  return out;
}

}  // namespace tb
