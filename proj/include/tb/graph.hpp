#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tb {

/// Bit set over vertex indices 0..63.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
constexpr int popcount(VertexSet s) { return std::popcount(s); }
constexpr int lowest(VertexSet s) { return std::countr_zero(s); }
constexpr VertexSet full_set(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }

/// Undirected edge, stored with first < second.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Effective vertex cap: 64, lowered by the TB_MAX_VERTICES environment variable.
int max_vertices();

/// Simple undirected graph on at most 64 vertices; row v holds the neighbours of v.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  int size() const;

  VertexSet row(int v) const { return adj_[v]; }
  VertexSet vertices() const { return full_set(n_); }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const { return popcount(adj_[v]); }
  int max_degree() const;
  int min_degree() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  std::vector<Edge> edges() const;
  std::vector<int> degrees() const;

  /// Subgraph induced by `keep`, relabelled in increasing index order.
  Graph induced(VertexSet keep) const;
  /// Same graph with the vertex at position i of `order` becoming vertex i.
  Graph relabel(std::span<const int> order) const;
  Graph complement() const;
  /// Drops isolated vertices, keeping relative order.
  Graph without_isolated() const;
  VertexSet isolated_vertices() const;

  bool is_connected() const;
  bool is_acyclic() const;
  bool is_bipartite() const;
  /// Connected components as vertex sets, ordered by least vertex.
  std::vector<VertexSet> components() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

Graph graph_from_edges(int n, std::span<const Edge> edges);

/// Standard families.  Each throws ParameterError on invalid arguments and
/// CapacityError above max_vertices().
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
/// S_k: a centre (vertex 0) joined to k leaves.
Graph star_graph(int k);
Graph complete_bipartite(int a, int b);
/// T_p(n): complete p-partite, parts of size floor(n/p) or ceil(n/p), larger parts first.
Graph turan_graph(int n, int p);
Graph petersen_graph();

enum class StandardKind { path, cycle, complete, empty, star, complete_bipartite, turan };

/// Dispatching form of the builders above; `params` are the builder arguments in order.
Graph build_standard(StandardKind kind, std::span<const int> params);

/// G + H: disjoint union plus every cross edge.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace tb
