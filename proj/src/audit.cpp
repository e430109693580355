#include "tb/audit.hpp"

#include <chrono>
#include <functional>
#include <random>

#include "tb/balloon.hpp"
#include "tb/decomposition.hpp"
#include "tb/enumerate.hpp"
#include "tb/error.hpp"
#include "tb/graph6.hpp"
#include "tb/matching.hpp"
#include "tb/oracle.hpp"

namespace tb {

namespace {

using Rng = std::mt19937_64;

class Timer {
 public:
  double ms() const { return std::chrono::duration<double, std::milli>(Clock::now() - start_).count(); }

 private:
  using Clock = std::chrono::steady_clock;
  Clock::time_point start_ = Clock::now();
};

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

void record(AuditResult& r, const std::string& what) {
  if (r.counterexamples++ == 0) r.first_counterexample = what;
}

// X = 0..nx-1, Y = nx..nx+ny-1.
Graph random_bipartite(Rng& rng, int nx, int ny, double p) {
  Graph g(nx + ny);
  for (int x = 0; x < nx; ++x) {
    for (int y = nx; y < nx + ny; ++y) {
      if (coin(rng, p)) g.add_edge(x, y);
    }
  }
  return g;
}

// Minimum cover of G[X,Y]: the X-part S is free, the Y-part must be N(X - S).
int cover_by_side(const Graph& g, VertexSet x) {
  int best = g.order();
  std::vector<int> xs;
  for (VertexSet s = x; s; s &= s - 1) xs.push_back(lowest(s));
  const int m = static_cast<int>(xs.size());
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    VertexSet forced = 0;
    int chosen = 0;
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1U) ++chosen;
      else forced |= g.row(xs[i]);
    }
    best = std::min(best, chosen + popcount(forced));
  }
  return best;
}

int cover_by_subsets(const Graph& g) {
  const int n = g.order();
  int best = n;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    int size = std::popcount(mask);
    if (size >= best) continue;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (!(mask >> v & 1U) && (g.row(v) & ~VertexSet{mask})) ok = false;
    }
    if (ok) best = size;
  }
  return best;
}

// Colour classes of a connected bipartite graph, from vertex 0.
std::pair<VertexSet, VertexSet> colour_classes(const Graph& g) {
  VertexSet even = 1, odd = 0, frontier = 1;
  bool parity = false;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s; s &= s - 1) next |= g.row(lowest(s));
    next &= ~(even | odd);
    parity = !parity;
    (parity ? odd : even) |= next;
    frontier = next;
  }
  return {even, odd};
}

std::vector<VertexSet> smaller_sides(const Graph& tree) {
  auto [p, q] = colour_classes(tree);
  if (popcount(p) < popcount(q)) return {p};
  if (popcount(q) < popcount(p)) return {q};
  return {p, q};
}

int min_degree_over(const Graph& g, VertexSet side) {
  int k = g.order();
  for (VertexSet s = side; s; s &= s - 1) k = std::min(k, g.degree(lowest(s)));
  return k;
}

std::string describe_tree(const Graph& t, const std::vector<int>& lengths) {
  std::string out = encode_graph6(t) + " lengths";
  for (int l : lengths) out += " " + std::to_string(l);
  return out;
}

void for_each_assignment(int edges, bool exhaustive, const std::function<void(const std::vector<int>&)>& fn) {
  if (exhaustive) {
    for (std::uint32_t mask = 0; mask < (1U << edges); ++mask) {
      std::vector<int> lengths(edges);
      for (int i = 0; i < edges; ++i) lengths[i] = (mask >> i & 1U) ? 5 : 3;
      fn(lengths);
    }
    return;
  }
  fn(std::vector<int>(edges, 3));
  fn(std::vector<int>(edges, 5));
  std::vector<int> alternating(edges);
  for (int i = 0; i < edges; ++i) alternating[i] = i % 2 ? 5 : 3;
  fn(alternating);
}

}  // namespace

AuditResult audit_konig(long long samples, std::uint64_t seed) {
  Timer timer;
  AuditResult r;
  r.name = "konig";
  Rng rng(seed);
  for (long long i = 0; i < samples; ++i) {
    int n = uniform(rng, 1, 14);
    int nx = uniform(rng, 0, n / 2);
    Graph g = random_bipartite(rng, nx, n - nx, uniform_real(rng, 0.0, 1.0));
    ++r.cases;
    ++r.premises_met;
    int beta = cover_by_side(g, full_set(nx));
    int nu = max_matching(g);
    if (beta != nu) record(r, encode_graph6(g));
  }
  OrderLevels all = graphs_by_order(8, [](const Graph& g) { return g.is_bipartite(); });
  for (const auto& level : all.levels) {
    for (const Graph& g : level) {
      ++r.cases;
      ++r.premises_met;
      if (cover_by_subsets(g) != max_matching(g)) record(r, encode_graph6(g));
    }
  }
  r.elapsed_ms = timer.ms();
  return r;
}

AuditResult audit_hall(long long samples, std::uint64_t seed) {
  Timer timer;
  AuditResult r;
  r.name = "hall";
  Rng rng(seed);
  for (long long i = 0; i < samples; ++i) {
    int nx = uniform(rng, 0, 6);
    int ny = uniform(rng, nx == 0 ? 0 : 1, 12 - nx);
    Graph g = random_bipartite(rng, nx, ny, uniform_real(rng, 0.1, 0.9));
    ++r.cases;
    bool hall = true;
    for (std::uint32_t s = 1; s < (1U << nx) && hall; ++s) {
      VertexSet nbrs = 0;
      for (int x = 0; x < nx; ++x) {
        if (s >> x & 1U) nbrs |= g.row(x);
      }
      if (popcount(nbrs) < std::popcount(s)) hall = false;
    }
    r.premises_met += hall;
    if ((max_matching(g) >= nx) != hall) record(r, encode_graph6(g) + " |X|=" + std::to_string(nx));
  }
  r.elapsed_ms = timer.ms();
  return r;
}

AuditResult audit_degree_sum(long long samples, std::uint64_t seed) {
  Timer timer;
  AuditResult r;
  r.name = "degree-sum";
  Rng rng(seed);
  for (long long i = 0; i < samples; ++i) {
    int n = uniform(rng, 1, 14);
    double p = uniform_real(rng, 0.0, 1.0);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng, p)) g.add_edge(u, v);
      }
    }
    ++r.cases;
    int delta = g.max_degree() + uniform(rng, 0, 2);
    if (delta < 2) continue;
    int b = uniform(rng, 0, delta - 2);
    ++r.premises_met;
    if (!degree_sum_audit(g, b, delta)) {
      record(r, encode_graph6(g) + " b=" + std::to_string(b) + " delta=" + std::to_string(delta));
    }
  }
  r.elapsed_ms = timer.ms();
  return r;
}

AuditResult audit_partition(long long samples, std::uint64_t seed) {
  Timer timer;
  AuditResult r;
  r.name = "partition";
  Rng rng(seed);
  for (long long i = 0; i < samples; ++i) {
    int n = uniform(rng, 0, 12);
    int k = uniform(rng, 1, 4);
    int k1 = uniform(rng, 0, k);
    PartitionedGraph p{Graph(n), 0};
    for (int v = 0; v < n; ++v) {
      if (coin(rng, 0.5)) p.part0 |= bit(v);
    }
    double inside = uniform_real(rng, 0.0, 0.35);
    double across = uniform_real(rng, 0.4, 1.0);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        bool same = ((p.part0 >> u) & 1U) == ((p.part0 >> v) & 1U);
        if (coin(rng, same ? inside : across)) p.graph.add_edge(u, v);
      }
    }
    ++r.cases;
    PartitionAudit a = lemma_partition_audit(p, k, k1);
    r.premises_met += a.premises_hold;
    if (a.premises_hold && !a.inequality_holds) {
      record(r, encode_graph6(p.graph) + " V0=" + std::to_string(p.part0) + " k=" + std::to_string(k) +
                    " k1=" + std::to_string(k1));
    }
  }
  r.elapsed_ms = timer.ms();
  return r;
}

AuditResult audit_lemma1(int max_edges) {
  Timer timer;
  AuditResult r;
  r.name = "lemma1";
  for (int e = 1; e <= max_edges; ++e) {
    for (const Graph& t : trees_by_order(e + 1)) {
      for_each_assignment(e, true, [&](const std::vector<int>& lengths) {
        BalloonInput in = balloon_from_tree(t, lengths);
        ++r.cases;
        ++r.premises_met;
        GraphFamily sp = decomposition_family(in.tree, in.spec);
        GraphFamily oracle = decomposition_oracle(in.tree, in.spec);
        bool ok = sp == oracle;
        for (const FamilyMember& m : sp.members()) ok = ok && m.graph.size() == e;
        if (!ok) record(r, describe_tree(t, lengths));
      });
    }
  }
  r.elapsed_ms = timer.ms();
  return r;
}

AuditResult audit_covering(int max_order, int exhaustive_edges) {
  Timer timer;
  AuditResult r;
  r.name = "covering";
  for (int n = 2; n <= max_order; ++n) {
    for (const Graph& t : trees_by_order(n)) {
      const int beta = cover_by_subsets(t);
      for (VertexSet a_side : smaller_sides(t)) {
        if (min_degree_over(t, a_side) >= 2) {
          ++r.premises_met;
          if (beta != popcount(a_side)) record(r, encode_graph6(t) + " delta(A) >= 2 but beta != a");
        }
      }
      for_each_assignment(n - 1, n - 1 <= exhaustive_edges, [&](const std::vector<int>& lengths) {
        BalloonInput in = balloon_from_tree(t, lengths);
        ++r.cases;
        const int a = in.tree.a();
        GraphFamily b = b_family(in.tree, in.spec);
        GraphFamily ka;
        ka.insert(complete_graph(a), {}, false);
        if ((b == ka) != (beta == a)) record(r, describe_tree(t, lengths));
      });
    }
  }
  r.elapsed_ms = timer.ms();
  return r;
}

AuditResult audit_wang(int max_order) {
  Timer timer;
  AuditResult r;
  r.name = "wang";
  for (int n = 2; n <= max_order; ++n) {
    for (const Graph& t : trees_by_order(n)) {
      for (VertexSet a_side : smaller_sides(t)) {
        ++r.cases;
        const int k = min_degree_over(t, a_side);
        if (k < 2) continue;
        ++r.premises_met;
        const int a = popcount(a_side);
        for (VertexSet s = a_side; s; s &= s - 1) {
          Graph split = split_vertices(t, bit(lowest(s))).graph;
          if (max_matching(split) < a - 1 + k) {
            record(r, encode_graph6(t) + " split " + std::to_string(lowest(s)));
          }
        }
      }
    }
  }
  r.elapsed_ms = timer.ms();
  return r;
}

std::vector<std::string> audit_names() {
  return {"degree-sum", "partition", "konig", "hall", "lemma1", "covering", "wang"};
}

AuditResult run_audit(const std::string& name, long long samples, std::uint64_t seed) {
  if (samples < 0) throw ParameterError("samples must be >= 0");
  if (name == "degree-sum") return audit_degree_sum(samples, seed);
  if (name == "partition") return audit_partition(samples, seed);
  if (name == "konig") return audit_konig(samples, seed);
  if (name == "hall") return audit_hall(samples, seed);
  if (name == "lemma1") return audit_lemma1();
  if (name == "covering") return audit_covering();
  if (name == "wang") return audit_wang();
  throw ParameterError("unknown audit '" + name + "'");
}

}  // namespace tb
