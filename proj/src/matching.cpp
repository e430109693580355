#include "tb/matching.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "tb/error.hpp"

namespace tb {

namespace {

class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g) : g_(g), n_(g.order()) {
    match_.fill(-1);
  }

  std::vector<int> run() {
    // Greedy start shortens the augmenting phase.
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      for (VertexSet s = g_.row(v); s; s &= s - 1) {
        int w = lowest(s);
        if (match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
      }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int end = find_path(v);
      while (end != -1) {
        int pv = parent_[end];
        int ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
    return {match_.begin(), match_.begin() + n_};
  }

 private:
  int lca(int a, int b) {
    std::array<bool, kMaxVertices> seen{};
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  // Returns the free vertex ending an augmenting path from root, or -1.
  int find_path(int root) {
    used_.fill(false);
    parent_.fill(-1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::array<int, kMaxVertices> queue{};
    int head = 0;
    int tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      int v = queue[head++];
      for (VertexSet s = g_.row(v); s; s &= s - 1) {
        int to = lowest(s);
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int cur = lca(v, to);
          blossom_.fill(false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue[tail++] = i;
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          int next = match_[to];
          used_[next] = true;
          queue[tail++] = next;
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::array<int, kMaxVertices> match_{};
  std::array<int, kMaxVertices> parent_{};
  std::array<int, kMaxVertices> base_{};
  std::array<bool, kMaxVertices> used_{};
  std::array<bool, kMaxVertices> blossom_{};
};

// Greedy maximal matching inside `active`: a lower bound on the cover size.
int greedy_matching(const Graph& g, VertexSet active) {
  int count = 0;
  for (VertexSet s = active; s; s &= s - 1) {
    int v = lowest(s);
    if (!(active & bit(v))) continue;
    VertexSet nb = g.row(v) & active;
    if (!nb) continue;
    active &= ~(bit(v) | bit(lowest(nb)));
    ++count;
  }
  return count;
}

// Minimum cover of the edges inside `active`, or `limit` if none is smaller.
int cover_search(const Graph& g, VertexSet active, int limit) {
  // Drop isolated vertices and take the neighbour of every pendant vertex.
  int forced = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (VertexSet s = active; s; s &= s - 1) {
      int v = lowest(s);
      if (!(active & bit(v))) continue;
      VertexSet nb = g.row(v) & active;
      if (nb == 0) {
        active &= ~bit(v);
      } else if (popcount(nb) == 1) {
        active &= ~(bit(v) | nb);
        ++forced;
        changed = true;
      }
    }
  }
  if (forced >= limit) return limit;
  if (active == 0) return forced;
  if (forced + greedy_matching(g, active) >= limit) return limit;

  int pick = -1;
  int best_degree = -1;
  for (VertexSet s = active; s; s &= s - 1) {
    int v = lowest(s);
    int d = popcount(g.row(v) & active);
    if (d > best_degree) {
      best_degree = d;
      pick = v;
    }
  }
  int budget = limit - forced;
  int with_v = 1 + cover_search(g, active & ~bit(pick), budget - 1);
  budget = std::min(budget, with_v);
  VertexSet nb = g.row(pick) & active;
  int k = popcount(nb);
  if (k < budget) {
    int with_nb = k + cover_search(g, active & ~nb & ~bit(pick), budget - k);
    budget = std::min(budget, with_nb);
  }
  return forced + budget;
}

}  // namespace

std::vector<int> maximum_matching(const Graph& g) { return BlossomMatcher(g).run(); }

int max_matching(const Graph& g) {
  int matched = 0;
  for (int m : maximum_matching(g)) matched += (m != -1);
  return matched / 2;
}

int min_vertex_cover(const Graph& g) {
  const bool bipartite = g.is_bipartite();
  if (g.order() > 24) {
    if (!bipartite) throw CapacityError("vertex cover of a non-bipartite graph is limited to 24 vertices");
    return max_matching(g);
  }
  int beta = cover_search(g, g.vertices(), g.order() + 1);
  if (bipartite && beta != max_matching(g)) {
    throw std::logic_error("vertex cover search disagrees with the matching number on a bipartite graph");
  }
  return beta;
}

bool is_vertex_cover(const Graph& g, VertexSet cover) {
  for (int v = 0; v < g.order(); ++v) {
    if (!(cover & bit(v)) && (g.row(v) & ~cover)) return false;
  }
  return true;
}

}  // namespace tb
