#include "tb/canon.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>

#include "tb/error.hpp"

namespace tb {

namespace {

using Rows = std::array<std::uint16_t, kMaxCanonicalVertices>;

Rows rows_for_order(const Graph& g, const int* order) {
  const int n = g.order();
  std::array<int, kMaxCanonicalVertices> pos{};
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  Rows rows{};
  for (int i = 0; i < n; ++i) {
    std::uint16_t r = 0;
    for (VertexSet s = g.row(order[i]); s; s &= s - 1) r |= static_cast<std::uint16_t>(1U << (15 - pos[lowest(s)]));
    rows[i] = r;
  }
  return rows;
}

CanonicalKey encode_rows(int n, const Rows& rows) {
  CanonicalKey key;
  key.reserve(1 + 2 * n);
  key.push_back(static_cast<char>(n));
  for (int i = 0; i < n; ++i) {
    key.push_back(static_cast<char>(rows[i] >> 8));
    key.push_back(static_cast<char>(rows[i] & 0xFF));
  }
  return key;
}

std::vector<int> order_of(const Graph& g);

// ---- trees -----------------------------------------------------------------

std::string subtree_code(const Graph& g, int v, int parent, std::vector<std::string>& code) {
  std::vector<std::string> kids;
  for (VertexSet s = g.row(v); s; s &= s - 1) {
    int w = lowest(s);
    if (w != parent) kids.push_back(subtree_code(g, w, v, code));
  }
  std::sort(kids.begin(), kids.end());
  std::string c = "(";
  for (const auto& k : kids) c += k;
  c += ")";
  code[v] = c;
  return c;
}

void preorder(const Graph& g, int v, int parent, const std::vector<std::string>& code, std::vector<int>& out) {
  out.push_back(v);
  std::vector<int> kids;
  for (VertexSet s = g.row(v); s; s &= s - 1) {
    int w = lowest(s);
    if (w != parent) kids.push_back(w);
  }
  std::sort(kids.begin(), kids.end(), [&](int a, int b) { return code[a] < code[b]; });
  for (int w : kids) preorder(g, w, v, code, out);
}

std::vector<int> tree_order(const Graph& g) {
  const int n = g.order();
  // Peel leaves down to the one or two centres.
  VertexSet left = g.vertices();
  while (popcount(left) > 2) {
    VertexSet leaves = 0;
    for (VertexSet s = left; s; s &= s - 1) {
      int v = lowest(s);
      if (popcount(g.row(v) & left) <= 1) leaves |= bit(v);
    }
    left &= ~leaves;
  }
  std::vector<int> best;
  CanonicalKey best_key;
  for (VertexSet s = left; s; s &= s - 1) {
    std::vector<std::string> code(n);
    subtree_code(g, lowest(s), -1, code);
    std::vector<int> order;
    preorder(g, lowest(s), -1, code, order);
    CanonicalKey k = encode_rows(n, rows_for_order(g, order.data()));
    if (best.empty() || k < best_key) {
      best = std::move(order);
      best_key = std::move(k);
    }
  }
  return best;
}

// ---- individualisation-refinement -----------------------------------------

using Colors = std::array<int, kMaxCanonicalVertices>;

class Refiner {
 public:
  explicit Refiner(const Graph& g) : g_(g), n_(g.order()) {
    for (int v = 0; v < n_; ++v) {
      for (int w = 0; w < n_; ++w) {
        if (w != v && (g.row(v) & ~bit(w)) == (g.row(w) & ~bit(v))) twins_[v] |= bit(w);
      }
    }
  }

  std::vector<int> run() {
    Colors c{};
    search(c);
    return {best_order_.begin(), best_order_.begin() + n_};
  }

 private:
  // Equitable refinement; colours are ranks of (colour, neighbour colour counts).
  int refine(Colors& c) const {
    using Sig = std::array<std::uint8_t, kMaxCanonicalVertices + 1>;
    {
      std::array<int, kMaxCanonicalVertices> values{};
      std::copy(c.begin(), c.begin() + n_, values.begin());
      std::sort(values.begin(), values.begin() + n_);
      auto end = std::unique(values.begin(), values.begin() + n_);
      for (int v = 0; v < n_; ++v) c[v] = static_cast<int>(std::lower_bound(values.begin(), end, c[v]) - values.begin());
    }
    int classes = count_classes(c);
    for (;;) {
      std::array<Sig, kMaxCanonicalVertices> sig{};
      for (int v = 0; v < n_; ++v) {
        sig[v][0] = static_cast<std::uint8_t>(c[v]);
        for (VertexSet s = g_.row(v); s; s &= s - 1) ++sig[v][1 + c[lowest(s)]];
      }
      std::array<Sig, kMaxCanonicalVertices> sorted = sig;
      std::sort(sorted.begin(), sorted.begin() + n_);
      auto end = std::unique(sorted.begin(), sorted.begin() + n_);
      int next_classes = static_cast<int>(end - sorted.begin());
      for (int v = 0; v < n_; ++v) c[v] = static_cast<int>(std::lower_bound(sorted.begin(), end, sig[v]) - sorted.begin());
      if (next_classes == classes) return classes;
      classes = next_classes;
    }
  }

  int count_classes(const Colors& c) const {
    std::uint32_t seen = 0;
    for (int v = 0; v < n_; ++v) seen |= 1U << c[v];
    return std::popcount(seen);
  }

  void search(Colors c) {
    int classes = refine(c);
    if (classes == n_) {
      std::array<int, kMaxCanonicalVertices> order{};
      for (int v = 0; v < n_; ++v) order[c[v]] = v;
      Rows rows = rows_for_order(g_, order.data());
      if (!have_best_ || rows < best_rows_) {
        have_best_ = true;
        best_rows_ = rows;
        best_order_ = order;
      }
      return;
    }
    // First non-singleton cell.
    std::array<int, kMaxCanonicalVertices> count{};
    for (int v = 0; v < n_; ++v) ++count[c[v]];
    int target = 0;
    while (count[target] < 2) ++target;
    VertexSet cell = 0;
    for (int v = 0; v < n_; ++v) {
      if (c[v] == target) cell |= bit(v);
    }
    for (VertexSet s = cell; s; s &= s - 1) {
      int v = lowest(s);
      // Swapping two unindividualised twins is an automorphism fixing the colouring.
      if (twins_[v] & cell & full_set(v)) continue;
      Colors next{};
      for (int w = 0; w < n_; ++w) next[w] = 2 * c[w] + (w == v ? 0 : 1);
      search(next);
    }
  }

  const Graph& g_;
  int n_;
  std::array<VertexSet, kMaxCanonicalVertices> twins_{};
  bool have_best_ = false;
  Rows best_rows_{};
  std::array<int, kMaxCanonicalVertices> best_order_{};
};

std::vector<int> order_of(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return std::vector<int>(n, 0);
  std::vector<VertexSet> comps = g.components();
  if (comps.size() > 1) {
    struct Part {
      CanonicalKey key;
      std::vector<int> vertices;
    };
    std::vector<Part> parts;
    parts.reserve(comps.size());
    for (VertexSet comp : comps) {
      std::vector<int> members;
      for (VertexSet s = comp; s; s &= s - 1) members.push_back(lowest(s));
      Graph sub = g.induced(comp);
      std::vector<int> sub_order = order_of(sub);
      Part p;
      p.key = encode_rows(sub.order(), rows_for_order(sub, sub_order.data()));
      for (int i : sub_order) p.vertices.push_back(members[i]);
      parts.push_back(std::move(p));
    }
    std::stable_sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) { return a.key < b.key; });
    std::vector<int> order;
    for (const Part& p : parts) order.insert(order.end(), p.vertices.begin(), p.vertices.end());
    return order;
  }
  if (g.is_acyclic()) return tree_order(g);
  Graph co = g.complement();
  if (!co.is_connected()) return order_of(co);
  return Refiner(g).run();
}

void check_size(const Graph& g) {
  if (g.order() > kMaxCanonicalVertices) {
    throw CapacityError("canonical labelling is limited to 16 vertices, got " + std::to_string(g.order()));
  }
}

}  // namespace

std::vector<int> canonical_order(const Graph& g) {
  check_size(g);
  return order_of(g);
}

CanonicalKey key_for_order(const Graph& g, const std::vector<int>& order) {
  check_size(g);
  return encode_rows(g.order(), rows_for_order(g, order.data()));
}

CanonicalKey canonical_key(const Graph& g) { return key_for_order(g, canonical_order(g)); }

Graph canonical_form(const Graph& g) { return g.relabel(canonical_order(g)); }

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_key(g) == canonical_key(h);
}

}  // namespace tb
