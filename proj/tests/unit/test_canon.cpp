#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "brute.hpp"
#include "tb/canon.hpp"
#include "tb/enumerate.hpp"
#include "tb/error.hpp"
#include "tb/graph6.hpp"

using namespace tb;

namespace {

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabel(perm);
}

}  // namespace

TEST_SUITE("canon") {
  TEST_CASE("named pairs") {
    Graph c6 = cycle_graph(6);
    Graph k33 = complete_bipartite(3, 3);
    for (int i = 0; i < 3; ++i) k33.remove_edge(i, 3 + i);
    CHECK(canonical_key(c6) == canonical_key(k33));
    CHECK(canonical_key(star_graph(3)) != canonical_key(path_graph(4)));
    CHECK(canonical_key(disjoint_union(complete_graph(3), complete_graph(3))) != canonical_key(c6));
    std::mt19937_64 rng(1);
    CHECK(is_isomorphic(petersen_graph(), shuffled(petersen_graph(), rng)));
  }

  TEST_CASE("keys are invariant under relabelling") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 500; ++i) {
      int n = static_cast<int>(rng() % 17);
      Graph g = brute::random_graph(rng, n, 0.05 + 0.9 * (i % 10) / 9.0);
      Graph h = shuffled(g, rng);
      REQUIRE(canonical_key(g) == canonical_key(h));
      CHECK(canonical_form(g) == canonical_form(h));
    }
  }

  TEST_CASE("regular and highly symmetric graphs") {
    std::mt19937_64 rng(22);
    std::vector<Graph> hard{petersen_graph(), complete_bipartite(4, 4), cycle_graph(16),
                            disjoint_union(cycle_graph(8), cycle_graph(8)), turan_graph(12, 3)};
    // 3-cube
    Graph q3(8);
    for (int v = 0; v < 8; ++v) {
      for (int b = 0; b < 3; ++b) {
        if (v < (v ^ (1 << b))) q3.add_edge(v, v ^ (1 << b));
      }
    }
    hard.push_back(q3);
    for (const Graph& g : hard) {
      for (int i = 0; i < 5; ++i) CHECK(canonical_key(g) == canonical_key(shuffled(g, rng)));
    }
    // Same degree sequence, not isomorphic: C_8 vs 2C_4, Q_3 vs the Mobius ladder on 8 vertices.
    CHECK(canonical_key(cycle_graph(8)) != canonical_key(disjoint_union(cycle_graph(4), cycle_graph(4))));
    Graph mobius = cycle_graph(8);
    for (int i = 0; i < 4; ++i) mobius.add_edge(i, i + 4);
    CHECK(canonical_key(q3) != canonical_key(mobius));
  }

  TEST_CASE("key equality matches permutation isomorphism on every 5-vertex labelled graph") {
    std::map<CanonicalKey, Graph> rep;
    brute::for_each_labelled(5, [&](const Graph& g) {
      auto [it, fresh] = rep.emplace(canonical_key(g), g);
      if (!fresh) CHECK(brute::isomorphic(g, it->second));
    });
    CHECK(rep.size() == 34);
    for (auto a = rep.begin(); a != rep.end(); ++a) {
      for (auto b = std::next(a); b != rep.end(); ++b) CHECK_FALSE(brute::isomorphic(a->second, b->second));
    }
  }

  TEST_CASE("class counts from generation") {
    // Graphs on n vertices: 1, 1, 2, 4, 11, 34, 156, 1044.
    OrderLevels all = graphs_by_order(7, [](const Graph&) { return true; });
    std::vector<std::size_t> counts;
    for (const auto& level : all.levels) counts.push_back(level.size());
    CHECK(counts == std::vector<std::size_t>{1, 1, 2, 4, 11, 34, 156, 1044});
    // Trees on n vertices: 1, 1, 1, 2, 3, 6, 11, 23, 47, 106.
    std::vector<std::size_t> trees;
    for (int n = 1; n <= 10; ++n) trees.push_back(trees_by_order(n).size());
    CHECK(trees == std::vector<std::size_t>{1, 1, 1, 2, 3, 6, 11, 23, 47, 106});
  }

  TEST_CASE("oversize graphs are refused") { CHECK_THROWS_AS(canonical_key(empty_graph(17)), CapacityError); }
}
