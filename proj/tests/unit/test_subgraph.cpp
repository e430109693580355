#include <doctest.h>

#include <chrono>
#include <random>

#include "brute.hpp"
#include "tb/subgraph.hpp"

using namespace tb;

namespace {

Graph bowtie() { return join(empty_graph(1), disjoint_union(complete_graph(2), complete_graph(2))); }

}  // namespace

TEST_SUITE("subgraph") {
  TEST_CASE("containment examples") {
    CHECK(contains_subgraph(complete_graph(5), bowtie()));
    CHECK_FALSE(contains_subgraph(cycle_graph(5), complete_graph(3)));
    CHECK_FALSE(contains_subgraph(turan_graph(20, 2), cycle_graph(5)));
    CHECK(contains_subgraph(turan_graph(20, 2), cycle_graph(6)));
    CHECK_FALSE(contains_subgraph(complete_graph(3), complete_graph(4)));
  }

  TEST_CASE("every graph contains itself and small empty graphs") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
      Graph g = brute::random_graph(rng, static_cast<int>(rng() % 12), 0.5);
      CHECK(contains_subgraph(g, g));
      for (int k = 0; k <= g.order(); ++k) CHECK(contains_subgraph(g, empty_graph(k)));
      CHECK_FALSE(contains_subgraph(g, empty_graph(g.order() + 1)));
    }
  }

  TEST_CASE("matcher agrees with permutation search on random pairs") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 600; ++i) {
      Graph host = brute::random_graph(rng, 3 + static_cast<int>(rng() % 5), 0.3 + 0.1 * (i % 6));
      Graph pattern = brute::random_graph(rng, 1 + static_cast<int>(rng() % 5), 0.5);
      CHECK(contains_subgraph(host, pattern) == brute::contains(host, pattern));
    }
  }

  TEST_CASE("anchored search and edge coverage agree with permutation search") {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 200; ++i) {
      Graph host = brute::random_graph(rng, 4 + static_cast<int>(rng() % 4), 0.5);
      Graph pattern = brute::random_graph(rng, 2 + static_cast<int>(rng() % 4), 0.6);
      if (pattern.size() == 0) continue;
      SubgraphMatcher m(pattern);
      for (const Edge& e : host.edges()) CHECK(m.edge_in_copy(host, e) == brute::contains(host, pattern, &e));
    }
  }

  TEST_CASE("anchor fixes one pattern edge on one host edge") {
    // Triangle with a pendant edge: the pendant edge is in no triangle.
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    Graph k3 = complete_graph(3);
    CHECK(contains_subgraph(g, k3, Anchor{Edge(0, 1), Edge(1, 2)}));
    CHECK_FALSE(contains_subgraph(g, k3, Anchor{Edge(0, 1), Edge(2, 3)}));
    SubgraphMatcher m(k3);
    CHECK_FALSE(m.edge_in_copy(g, Edge(2, 3)));
    CHECK(m.edge_in_copy(g, Edge(0, 2)));
  }

  TEST_CASE("bowtie in K_40 finishes in milliseconds") {
    auto start = std::chrono::steady_clock::now();
    CHECK(contains_subgraph(complete_graph(40), bowtie()));
    Graph t = turan_graph(40, 2);
    CHECK_FALSE(contains_subgraph(t, bowtie()));
    t.add_edge(0, 1);
    CHECK_FALSE(contains_subgraph(t, bowtie()));
    t.add_edge(39, 38);
    CHECK(contains_subgraph(t, bowtie()));
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    CHECK(ms < 250.0);
  }

  TEST_CASE("free-ness against a family") {
    std::vector<SubgraphMatcher> fam;
    fam.emplace_back(complete_graph(3));
    fam.emplace_back(cycle_graph(4));
    CHECK(is_free_of(cycle_graph(5), fam));
    CHECK_FALSE(is_free_of(complete_bipartite(2, 2), fam));
    CHECK(is_free_of(petersen_graph(), fam));
  }
}
