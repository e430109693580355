#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "tb/canon.hpp"
#include "tb/construction.hpp"
#include "tb/error.hpp"
#include "tb/formulas.hpp"
#include "tb/matching.hpp"
#include "tb/oracle.hpp"

using namespace tb;

namespace {

Graph bowtie() { return join(empty_graph(1), disjoint_union(complete_graph(2), complete_graph(2))); }

bool same_classes(std::vector<Graph> got, std::vector<Graph> want) {
  if (got.size() != want.size()) return false;
  for (const Graph& w : want) {
    bool found = false;
    for (const Graph& g : got) found = found || is_isomorphic(g, w);
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("ex of the triangle") {
    ExResult r = ex_exact(5, {complete_graph(3)});
    CHECK(r.value == 6);
    CHECK(is_isomorphic(r.witness, complete_bipartite(2, 3)));
    for (int n = 2; n <= 8; ++n) CHECK(ex_exact(n, {complete_graph(3)}).value == n * n / 4);
    CHECK(ex_exact(0, {complete_graph(3)}).value == 0);
  }

  TEST_CASE("ex agrees with labelled enumeration for small n") {
    std::vector<Graph> patterns{complete_graph(3), cycle_graph(4), bowtie(), path_graph(4), star_graph(3),
                                disjoint_union(complete_graph(2), complete_graph(2))};
    for (const Graph& h : patterns) {
      for (int n = 1; n <= 6; ++n) CHECK(ex_exact(n, {h}).value == brute::ex(n, h));
    }
  }

  TEST_CASE("bowtie at seven vertices") {
    ExResult r = ex_exact(7, {bowtie()});
    CHECK(r.value >= 13);
    CHECK_FALSE(contains_subgraph(r.witness, bowtie()));
    CHECK(r.witness.size() == r.value);
  }

  TEST_CASE("family semantics, monotonicity and errors") {
    // K_2 u K_1 needs three vertices, so a single edge on two vertices is free.
    CHECK(ex_exact(2, {disjoint_union(complete_graph(2), empty_graph(1))}).value == 1);
    CHECK_THROWS_AS(ex_exact(3, {empty_graph(2)}), PreconditionError);
    CHECK_THROWS_AS(ex_exact(11, {complete_graph(3)}), CapacityError);
    CHECK_THROWS_AS(ex_exact(4, std::vector<Graph>{}), ParameterError);
    for (int n = 3; n <= 7; ++n) {
      int one = ex_exact(n, {complete_graph(3)}).value;
      int two = ex_exact(n, {complete_graph(3), cycle_graph(5)}).value;
      int three = ex_exact(n, {complete_graph(3), cycle_graph(5), cycle_graph(4)}).value;
      CHECK(two <= one);
      CHECK(three <= two);
    }
  }

  TEST_CASE("bounded degree and matching equals the closed form") {
    for (int nu = 0; nu <= 3; ++nu) {
      for (int delta = 0; delta <= 3; ++delta) CHECK(ex_bounded_degree_matching(nu, delta) == chvatal_hanson(nu, delta));
    }
    CHECK_THROWS_AS(ex_bounded_degree_matching(4, 1), CapacityError);
  }

  TEST_CASE("star-matching maxima and witnesses") {
    StarMatchingResult r2 = star_matching_max(2);
    CHECK(r2.value == 1);
    CHECK(same_classes(r2.witnesses, {complete_graph(2)}));
    StarMatchingResult r3 = star_matching_max(3);
    CHECK(r3.value == 4);
    CHECK(same_classes(r3.witnesses, {complete_bipartite(2, 2)}));
    StarMatchingResult r4 = star_matching_max(4);
    CHECK(r4.value == 9);
    Graph three_triangles = disjoint_union(complete_graph(3), disjoint_union(complete_graph(3), complete_graph(3)));
    CHECK(same_classes(r4.witnesses, {complete_bipartite(3, 3), three_triangles}));
  }

  TEST_CASE("f2 against every colouring") {
    for (int n = 3; n <= 6; ++n) CHECK(f2_exact(n, complete_graph(3)) == brute::f2(n, complete_graph(3)));
    CHECK(f2_exact(5, path_graph(3)) == brute::f2(5, path_graph(3)));
    CHECK(f2_exact(5, complete_graph(3)) >= 6);
    CHECK(f2_exact(4, complete_graph(5)) == 6);
    CHECK_THROWS_AS(f2_exact(8, complete_graph(3)), CapacityError);
  }

  TEST_CASE("f2 is at least ex") {
    std::vector<Graph> patterns{complete_graph(3), cycle_graph(4), bowtie(), path_graph(4)};
    for (const Graph& h : patterns) {
      for (int n = 3; n <= 7; ++n) CHECK(f2_exact(n, h) >= ex_exact(n, {h}).value);
    }
  }

  TEST_CASE("uncovered edges on fixed colourings") {
    CHECK(f2_count_uncovered(EdgeColoring{complete_graph(4)}, complete_graph(3)) == 0);
    CHECK(f2_count_uncovered(EdgeColoring{complete_graph(6)}, complete_graph(7)) == 15);
    // Red T_2(6) has no triangle; blue is 2K_3, every blue edge in a blue triangle.
    CHECK(f2_count_uncovered(EdgeColoring{turan_graph(6, 2)}, complete_graph(3)) == 9);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 40; ++i) {
      Graph red = brute::random_graph(rng, 6, 0.5);
      CHECK(f2_count_uncovered(EdgeColoring{red}, complete_graph(3)) ==
            brute::uncovered(red, complete_graph(3)) + brute::uncovered(red.complement(), complete_graph(3)));
    }
    CHECK_THROWS_AS(f2_count_uncovered(EdgeColoring{complete_graph(41)}, complete_graph(3)), CapacityError);
  }

  TEST_CASE("partition audit examples") {
    PartitionedGraph p{complete_bipartite(2, 2), full_set(4)};
    PartitionAudit a = lemma_partition_audit(p, 3, 1);
    CHECK(a.premises_hold);
    CHECK(a.lhs == 4);
    CHECK(a.bound == 4);
    CHECK(a.inequality_holds);

    PartitionAudit empty = lemma_partition_audit(PartitionedGraph{Graph(0), 0}, 2, 1);
    CHECK(empty.lhs == 0);
    CHECK(empty.inequality_holds);

    // k = k1 compares against f(k-1, k-1).
    PartitionAudit eq = lemma_partition_audit(p, 3, 3);
    CHECK(eq.bound == 6);

    CHECK_THROWS_AS(lemma_partition_audit(p, 2, 3), ParameterError);
    CHECK_THROWS_AS(lemma_partition_audit(p, 0, 0), ParameterError);
  }

  TEST_CASE("partition premises are evaluated literally") {
    // K_{3,3} in V_0 contains S_3 and fails condition (1) for k = 3.
    PartitionedGraph p{complete_bipartite(3, 3), full_set(6)};
    CHECK_FALSE(lemma_partition_audit(p, 3, 1).premises_hold);
    // Condition (3): a vertex with inside degree k-1 whose other-side neighbour has an inside edge.
    Graph g(5);
    g.add_edge(0, 1);  // V_0 = {0,1}
    g.add_edge(0, 2);  // cross
    g.add_edge(2, 3);  // inside V_1 = {2,3,4}
    PartitionedGraph q{g, bit(0) | bit(1)};
    CHECK_FALSE(lemma_partition_audit(q, 2, 0).premises_hold);
    g.remove_edge(2, 3);
    g.add_edge(3, 4);
    PartitionedGraph q2{g, bit(0) | bit(1)};
    CHECK(lemma_partition_audit(q2, 2, 0).premises_hold);
  }

  TEST_CASE("degree-sum audit") {
    CHECK(degree_sum_audit(complete_graph(4), 1));
    CHECK(degree_sum_audit(empty_graph(5), 0, 2));
    CHECK_THROWS_AS(degree_sum_audit(empty_graph(5), 0), PreconditionError);
    CHECK_THROWS_AS(degree_sum_audit(complete_graph(4), 2), PreconditionError);
    CHECK_THROWS_AS(degree_sum_audit(complete_graph(4), 1, 2), PreconditionError);
  }
}
