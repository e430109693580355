#include <doctest.h>

#include "tb/balloon.hpp"
#include "tb/error.hpp"
#include "tb/formulas.hpp"
#include "tb/oracle.hpp"

using namespace tb;

TEST_SUITE("formulas") {
  TEST_CASE("Chvatal-Hanson values") {
    CHECK(chvatal_hanson(1, 1) == 1);
    CHECK(chvatal_hanson(2, 2) == 6);
    CHECK(chvatal_hanson(3, 3) == 10);
    CHECK(chvatal_hanson(2, 3) == 7);
    CHECK(chvatal_hanson(0, 5) == 0);
    CHECK(chvatal_hanson(5, 0) == 0);
    CHECK_THROWS_AS(chvatal_hanson(-1, 2), ParameterError);
  }

  TEST_CASE("(2,3) by the exhaustive search") { CHECK(ex_bounded_degree_matching(2, 3) == 7); }

  TEST_CASE("f(nu, delta) <= nu (delta + 1)") {
    for (int nu = 0; nu <= 10; ++nu) {
      for (int delta = 0; delta <= 10; ++delta) CHECK(chvatal_hanson(nu, delta) <= nu * (delta + 1));
    }
  }

  TEST_CASE("Abbott's special case") {
    CHECK(abbott(3) == 6);
    CHECK(abbott(4) == 10);
    for (int k = 2; k <= 10; ++k) CHECK(chvatal_hanson(k - 1, k - 1) == abbott(k));
    for (int k = 1; k <= 10; ++k) CHECK(chvatal_hanson(k - 1, k - 1) >= (k - 1) * (k - 1));
  }

  TEST_CASE("e_base") {
    for (int n = 1; n <= 30; ++n) CHECK(e_base(n, 1) == n * n / 4);
    CHECK(e_base(10, 2) == 29);
    CHECK(e_base(12, 3) == 45);
    CHECK(e_base(12, 3) == join(empty_graph(2), turan_graph(10, 2)).size());
    CHECK_THROWS_AS(e_base(2, 3), ParameterError);
    CHECK_THROWS_AS(e_base(5, 0), ParameterError);
  }

  TEST_CASE("Turan numbers of named specs") {
    for (int k = 2; k <= 4; ++k) {
      BalloonInput f = balloon_from_tree(star_graph(k), std::vector<int>(k, 3));
      for (int n : {20, 57, 100}) {
        TuranReport r = turan_number(n, f.tree, f.spec);
        CHECK(r.total == n * n / 4 + chvatal_hanson(k - 1, k - 1));
        CHECK(r.branch == Branch::k_eq_k1);
        CHECK(r.large_n_only);
      }
    }
    BalloonInput f3 = balloon_from_tree(star_graph(3), {3, 3, 3});
    CHECK(turan_number(100, f3.tree, f3.spec).total == 2506);

    BalloonInput ds = parse_spec("tree: u-v u-x1 u-x2 v-y1 v-y2\ncycles: u-v:5 u-x1:3 u-x2:3 v-y1:5 v-y2:5");
    TuranReport rd = turan_number(20, ds.tree, ds.spec);
    CHECK(rd.base == e_base(20, 3));
    CHECK(rd.middle == 0);
    CHECK(rd.tail == 0);
    CHECK(rd.total == 117);

    BalloonInput k3 = parse_spec("tree: 1-2\ncycles: 1-2:3");
    for (int n = 3; n <= 40; ++n) CHECK(turan_number(n, k3.tree, k3.spec).total == n * n / 4);

    BalloonInput bad = parse_spec("tree: a-b b-c c-d\ncycles: a-b:3 b-c:5 c-d:3");
    CHECK_THROWS_AS(turan_number(20, bad.tree, bad.spec), PreconditionError);
  }

  TEST_CASE("report invariants") {
    const char* specs[] = {
        "tree: c-x1 x1-y1 c-x2 x2-y2 c-x3 x3-y3\ncycles: c-x1:5 x1-y1:3 c-x2:5 x2-y2:3 c-x3:5 x3-y3:3",
        "tree: a-b b-c c-d d-e\ncycles: a-b:3 b-c:5 c-d:5 d-e:3",
        "tree: c-w c-x c-y c-z\ncycles: c-w:3 c-x:3 c-y:5 c-z:5",
    };
    for (const char* text : specs) {
      BalloonInput in = parse_spec(text);
      TuranReport r = turan_number(30, in.tree, in.spec);
      CHECK(r.total == r.base + r.middle + r.tail);
      CHECK(r.middle <= (r.a - 1) * (r.a - 2) / 2);
      CHECK((r.branch == Branch::k_eq_k1) == (r.tail == chvatal_hanson(r.k - 1, r.k - 1) && r.k == r.k1));
    }
  }
}
