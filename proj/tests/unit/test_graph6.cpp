#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "tb/error.hpp"
#include "tb/graph6.hpp"

using namespace tb;

TEST_SUITE("graph6") {
  TEST_CASE("hand-encoded strings") {
    // K_3: n = 3 -> '?'+3 = 'B'; bits 111 padded to 111000 = 56 -> 'w'.
    CHECK(encode_graph6(complete_graph(3)) == "Bw");
    // E_1: n = 1 -> '@', no edge bits.
    CHECK(encode_graph6(empty_graph(1)) == "@");
    CHECK(encode_graph6(Graph(0)) == "?");
    // P_3 with edges 0-1, 1-2: upper-triangle order (0,1),(0,2),(1,2) = 101000 = 40 -> 'g'.
    CHECK(encode_graph6(path_graph(3)) == "Bg");
  }

  TEST_CASE("round trips") {
    CHECK(decode_graph6(encode_graph6(petersen_graph())) == petersen_graph());
    std::mt19937_64 rng(8);
    for (int i = 0; i < 300; ++i) {
      Graph g = brute::random_graph(rng, static_cast<int>(rng() % 63), 0.3);
      CHECK(decode_graph6(encode_graph6(g)) == g);
    }
    CHECK(decode_graph6("Bw\n") == complete_graph(3));
  }

  TEST_CASE("malformed input carries the byte offset") {
    try {
      decode_graph6("B!");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 1);
    }
    CHECK_THROWS_AS(decode_graph6(""), ParseError);
    CHECK_THROWS_AS(decode_graph6("Bww"), ParseError);
    CHECK_THROWS_AS(decode_graph6("~??~"), ParseError);
    // Padding bits must be zero: 'x' = 57 sets the last padding bit.
    CHECK_THROWS_AS(decode_graph6("Bx"), ParseError);
    CHECK_THROWS_AS(encode_graph6(empty_graph(63)), CapacityError);
  }

  TEST_CASE("dot export lists every edge once") {
    std::string dot = export_dot(path_graph(3), {"a", "b", "c"});
    CHECK(dot.find("graph") != std::string::npos);
    CHECK(dot.find("\"a\"") != std::string::npos);
    std::size_t dashes = 0;
    for (std::size_t p = dot.find("--"); p != std::string::npos; p = dot.find("--", p + 1)) ++dashes;
    CHECK(dashes == 2);
  }
}
