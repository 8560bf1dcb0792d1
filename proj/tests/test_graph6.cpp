#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "sieveforge/generators.hpp"
#include "sieveforge/graph6.hpp"
#include "sieveforge/random.hpp"

using namespace sieveforge;

TEST_CASE("known graph6 records parse to the right graphs") {
  CHECK(parse_graph6("Bw") == builtin_graph("k3"));
  CHECK(parse_graph6("Bg") == Graph(3, {{0, 1}, {1, 2}}));
  CHECK(parse_graph6("@") == Graph(1, {}));
  CHECK(parse_graph6("A_") == Graph(2, {{0, 1}}));
  CHECK(parse_graph6("A?") == Graph(2, {}));
  CHECK(parse_graph6(">>graph6<<Bw") == builtin_graph("k3"));
}

TEST_CASE("encoding matches the known records") {
  CHECK(to_graph6(builtin_graph("k3")) == "Bw");
  CHECK(to_graph6(builtin_graph("p3")) == "Bg");
  CHECK(to_graph6(Graph(1, {})) == "@");
  CHECK(to_graph6(Graph(2, {{0, 1}})) == "A_");
}

TEST_CASE("graph6 round-trips across the size header boundary") {
  Rng rng(31);
  for (int n : {0, 1, 5, 30, 62, 63, 64, 100}) {
    Graph g = random_graph(n, 0.3, rng);
    Graph back = parse_graph6(to_graph6(g));
    INFO("n = " << n);
    CHECK(back == g);
  }
  CHECK(to_graph6(random_graph(63, 0.2, rng)).size() >= 4);
}

TEST_CASE("malformed graph6 input reports a byte offset") {
  CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("Bw extra"), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("B"), Graph6Error);
  CHECK_THROWS_AS(parse_graph6("B\x01"), Graph6Error);

  try {
    parse_graph6("Bw?");
    FAIL("trailing bytes accepted");
  } catch (const Graph6Error& e) {
    CHECK(e.byte_offset == 2);
    CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("trailing bytes"));
  }

  try {
    parse_graph6(std::string(1, '\x20'));
    FAIL("control byte accepted");
  } catch (const Graph6Error& e) {
    CHECK(e.byte_offset == 0);
  }
}

TEST_CASE("graph6 streams skip headers and number records") {
  std::istringstream in(">>graph6<<\nBw\r\n\nBg\n>>graph6<<A_\n");
  auto recs = read_graph6_stream(in);
  REQUIRE(recs.size() == 3);
  CHECK(recs[0].first == "1");
  CHECK(recs[0].second == builtin_graph("k3"));
  CHECK(recs[1].first == "2");
  CHECK(recs[1].second == builtin_graph("p3"));
  CHECK(recs[2].first == "3");
  CHECK(recs[2].second == Graph(2, {{0, 1}}));
}

TEST_CASE("missing graph6 files raise an error") {
  CHECK_THROWS_AS(read_graph6_file("/nonexistent/path.g6"), std::runtime_error);
}
