#include <catch2/catch_amalgamated.hpp>

#include "sieveforge/harness.hpp"
#include "sieveforge/selftest.hpp"

using namespace sieveforge;

namespace {

SnnConfig alpha11() {
  SnnConfig cfg;
  cfg.variant = SnnVariant::Alpha;
  cfg.levels = {1, 1};
  return cfg;
}

}  // namespace

TEST_CASE("discrimination separates the six-node pair on variance") {
  std::vector<Graph> gs = {builtin_graph("example6_G"), builtin_graph("example6_H")};
  std::vector<std::string> ids = {"G", "H"};

  auto rep = discriminate(gs, ids, alpha11(), {Stat::Var});
  CHECK(rep.pairs.total == 1);
  CHECK(rep.pairs.distinguished == 1);
  CHECK(rep.pairs.wl_distinguished == 0);
  CHECK(rep.classes.size() == 2);
  CHECK(rep.failure_rate == Rational(0));

  auto blind = discriminate(gs, ids, alpha11(), {Stat::Sum, Stat::Mean});
  CHECK(blind.pairs.distinguished == 0);
  CHECK(blind.classes.size() == 1);
  CHECK(blind.failure_rate == Rational(1));
}

TEST_CASE("byte-identical inputs are counted as duplicates, not failures") {
  std::vector<Graph> gs = {builtin_graph("k3"), builtin_graph("k3"),
                           builtin_graph("p3")};
  std::vector<std::string> ids = {"a", "b", "c"};
  SnnConfig cfg;
  auto rep = discriminate(gs, ids, cfg, {Stat::Sum});
  CHECK(rep.duplicate_pairs == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(rep.pairs.total == 3);
  CHECK(rep.failure_rate == Rational(0));
  CHECK(rep.classes == std::vector<std::vector<int>>{{0, 1}, {2}});
}

TEST_CASE("labels supply the ground truth for failures") {
  std::vector<Graph> gs = {builtin_graph("c6"), builtin_graph("two_triangles")};
  std::vector<std::string> ids = {"c6", "tt"};
  SnnConfig cfg;
  auto rep = discriminate(gs, ids, cfg, {Stat::Sum}, {0, 0});
  CHECK(rep.failure_rate == Rational(0));
  auto rep2 = discriminate(gs, ids, cfg, {Stat::Sum}, {0, 1});
  CHECK(rep2.pairs.total == 1);
  CHECK(rep2.failure_rate ==
        (rep2.pairs.distinguished == 1 ? Rational(0) : Rational(1)));
}

TEST_CASE("discrimination rejects inexact scalars and ragged inputs") {
  std::vector<Graph> gs = {builtin_graph("k3")};
  SnnConfig cfg;
  cfg.scalar = ScalarKind::Float;
  CHECK_THROWS_AS(discriminate(gs, {"a"}, cfg, {Stat::Sum}), std::invalid_argument);
  SnnConfig ok;
  CHECK_THROWS_AS(discriminate(gs, {"a", "b"}, ok, {Stat::Sum}),
                  std::invalid_argument);
  CHECK_THROWS_AS(discriminate(gs, {"a"}, ok, {Stat::Sum}, {0, 1}),
                  std::invalid_argument);
}

TEST_CASE("the strongly regular pair defeats the moment embeddings") {
  std::vector<Graph> gs = {builtin_graph("shrikhande"), builtin_graph("rook4x4")};
  auto rep = run_srg(gs, {"shrikhande", "rook4x4"}, 1);
  CHECK(rep.pairs.total == 1);
  CHECK(rep.pairs.distinguished == 0);
  CHECK(rep.pairs.wl_distinguished == 0);
  CHECK(rep.failure_rate == Rational(1));
  CHECK(rep.classes.size() == 1);
}

TEST_CASE("reports serialize with a fixed key order") {
  std::vector<Graph> gs = {builtin_graph("k3"), builtin_graph("p3")};
  SnnConfig cfg;
  auto rep = discriminate(gs, {"k3", "p3"}, cfg, {Stat::Sum, Stat::Var}, {}, 7);
  rep.elapsed_ms = 123;

  auto j = report_json(rep);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"config", "statistics", "seed", "graphs",
                                         "classes", "pairs", "failure_rate"});
  CHECK(j["config"]["variant"] == "beta");
  CHECK(j["config"]["levels"] == std::vector<int>{-1});
  CHECK(j["config"]["scalar"] == "bigint");
  CHECK(j["statistics"] == std::vector<std::string>{"sum", "var"});
  CHECK(j["seed"] == 7);
  CHECK(j["graphs"].size() == 2);
  CHECK(j["graphs"][0]["id"] == "k3");
  CHECK(j["graphs"][0]["embedding"].size() == 2);
  CHECK(j["pairs"]["total"] == 1);
  CHECK(j["failure_rate"] == "0");
  CHECK_FALSE(j.contains("elapsed_ms"));
  CHECK_FALSE(j.contains("duplicates"));

  auto jt = report_json(rep, true);
  CHECK(jt["elapsed_ms"] == 123);

  auto csv = report_csv(rep);
  CHECK(csv.substr(0, 11) == "id,sum,var\n");
  CHECK(csv.find("k3,") != std::string::npos);
}

TEST_CASE("duplicate inputs appear in the serialized report") {
  std::vector<Graph> gs = {builtin_graph("k3"), builtin_graph("k3")};
  SnnConfig cfg;
  auto rep = discriminate(gs, {"a", "b"}, cfg, {Stat::Sum});
  auto j = report_json(rep);
  REQUIRE(j.contains("duplicates"));
  CHECK(j["duplicates"][0] == std::vector<std::string>{"a", "b"});
}

TEST_CASE("the circulant experiment resolves all ten classes") {
  auto rep = run_csl(0, 1);
  CHECK(rep.ids.size() == 150);
  REQUIRE(rep.classes.size() == 10);
  for (const auto& cls : rep.classes) CHECK(cls.size() == 15);
  CHECK(rep.pairs.total == 150 * 149 / 2);
  CHECK(rep.pairs.distinguished == 10125);
  CHECK(rep.pairs.wl_distinguished == 0);
  CHECK(rep.failure_rate == Rational(0));
  CHECK(csl_skips().size() == 10);
}

TEST_CASE("the bundled self-checks all pass") {
  for (const CheckResult& r : run_all_checks(17, true)) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.pass);
  }
}
