#include <catch2/catch_amalgamated.hpp>

#include "sieveforge/generators.hpp"
#include "sieveforge/sieve.hpp"

using namespace sieveforge;

TEST_CASE("level structures stratify by distance") {
  Graph k3 = builtin_graph("k3");
  SieveLevels s = build_levels(k3, 0);
  CHECK(s.node == 0);
  CHECK(s.k0 == 1);
  CHECK(s.strata == std::vector<std::vector<int>>{{0}, {1, 2}});
  CHECK(s.levels == std::vector<std::vector<Arc>>{{{1, 0}, {2, 0}}});

  Graph p3 = builtin_graph("p3");
  SieveLevels t = build_levels(p3, 0);
  CHECK(t.k0 == 2);
  CHECK(t.strata == std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK(t.levels == std::vector<std::vector<Arc>>{{{1, 0}}, {{2, 1}}});

  Graph iso(3, {{1, 2}});
  SieveLevels u = build_levels(iso, 0);
  CHECK(u.k0 == 0);
  CHECK(u.strata == std::vector<std::vector<int>>{{0}});
  CHECK(u.levels.empty());

  CHECK_THROWS_AS(build_levels(k3, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_levels(k3, -1), std::invalid_argument);
}

TEST_CASE("level matrices hold one entry per arc") {
  Graph k3 = builtin_graph("k3");
  auto m = tr_level<BigInt>(k3, build_levels(k3, 0).levels[0]);
  CHECK(m == Matrix<BigInt>::from_rows({{0, 0, 0}, {1, 0, 0}, {1, 0, 0}}));
  CHECK_THROWS_AS(tr_level<BigInt>(k3, {{0, 1}, {1, 2}}), std::logic_error);
}

TEST_CASE("the image recurrence starts at zero and walks inward") {
  Graph p3 = builtin_graph("p3");
  CHECK(image<BigInt>(p3, 0, 0) == Matrix<BigInt>::zero(3));
  CHECK(image<BigInt>(p3, 0, 1) == Matrix<BigInt>::from_rows({{0, 0, 0}, {1, 0, 0}, {0, 0, 0}}));
  CHECK(image<BigInt>(p3, 0, 2) ==
        Matrix<BigInt>::from_rows({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}}));

  Graph k3 = builtin_graph("k3");
  for (int v = 0; v < 3; ++v) {
    auto m = image<BigInt>(k3, v, 1);
    for (int w = 0; w < 3; ++w)
      CHECK(m(w, v) == (w == v ? BigInt(0) : BigInt(1)));
  }
}

TEST_CASE("level bounds clamp to the eccentricity") {
  Graph p3 = builtin_graph("p3");
  auto full = image<BigInt>(p3, 0, -1);
  CHECK(image<BigInt>(p3, 0, 2) == full);
  CHECK(image<BigInt>(p3, 0, 99) == full);
  CHECK_THROWS_AS(image<BigInt>(p3, 0, -2), std::invalid_argument);

  auto ns = compute_node_sieve<BigInt>(p3, 0, -1);
  CHECK(ns.images.size() == 3);
  CHECK(ns.images[0] == Matrix<BigInt>::zero(3));
  CHECK(ns.images[2] == full);
}

TEST_CASE("damping scales each arc by gamma") {
  Graph p3 = builtin_graph("p3");
  EdgeValue<Rational> half{Rational(1, 2)};
  auto m = image<Rational>(p3, 0, 2, half);
  CHECK(m(1, 0) == Rational(1, 2));
  CHECK(m(2, 1) == Rational(1, 2));
  CHECK(m(2, 0) == Rational(1, 4));
  CHECK(m(0, 1) == Rational(0));

  EdgeValue<double> halfd{0.5};
  auto md = image<double>(p3, 0, 2, halfd);
  CHECK(md(2, 0) == 0.25);

  EdgeValue<Rational> zero{Rational(0)};
  CHECK(image<Rational>(p3, 0, 2, zero) == Matrix<Rational>::zero(3));
}

TEST_CASE("feature vectors ride along the arcs") {
  Graph g(2, {{0, 1}}, {{2.0, 3.0}});
  auto m = image<FeatureVec>(g, 0, 1);
  CHECK(m(1, 0) == FeatureVec({2.0, 3.0}));
  EdgeValue<FeatureVec> half{0.5};
  auto mh = image<FeatureVec>(g, 0, 1, half);
  CHECK(mh(1, 0) == FeatureVec({1.0, 1.5}));
}

TEST_CASE("coimages are the transposed images") {
  Rng rng(51);
  for (int t = 0; t < 15; ++t) {
    Graph g = random_graph(rng.range(2, 8), 0.5, rng);
    int v = rng.below(g.node_count());
    CHECK(coimage<BigInt>(g, v, -1) == transpose(image<BigInt>(g, v, -1)));
  }
}

TEST_CASE("images are equivariant under relabeling") {
  Rng rng(52);
  for (int t = 0; t < 15; ++t) {
    Graph g = random_graph(rng.range(2, 8), 0.5, rng);
    Permutation p = Permutation::random(g.node_count(), rng);
    Graph h = permute_graph(g, p);
    int v = rng.below(g.node_count());
    int k = rng.range(-1, 3);
    CHECK(image<BigInt>(h, p(v), k) == change_of_order(image<BigInt>(g, v, k), p));
  }
}

TEST_CASE("the recurrence agrees with the literal monoid fold") {
  Rng rng(53);
  for (int t = 0; t < 12; ++t) {
    Graph g = random_graph(rng.range(2, 7), 0.5, rng);
    int v = rng.below(g.node_count());
    for (int k : {0, 1, 2, -1}) {
      auto e = sieve_element(g, v, k);
      CHECK(image<BigInt>(g, v, k) == tr_count(e));
      CHECK(coimage<BigInt>(g, v, k) == tr_count(cosieve_element(g, v, k)));
    }
  }
}

TEST_CASE("sieve elements respect the path cap") {
  Graph k3 = builtin_graph("k3");
  CHECK_THROWS_AS(sieve_element(k3, 0, -1, 1), PathCapExceeded);
  CHECK_NOTHROW(sieve_element(k3, 0, -1, 4));
}

TEST_CASE("the two-hop transform composes columns with return arcs") {
  Graph k3 = builtin_graph("k3");
  CHECK(two_hop_transform<BigInt>(k3) ==
        Matrix<BigInt>::from_rows({{2, 4, 4}, {4, 2, 4}, {4, 4, 2}}));

  Graph p3 = builtin_graph("p3");
  CHECK(two_hop_transform<BigInt>(p3) ==
        Matrix<BigInt>::from_rows({{1, 3, 1}, {2, 2, 2}, {1, 3, 1}}));

  Rng rng(54);
  for (int t = 0; t < 10; ++t) {
    Graph g = random_graph(rng.range(2, 8), 0.5, rng);
    auto a = adjacency_matrix<BigInt>(g);
    Matrix<BigInt> deg(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) deg(v, v) = g.degree(v);
    CHECK(two_hop_transform<BigInt>(g) == add(add(mul(a, a), a), mul(a, deg)));
  }
}
