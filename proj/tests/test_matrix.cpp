#include <catch2/catch_amalgamated.hpp>

#include "sieveforge/matrix.hpp"
#include "sieveforge/matrix_io.hpp"
#include "sieveforge/permutation.hpp"
#include "sieveforge/random.hpp"

using namespace sieveforge;

namespace {

Matrix<BigInt> random_matrix(int n, Rng& rng, int lo = 0, int hi = 3) {
  Matrix<BigInt> m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.range(lo, hi);
  return m;
}

Matrix<BigInt> permutation_matrix(const Permutation& p) {
  Matrix<BigInt> m(p.size());
  for (int i = 0; i < p.size(); ++i) m(p(i), i) = 1;
  return m;
}

}  // namespace

TEST_CASE("product and sum follow the hand-computed 2x2 values") {
  auto a = Matrix<BigInt>::from_rows({{1, 2}, {3, 4}});
  auto b = Matrix<BigInt>::from_rows({{0, 1}, {1, 1}});
  CHECK(add(a, b) == Matrix<BigInt>::from_rows({{1, 3}, {4, 5}}));
  CHECK(mul(a, b) == Matrix<BigInt>::from_rows({{2, 3}, {4, 7}}));
  CHECK(hadamard(a, b) == Matrix<BigInt>::from_rows({{0, 2}, {3, 4}}));
  CHECK(transpose(a) == Matrix<BigInt>::from_rows({{1, 3}, {2, 4}}));
  CHECK_THROWS_AS(add(a, Matrix<BigInt>(3)), std::invalid_argument);
  CHECK_THROWS_AS((Matrix<BigInt>::from_rows({{1}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("circ expands to sum plus product") {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    int n = rng.range(1, 6);
    auto a = random_matrix(n, rng);
    auto b = random_matrix(n, rng);
    CHECK(circ(a, b) == add(add(a, b), mul(a, b)));
  }
}

TEST_CASE("the zero matrix is the circ identity") {
  Rng rng(12);
  auto a = random_matrix(5, rng);
  Matrix<BigInt> zero(5);
  CHECK(circ(a, zero) == a);
  CHECK(circ(zero, a) == a);
  CHECK(circ(zero, zero) == zero);
}

TEST_CASE("circ is associative") {
  Rng rng(13);
  for (int t = 0; t < 25; ++t) {
    int n = rng.range(1, 5);
    auto a = random_matrix(n, rng);
    auto b = random_matrix(n, rng);
    auto c = random_matrix(n, rng);
    CHECK(circ(circ(a, b), c) == circ(a, circ(b, c)));
  }
}

TEST_CASE("the subsequence expansion equals the circ fold") {
  Rng rng(14);
  for (int width = 1; width <= 4; ++width)
    for (int t = 0; t < 10; ++t) {
      std::vector<Matrix<BigInt>> ms;
      for (int i = 0; i < width; ++i) ms.push_back(random_matrix(5, rng));
      CHECK(circ_expansion(ms) == circ_fold(ms));
    }
}

TEST_CASE("circ works over exact rationals") {
  auto a = Matrix<Rational>::from_rows({{Rational(1, 2), 0}, {1, Rational(1, 3)}});
  auto b = Matrix<Rational>::from_rows({{1, Rational(1, 4)}, {0, 2}});
  CHECK(circ(a, b) == add(add(a, b), mul(a, b)));
  CHECK(circ(a, b)(0, 0) == Rational(2));
}

TEST_CASE("relabeling conjugates and preserves the three products") {
  Rng rng(15);
  for (int t = 0; t < 25; ++t) {
    int n = rng.range(2, 6);
    auto a = random_matrix(n, rng);
    auto b = random_matrix(n, rng);
    Permutation p = Permutation::random(n, rng);

    auto pm = permutation_matrix(p);
    CHECK(change_of_order(a, p) == mul(mul(pm, a), transpose(pm)));

    CHECK(change_of_order(circ(a, b), p) ==
          circ(change_of_order(a, p), change_of_order(b, p)));
    CHECK(change_of_order(mul(a, b), p) ==
          mul(change_of_order(a, p), change_of_order(b, p)));
    CHECK(change_of_order(hadamard(a, b), p) ==
          hadamard(change_of_order(a, p), change_of_order(b, p)));
  }
}

TEST_CASE("matrix text dumps parse back for every kind") {
  Rng rng(16);
  auto bi = random_matrix(4, rng);
  auto parsed = parse_matrix(dump_matrix(bi));
  CHECK(std::get<Matrix<BigInt>>(parsed) == bi);

  auto ra = Matrix<Rational>::from_rows({{Rational(1, 2), 1}, {0, Rational(-5, 3)}});
  CHECK(std::get<Matrix<Rational>>(parse_matrix(dump_matrix(ra))) == ra);

  auto fl = Matrix<double>::from_rows({{0.5, -1.25}, {0.0, 3.0}});
  CHECK(std::get<Matrix<double>>(parse_matrix(dump_matrix(fl))) == fl);

  Matrix<FeatureVec> fv(2);
  fv(0, 1) = FeatureVec({1.5, 2.0});
  fv(1, 0) = FeatureVec({0.0, -1.0});
  CHECK(std::get<Matrix<FeatureVec>>(parse_matrix(dump_matrix(fv))) == fv);

  CHECK_THROWS_AS(parse_matrix("2 nonsense\n0 0\n0 0\n"), std::invalid_argument);
}
