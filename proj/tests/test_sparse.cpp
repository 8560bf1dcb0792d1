#include <catch2/catch_amalgamated.hpp>

#include "sieveforge/matrix.hpp"
#include "sieveforge/permutation.hpp"
#include "sieveforge/random.hpp"
#include "sieveforge/sparse.hpp"

using namespace sieveforge;

namespace {

Matrix<BigInt> random_sparse_dense(int n, Rng& rng) {
  Matrix<BigInt> m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rng.chance(0.3)) m(i, j) = rng.range(-2, 3);
  return m;
}

}  // namespace

TEST_CASE("triplets sum duplicates and drop zeros") {
  using T = Triplet<BigInt>;
  auto m = SparseMatrix<BigInt>::from_triplets(
      3, {T{0, 1, 2}, T{0, 1, 3}, T{2, 2, 0}, T{1, 0, -1}, T{1, 0, 1}});
  CHECK(m.nnz() == 1);
  CHECK(m.to_dense()(0, 1) == 5);
  CHECK(m.to_dense()(1, 0) == 0);
  CHECK(m.to_dense()(2, 2) == 0);
}

TEST_CASE("dense and sparse round-trip") {
  Rng rng(21);
  for (int t = 0; t < 20; ++t) {
    auto d = random_sparse_dense(rng.range(1, 8), rng);
    CHECK(SparseMatrix<BigInt>::from_dense(d).to_dense() == d);
  }
}

TEST_CASE("sparse operations match their dense counterparts") {
  Rng rng(22);
  for (int t = 0; t < 25; ++t) {
    int n = rng.range(1, 8);
    auto da = random_sparse_dense(n, rng);
    auto db = random_sparse_dense(n, rng);
    auto sa = SparseMatrix<BigInt>::from_dense(da);
    auto sb = SparseMatrix<BigInt>::from_dense(db);

    CHECK(add(sa, sb).to_dense() == add(da, db));
    CHECK(mul(sa, sb).to_dense() == mul(da, db));
    CHECK(hadamard(sa, sb).to_dense() == hadamard(da, db));
    CHECK(circ(sa, sb).to_dense() == circ(da, db));
    CHECK(transpose(sa).to_dense() == transpose(da));

    Permutation p = Permutation::random(n, rng);
    CHECK(change_of_order(sa, p).to_dense() == change_of_order(da, p));
  }
}

TEST_CASE("sparse rational entries cancel away completely") {
  using T = Triplet<Rational>;
  auto m = SparseMatrix<Rational>::from_triplets(
      2, {T{0, 0, Rational(1, 2)}, T{0, 0, Rational(-1, 2)}});
  CHECK(m.nnz() == 0);
  CHECK(m == SparseMatrix<Rational>(2));
}

TEST_CASE("sparse circ keeps float accumulation order") {
  Rng rng(23);
  for (int t = 0; t < 10; ++t) {
    int n = rng.range(1, 7);
    Matrix<double> da(n), db(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (rng.chance(0.4)) da(i, j) = 0.1 * rng.range(1, 9);
        if (rng.chance(0.4)) db(i, j) = 0.1 * rng.range(1, 9);
      }
    auto sa = SparseMatrix<double>::from_dense(da);
    auto sb = SparseMatrix<double>::from_dense(db);
    CHECK(circ(sa, sb).to_dense() == circ(da, db));
  }
}
