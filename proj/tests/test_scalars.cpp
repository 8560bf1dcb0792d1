#include <catch2/catch_amalgamated.hpp>

#include "sieveforge/scalars.hpp"

using namespace sieveforge;

TEST_CASE("rational_from_decimal reads decimals exactly") {
  CHECK(rational_from_decimal("0.5") == Rational(1, 2));
  CHECK(rational_from_decimal("1") == Rational(1));
  CHECK(rational_from_decimal("0.125") == Rational(1, 8));
  CHECK(rational_from_decimal("-2.25") == Rational(-9, 4));
  CHECK(rational_from_decimal("3/4") == Rational(3, 4));
  CHECK_THROWS_AS(rational_from_decimal(""), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_decimal("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_decimal("abc"), std::invalid_argument);
}

TEST_CASE("format_double round-trips through parse_double") {
  for (double x : {0.0, 1.0, 0.1, -2.5, 1.0 / 3.0, 1e-12, 123456789.25}) {
    CHECK(parse_double(format_double(x)) == x);
  }
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("feature vectors act component-wise with an empty zero") {
  FeatureVec a({1.0, 2.0});
  FeatureVec b({0.5, -2.0});
  CHECK((a + b).v == std::vector<double>{1.5, 0.0});
  CHECK((a * b).v == std::vector<double>{0.5, -4.0});

  FeatureVec zero;
  CHECK(is_zero(zero));
  CHECK(zero + a == a);
  CHECK(is_zero(zero * a));
  CHECK(zero == FeatureVec({0.0, 0.0}));
  CHECK(a != FeatureVec({1.0, 2.0, 0.0}));

  CHECK_THROWS_AS(a + FeatureVec({1.0}), std::invalid_argument);
  CHECK_THROWS_AS(a * FeatureVec({1.0, 2.0, 3.0}), std::invalid_argument);
}

TEST_CASE("scalar strings parse back to the same value") {
  CHECK(parse_scalar<BigInt>(scalar_string(BigInt(-123))) == BigInt(-123));
  CHECK(parse_scalar<Rational>(scalar_string(Rational(31, 18))) == Rational(31, 18));
  CHECK(scalar_string(Rational(10, 2)) == "5");
  CHECK(parse_scalar<double>(scalar_string(0.1)) == 0.1);
  FeatureVec f({1.5, -2.0, 0.0});
  CHECK(parse_scalar<FeatureVec>(scalar_string(f)) == f);
  CHECK(scalar_string(FeatureVec{}) == "0");
}

TEST_CASE("scalar kinds have stable names") {
  for (ScalarKind k : {ScalarKind::BigInt, ScalarKind::Rational, ScalarKind::Float,
                       ScalarKind::FeatureVec}) {
    CHECK(parse_kind(kind_name(k)) == k);
  }
  CHECK_THROWS_AS(parse_kind("int"), std::invalid_argument);
}
