// Scalar kinds used as matrix entries: exact big integers, exact rationals,
// IEEE doubles, and per-edge feature vectors with element-wise arithmetic.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sieveforge {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Feature vectors add and multiply component by component. An empty vector is
// the additive zero of every dimension, so freshly allocated matrices need no
// dimension up front. There is no multiplicative identity.
struct FeatureVec {
  std::vector<double> v;

  FeatureVec() = default;
  explicit FeatureVec(std::vector<double> c) : v(std::move(c)) {}

  bool zero() const {
    for (double x : v)
      if (x != 0.0) return false;
    return true;
  }

  friend FeatureVec operator+(const FeatureVec& a, const FeatureVec& b) {
    if (a.v.empty()) return b;
    if (b.v.empty()) return a;
    if (a.v.size() != b.v.size())
      throw std::invalid_argument("feature dimension mismatch in addition");
    FeatureVec r = a;
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] += b.v[i];
    return r;
  }

  friend FeatureVec operator*(const FeatureVec& a, const FeatureVec& b) {
    if (a.v.empty() || b.v.empty()) return FeatureVec{};
    if (a.v.size() != b.v.size())
      throw std::invalid_argument("feature dimension mismatch in multiplication");
    FeatureVec r = a;
    for (std::size_t i = 0; i < r.v.size(); ++i) r.v[i] *= b.v[i];
    return r;
  }

  FeatureVec& operator+=(const FeatureVec& b) { return *this = *this + b; }

  // Two zeros compare equal even when one is the empty representation.
  friend bool operator==(const FeatureVec& a, const FeatureVec& b) {
    if (a.v.size() != b.v.size()) return a.zero() && b.zero();
    return a.v == b.v;
  }
};

inline bool is_zero(const BigInt& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const FeatureVec& x) { return x.zero(); }

enum class ScalarKind { BigInt, Rational, Float, FeatureVec };

inline const char* kind_name(ScalarKind k) {
  switch (k) {
    case ScalarKind::BigInt: return "bigint";
    case ScalarKind::Rational: return "rational";
    case ScalarKind::Float: return "float";
    case ScalarKind::FeatureVec: return "featurevec";
  }
  return "?";
}

inline ScalarKind parse_kind(std::string_view s) {
  if (s == "bigint") return ScalarKind::BigInt;
  if (s == "rational") return ScalarKind::Rational;
  if (s == "float") return ScalarKind::Float;
  if (s == "featurevec") return ScalarKind::FeatureVec;
  throw std::invalid_argument("unknown scalar kind: " + std::string(s));
}

template <typename S>
struct scalar_kind_of;
template <>
struct scalar_kind_of<BigInt> {
  static constexpr ScalarKind value = ScalarKind::BigInt;
};
template <>
struct scalar_kind_of<Rational> {
  static constexpr ScalarKind value = ScalarKind::Rational;
};
template <>
struct scalar_kind_of<double> {
  static constexpr ScalarKind value = ScalarKind::Float;
};
template <>
struct scalar_kind_of<FeatureVec> {
  static constexpr ScalarKind value = ScalarKind::FeatureVec;
};

// Shortest round-trip decimal form, the same on every run.
inline std::string format_double(double x) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
  return std::string(buf, p);
}

inline std::string scalar_string(const BigInt& x) { return x.str(); }
inline std::string scalar_string(const Rational& x) { return x.str(); }
inline std::string scalar_string(double x) { return format_double(x); }
inline std::string scalar_string(const FeatureVec& x) {
  if (x.v.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < x.v.size(); ++i) {
    if (i) s += ',';
    s += format_double(x.v[i]);
  }
  return s;
}

inline double parse_double(std::string_view s) {
  double x = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw std::invalid_argument("bad floating point literal: " + std::string(s));
  return x;
}

template <typename S>
S parse_scalar(std::string_view s);

template <>
inline BigInt parse_scalar<BigInt>(std::string_view s) {
  return BigInt(std::string(s));
}
template <>
inline Rational parse_scalar<Rational>(std::string_view s) {
  return Rational(std::string(s));
}
template <>
inline double parse_scalar<double>(std::string_view s) {
  return parse_double(s);
}
template <>
inline FeatureVec parse_scalar<FeatureVec>(std::string_view s) {
  FeatureVec f;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string_view part = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    f.v.push_back(parse_double(part));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return f;
}

// Exact rational from a plain decimal literal such as "0.5" or "1", so that
// damping factors keep exact arithmetic exact.
inline Rational rational_from_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  bool neg = false;
  std::size_t i = 0;
  if (s[0] == '+' || s[0] == '-') {
    neg = s[0] == '-';
    i = 1;
  }
  BigInt num = 0;
  BigInt den = 1;
  bool seen_digit = false, seen_dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '.') {
      if (seen_dot) throw std::invalid_argument("bad decimal literal: " + std::string(s));
      seen_dot = true;
    } else if (c == '/') {
      // Accept an explicit fraction as well.
      if (seen_dot || !seen_digit) throw std::invalid_argument("bad number: " + std::string(s));
      return Rational(std::string(s));
    } else if (c >= '0' && c <= '9') {
      num = num * 10 + (c - '0');
      if (seen_dot) den *= 10;
      seen_digit = true;
    } else {
      throw std::invalid_argument("bad decimal literal: " + std::string(s));
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad decimal literal: " + std::string(s));
  if (neg) num = -num;
  return Rational(num, den);
}

}  // namespace sieveforge
