// Plain-text matrix serialization used by golden tests and the CLI: a header
// line "n kind" followed by n rows of space-separated entries. Feature vector
// entries are comma-joined components.
#pragma once

#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "sieveforge/matrix.hpp"
#include "sieveforge/scalars.hpp"

namespace sieveforge {

using MatrixVariant =
    std::variant<Matrix<BigInt>, Matrix<Rational>, Matrix<double>, Matrix<FeatureVec>>;

template <typename S>
std::string dump_matrix(const Matrix<S>& m) {
  std::string out = std::to_string(m.n());
  out += ' ';
  out += kind_name(scalar_kind_of<S>::value);
  out += '\n';
  for (int i = 0; i < m.n(); ++i) {
    for (int j = 0; j < m.n(); ++j) {
      if (j) out += ' ';
      out += scalar_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

inline std::string dump_matrix(const MatrixVariant& mv) {
  return std::visit([](const auto& m) { return dump_matrix(m); }, mv);
}

namespace detail {

template <typename S>
Matrix<S> parse_matrix_body(std::istringstream& in, int n) {
  Matrix<S> m(n);
  std::string tok;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!(in >> tok)) throw std::invalid_argument("matrix dump truncated");
      m(i, j) = parse_scalar<S>(tok);
    }
  if (in >> tok) throw std::invalid_argument("trailing data after matrix dump");
  return m;
}

}  // namespace detail

inline MatrixVariant parse_matrix(const std::string& text) {
  std::istringstream in(text);
  int n = -1;
  std::string kind;
  if (!(in >> n >> kind) || n < 0)
    throw std::invalid_argument("bad matrix dump header");
  switch (parse_kind(kind)) {
    case ScalarKind::BigInt: return detail::parse_matrix_body<BigInt>(in, n);
    case ScalarKind::Rational: return detail::parse_matrix_body<Rational>(in, n);
    case ScalarKind::Float: return detail::parse_matrix_body<double>(in, n);
    case ScalarKind::FeatureVec: return detail::parse_matrix_body<FeatureVec>(in, n);
  }
  throw std::logic_error("unreachable");
}

}  // namespace sieveforge
