// Exact matrix statistics used as isomorphism embeddings: entry and diagonal
// sums, means and population variances as exact rationals, and the exact
// determinant via fraction-free elimination.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sieveforge/matrix.hpp"
#include "sieveforge/scalars.hpp"

namespace sieveforge {

enum class Stat { Sum, Mean, Var, DiagMean, DiagVar, Det };

inline const char* stat_name(Stat s) {
  switch (s) {
    case Stat::Sum: return "sum";
    case Stat::Mean: return "mean";
    case Stat::Var: return "var";
    case Stat::DiagMean: return "diag_mean";
    case Stat::DiagVar: return "diag_var";
    case Stat::Det: return "det";
  }
  return "?";
}

inline Stat parse_stat(std::string_view s) {
  if (s == "sum") return Stat::Sum;
  if (s == "mean") return Stat::Mean;
  if (s == "var") return Stat::Var;
  if (s == "diag_mean") return Stat::DiagMean;
  if (s == "diag_var") return Stat::DiagVar;
  if (s == "det") return Stat::Det;
  throw std::invalid_argument("unknown statistic: " + std::string(s));
}

inline std::vector<Stat> parse_stats(std::string_view csv) {
  std::vector<Stat> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string_view part =
        csv.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                        : comma - pos);
    out.push_back(parse_stat(part));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

// Bareiss elimination: every division along the way is exact, so the result
// is the true determinant for integer and rational entries alike.
template <typename S>
S exact_determinant(const Matrix<S>& m) {
  static_assert(std::is_same_v<S, BigInt> || std::is_same_v<S, Rational>,
                "determinant requires an exact scalar kind");
  const int n = m.n();
  if (n == 0) return S(1);
  Matrix<S> a = m;
  bool negate = false;
  S prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (is_zero(a(k, k))) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (!is_zero(a(r, k))) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return S(0);
      for (int c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = S(0);
    }
    prev = a(k, k);
  }
  S det = a(n - 1, n - 1);
  return negate ? S(-det) : det;
}

struct Embedding {
  std::vector<Stat> stats;
  std::vector<Rational> values;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

namespace detail {

template <typename S>
Rational to_rational(const S& x) {
  return Rational(x);
}

struct MomentView {
  Rational sum, sq_sum;
  long long count = 0;

  Rational mean() const { return count ? sum / count : Rational(0); }
  // Population variance: mean of squares minus squared mean.
  Rational var() const {
    if (!count) return Rational(0);
    Rational m = mean();
    return sq_sum / count - m * m;
  }
};

template <typename S>
MomentView moments(const Matrix<S>& m, bool diagonal_only) {
  MomentView mv{Rational(0), Rational(0), 0};
  const int n = m.n();
  for (int i = 0; i < n; ++i) {
    const int j_lo = diagonal_only ? i : 0;
    const int j_hi = diagonal_only ? i : n - 1;
    for (int j = j_lo; j <= j_hi; ++j) {
      Rational x = to_rational(m(i, j));
      mv.sum += x;
      mv.sq_sum += x * x;
      ++mv.count;
    }
  }
  return mv;
}

}  // namespace detail

// Statistics over all entries (diag_* over the main diagonal only), every
// value an exact rational. Restricted to exact scalar kinds.
template <typename S>
Embedding embed_stats(const Matrix<S>& m, const std::vector<Stat>& stats) {
  static_assert(std::is_same_v<S, BigInt> || std::is_same_v<S, Rational>,
                "embeddings require an exact scalar kind");
  Embedding e;
  e.stats = stats;
  detail::MomentView all = detail::moments(m, false);
  detail::MomentView diag = detail::moments(m, true);
  for (Stat s : stats) {
    switch (s) {
      case Stat::Sum: e.values.push_back(all.sum); break;
      case Stat::Mean: e.values.push_back(all.mean()); break;
      case Stat::Var: e.values.push_back(all.var()); break;
      case Stat::DiagMean: e.values.push_back(diag.mean()); break;
      case Stat::DiagVar: e.values.push_back(diag.var()); break;
      case Stat::Det: e.values.push_back(detail::to_rational(exact_determinant(m))); break;
    }
  }
  return e;
}

}  // namespace sieveforge
