// The two sieve network variants.
//
// Alpha: out[i][j] is the (i, j) entry of circ(CoImage(v_i, l), Image(v_j, k)).
// Only row i of the first factor and column j of the second matter, and row i
// of CoImage(v_i, l) is column i of Image(v_i, l), so one inward column per
// node at each requested level suffices. The normalized form divides each
// entry by the product of those two factors' sums, with zero whenever either
// sum is zero.
//
// Beta: left fold of circ over totals Su_t, where Su_t sums CoImage(v, l_t)
// over all nodes for odd positions (1-indexed) and Image(v, l_t) for even
// positions. Level -1 means each node's own stabilization level.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sieveforge/graph.hpp"
#include "sieveforge/matrix.hpp"
#include "sieveforge/matrix_io.hpp"
#include "sieveforge/parallel.hpp"
#include "sieveforge/scalars.hpp"
#include "sieveforge/sieve.hpp"

namespace sieveforge {

enum class SnnVariant { Alpha, Beta };

struct SnnConfig {
  SnnVariant variant = SnnVariant::Beta;
  std::vector<int> levels = {-1};
  bool normalize = false;
  ScalarKind scalar = ScalarKind::BigInt;
  Rational gamma{1};
  bool featured = false;

  ScalarKind effective_kind() const {
    return featured ? ScalarKind::FeatureVec : scalar;
  }

  void validate() const {
    if (gamma <= 0 || gamma > 1)
      throw std::invalid_argument("gamma must lie in (0, 1]");
    if (!featured && scalar == ScalarKind::BigInt && gamma != 1)
      throw std::invalid_argument("bigint entries require gamma = 1");
    if (variant == SnnVariant::Alpha && levels.size() != 2)
      throw std::invalid_argument("alpha takes exactly two levels");
    if (variant == SnnVariant::Beta && levels.empty())
      throw std::invalid_argument("beta takes at least one level");
    for (int l : levels)
      if (l < -1) throw std::invalid_argument("levels must be >= -1");
    if (normalize && variant != SnnVariant::Alpha)
      throw std::invalid_argument("normalization applies to the alpha variant");
    if (normalize && !featured && scalar == ScalarKind::BigInt)
      throw std::invalid_argument("normalization needs a divisible scalar kind");
  }

  std::string describe() const {
    std::string s = variant == SnnVariant::Alpha ? "alpha(" : "beta(";
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(levels[i]);
    }
    s += ')';
    if (normalize) s += " normalized";
    s += ' ';
    s += kind_name(effective_kind());
    if (gamma != 1) s += " gamma=" + gamma.str();
    return s;
  }
};

namespace detail {

template <typename S>
struct AlphaColumns {
  std::vector<S> l_col, k_col;  // inward columns of Image(v, l), Image(v, k)
  S l_sum{}, k_sum{};
};

template <typename S>
AlphaColumns<S> alpha_columns(const Graph& g, int v, int l, int k,
                              const EdgeValue<S>& value) {
  const int top = (l < 0 || k < 0) ? -1 : std::max(l, k);
  NodeSieve<S> ns = compute_node_sieve(g, v, top, value);
  auto clamp = [&ns](int x) {
    return (x < 0 || x > ns.levels.k0) ? ns.levels.k0 : x;
  };
  AlphaColumns<S> ac;
  const int n = g.node_count();
  ac.l_col.resize(n);
  ac.k_col.resize(n);
  const Matrix<S>& ml = ns.images[clamp(l)];
  const Matrix<S>& mk = ns.images[clamp(k)];
  for (int t = 0; t < n; ++t) {
    ac.l_col[t] = ml(t, v);
    ac.k_col[t] = mk(t, v);
    ac.l_sum += ml(t, v);
    ac.k_sum += mk(t, v);
  }
  return ac;
}

inline Rational divide(const Rational& x, const Rational& d) { return x / d; }
inline double divide(double x, double d) { return x / d; }
inline FeatureVec divide(const FeatureVec& x, const FeatureVec& d) {
  if (x.v.empty()) return x;
  FeatureVec r = x;
  for (std::size_t i = 0; i < r.v.size(); ++i)
    r.v[i] = (i < d.v.size() && d.v[i] != 0.0) ? r.v[i] / d.v[i] : 0.0;
  return r;
}
inline BigInt divide(const BigInt&, const BigInt&) {
  throw std::logic_error("bigint entries do not divide");
}

}  // namespace detail

template <typename S>
Matrix<S> snn_alpha(const Graph& g, int l, int k, bool normalize,
                    const EdgeValue<S>& value = {}, unsigned threads = 1) {
  const int n = g.node_count();
  std::vector<detail::AlphaColumns<S>> cols(n);
  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t v) {
    cols[v] = detail::alpha_columns(g, static_cast<int>(v), l, k, value);
  });
  Matrix<S> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      S e = cols[i].l_col[j] + cols[j].k_col[i];
      for (int t = 0; t < n; ++t) {
        const S& a = cols[i].l_col[t];
        if (is_zero(a)) continue;
        const S& b = cols[j].k_col[t];
        if (is_zero(b)) continue;
        e += a * b;
      }
      if (normalize) {
        if (is_zero(cols[i].l_sum) || is_zero(cols[j].k_sum))
          e = S{};
        else
          e = detail::divide(e, cols[i].l_sum * cols[j].k_sum);
      }
      out(i, j) = std::move(e);
    }
  return out;
}

template <typename S>
Matrix<S> snn_beta(const Graph& g, const std::vector<int>& levels,
                   const EdgeValue<S>& value = {}, unsigned threads = 1) {
  if (levels.empty()) throw std::invalid_argument("beta takes at least one level");
  const int n = g.node_count();
  std::vector<int> distinct = levels;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const bool any_stabilized = distinct.front() < 0;
  const int top = any_stabilized ? -1 : distinct.back();

  // Per node, the image at every distinct requested level; summed in node
  // order afterwards so the schedule cannot affect the totals.
  std::vector<std::vector<Matrix<S>>> per_node(n);
  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t v) {
    NodeSieve<S> ns = compute_node_sieve(g, static_cast<int>(v), top, value);
    auto clamp = [&ns](int x) {
      return (x < 0 || x > ns.levels.k0) ? ns.levels.k0 : x;
    };
    std::vector<Matrix<S>>& mine = per_node[v];
    mine.reserve(distinct.size());
    for (int l : distinct) mine.push_back(ns.images[clamp(l)]);
  });
  std::map<int, Matrix<S>> totals;
  for (std::size_t d = 0; d < distinct.size(); ++d) {
    Matrix<S> sum(n);
    for (int v = 0; v < n; ++v) sum = add(sum, per_node[v][d]);
    totals.emplace(distinct[d], std::move(sum));
  }

  Matrix<S> out(n);
  for (std::size_t t = 0; t < levels.size(); ++t) {
    const Matrix<S>& total = totals.at(levels[t]);
    // Odd 1-indexed positions take the mirrored totals.
    Matrix<S> su = (t % 2 == 0) ? transpose(total) : total;
    out = (t == 0) ? std::move(su) : circ(out, su);
  }
  return out;
}

// Runtime dispatch over the configured scalar kind.
inline MatrixVariant run_snn(const Graph& g, const SnnConfig& cfg,
                             unsigned threads = 1) {
  cfg.validate();
  if (cfg.featured && !g.featured())
    throw std::invalid_argument("featured run on a graph without edge features");
  auto run = [&](auto value) -> MatrixVariant {
    using S = decltype(value(g, Arc{}));
    if (cfg.variant == SnnVariant::Alpha)
      return snn_alpha<S>(g, cfg.levels[0], cfg.levels[1], cfg.normalize, value,
                          threads);
    return snn_beta<S>(g, cfg.levels, value, threads);
  };
  switch (cfg.effective_kind()) {
    case ScalarKind::BigInt:
      return run(EdgeValue<BigInt>{});
    case ScalarKind::Rational:
      return run(EdgeValue<Rational>{cfg.gamma});
    case ScalarKind::Float:
      return run(EdgeValue<double>{static_cast<double>(cfg.gamma)});
    case ScalarKind::FeatureVec:
      return run(EdgeValue<FeatureVec>{static_cast<double>(cfg.gamma)});
  }
  throw std::logic_error("unreachable");
}

}  // namespace sieveforge
