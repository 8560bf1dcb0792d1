// Level structure around a node and the image recurrence built on it.
//
// Breadth-first strata N_0 = {v}, N_1, ... induce arc layers M_k: every host
// edge between N_k and N_{k-1}, directed inward. Reading the layers as
// matrices and composing them with circ, outermost first, yields
// Image(v, j) = circ(level_j, Image(v, j-1)) with Image(v, 0) = 0; entry
// (w, u) is the number of inward paths from w to u that a traversal of the
// layered structure allows (damped or feature-weighted when configured).
// Level matrices are applied from their arc lists, so the work per step is
// proportional to the arcs present; entries accumulate in the same order as
// the dense circ and match it bit for bit.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "sieveforge/graph.hpp"
#include "sieveforge/matrix.hpp"
#include "sieveforge/modg.hpp"
#include "sieveforge/scalars.hpp"

namespace sieveforge {

struct SieveLevels {
  int node = 0;
  int k0 = 0;                          // highest nonempty level; 0 for isolated nodes
  std::vector<std::vector<int>> strata;  // strata[i] = N_i, ascending node ids
  std::vector<std::vector<Arc>> levels;  // levels[i] = M_{i+1}, sorted by (tail, head)
};

inline SieveLevels build_levels(const Graph& g, int v) {
  if (v < 0 || v >= g.node_count()) throw std::invalid_argument("node out of range");
  SieveLevels s;
  s.node = v;
  std::vector<char> seen(g.node_count(), 0);
  seen[v] = 1;
  s.strata.push_back({v});
  for (;;) {
    const std::vector<int>& prev = s.strata.back();
    std::vector<int> next;
    for (int u : prev)
      for (int w : g.neighbors(u))
        if (!seen[w]) {
          seen[w] = 1;
          next.push_back(w);
        }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    std::vector<Arc> arcs;
    for (int w : next)
      for (int u : g.neighbors(w))
        if (std::binary_search(prev.begin(), prev.end(), u)) arcs.push_back({w, u});
    std::sort(arcs.begin(), arcs.end());
    s.strata.push_back(std::move(next));
    s.levels.push_back(std::move(arcs));
  }
  s.k0 = static_cast<int>(s.levels.size());
  return s;
}

// Entry written for one inward arc; the damping factor (and, in featured
// mode, the edge's feature vector) lives here so the recurrence is generic
// over the scalar kind.
template <typename S>
struct EdgeValue;

template <>
struct EdgeValue<BigInt> {
  BigInt operator()(const Graph&, Arc) const { return 1; }
};

template <>
struct EdgeValue<Rational> {
  Rational gamma{1};
  Rational operator()(const Graph&, Arc) const { return gamma; }
};

template <>
struct EdgeValue<double> {
  double gamma = 1.0;
  double operator()(const Graph&, Arc) const { return gamma; }
};

template <>
struct EdgeValue<FeatureVec> {
  double gamma = 1.0;
  FeatureVec operator()(const Graph& g, Arc a) const {
    FeatureVec f(g.feature(a.tail, a.head));
    for (double& x : f.v) x *= gamma;
    return f;
  }
};

// One arc layer as a matrix: entry (tail, head) per arc. Layer arcs are
// pairwise non-composable by construction; reject anything else.
template <typename S>
Matrix<S> tr_level(const Graph& g, const std::vector<Arc>& arcs,
                   const EdgeValue<S>& value = {}) {
  std::vector<char> is_tail(g.node_count(), 0), is_head(g.node_count(), 0);
  for (const Arc& a : arcs) {
    is_tail[a.tail] = 1;
    is_head[a.head] = 1;
  }
  for (int v = 0; v < g.node_count(); ++v)
    if (is_tail[v] && is_head[v])
      throw std::logic_error("composable arcs in one level");
  Matrix<S> m(g.node_count());
  for (const Arc& a : arcs) m(a.tail, a.head) = m(a.tail, a.head) + value(g, a);
  return m;
}

// All images of one node up to a level bound (bound -1 or anything above k0
// means k0). images[j] holds Image(node, j) for j = 0..limit.
template <typename S>
struct NodeSieve {
  SieveLevels levels;
  std::vector<Matrix<S>> images;
};

template <typename S>
NodeSieve<S> compute_node_sieve(const Graph& g, int v, int up_to,
                                const EdgeValue<S>& value = {}) {
  if (up_to < -1) throw std::invalid_argument("level below -1");
  NodeSieve<S> ns;
  ns.levels = build_levels(g, v);
  const int limit = (up_to < 0 || up_to > ns.levels.k0) ? ns.levels.k0 : up_to;
  const int n = g.node_count();
  ns.images.reserve(limit + 1);
  ns.images.push_back(Matrix<S>::zero(n));
  for (int j = 1; j <= limit; ++j) {
    const Matrix<S>& prev = ns.images.back();
    Matrix<S> cur = prev;
    for (const Arc& a : ns.levels.levels[j - 1]) {
      S x = value(g, a);
      cur(a.tail, a.head) = cur(a.tail, a.head) + x;
      if (is_zero(x)) continue;
      for (int c = 0; c < n; ++c) {
        const S& pc = prev(a.head, c);
        if (is_zero(pc)) continue;
        cur(a.tail, c) += x * pc;
      }
    }
    ns.images.push_back(std::move(cur));
  }
  return ns;
}

template <typename S>
Matrix<S> image(const Graph& g, int v, int k, const EdgeValue<S>& value = {}) {
  NodeSieve<S> ns = compute_node_sieve(g, v, k, value);
  return std::move(ns.images.back());
}

// Mirror images of the reversed layering; always the transpose.
template <typename S>
Matrix<S> coimage(const Graph& g, int v, int l, const EdgeValue<S>& value = {}) {
  return transpose(image(g, v, l, value));
}

// The layered structure as a monoid element: the fold, outermost level
// first, of the per-level subgraph elements. The literal counterpart of the
// image recurrence.
inline MonoidElement sieve_element(const Graph& g, int v, int k,
                                   std::size_t path_cap = kDefaultPathCap) {
  SieveLevels ls = build_levels(g, v);
  const int limit = (k < 0 || k > ls.k0) ? ls.k0 : k;
  MonoidElement e(g.node_count());
  for (int j = limit; j >= 1; --j) {
    MonoidElement level = fold_arcs(g.node_count(), ls.levels[j - 1], path_cap);
    e = bullet(e, level, path_cap);
  }
  return e;
}

// Same structure with every arc reversed and the fold order mirrored.
inline MonoidElement cosieve_element(const Graph& g, int v, int l,
                                     std::size_t path_cap = kDefaultPathCap) {
  SieveLevels ls = build_levels(g, v);
  const int limit = (l < 0 || l > ls.k0) ? ls.k0 : l;
  MonoidElement e(g.node_count());
  for (int j = 1; j <= limit; ++j) {
    std::vector<Arc> rev;
    rev.reserve(ls.levels[j - 1].size());
    for (const Arc& a : ls.levels[j - 1]) rev.push_back({a.head, a.tail});
    std::sort(rev.begin(), rev.end());
    e = bullet(e, fold_arcs(g.node_count(), rev, path_cap), path_cap);
  }
  return e;
}

// Message-passing preprocessing example: for every node and each of its
// neighbours, compose the neighbour's inward column with the single arc back
// to the node, and sum the results.
template <typename S = BigInt>
Matrix<S> two_hop_transform(const Graph& g) {
  const int n = g.node_count();
  Matrix<S> out(n);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) {
      Matrix<S> col(n);  // inward column of u
      for (int w : g.neighbors(u)) col(w, u) = S(1);
      Matrix<S> arc(n);
      arc(u, v) = S(1);
      out = add(out, circ(col, arc));
    }
  return out;
}

}  // namespace sieveforge
