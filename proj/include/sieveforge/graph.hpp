// Simple undirected graphs on ordered nodes 0..n-1, optionally carrying a
// feature vector per edge. Instances are validated on construction and
// immutable afterwards.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "sieveforge/matrix.hpp"
#include "sieveforge/permutation.hpp"

namespace sieveforge {

using Edge = std::pair<int, int>;

class Graph {
 public:
  Graph() = default;

  Graph(int n, std::vector<Edge> edges) : Graph(n, std::move(edges), {}) {}

  Graph(int n, std::vector<Edge> edges, std::vector<std::vector<double>> edge_features)
      : n_(n) {
    if (n < 0) throw std::invalid_argument("negative node count");
    const bool featured = !edge_features.empty();
    if (featured && edge_features.size() != edges.size())
      throw std::invalid_argument("feature list does not match edge list");

    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto& [u, v] = edges[i];
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loop rejected");
      if (u > v) std::swap(u, v);
      order[i] = i;
    }
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });

    edges_.reserve(edges.size());
    if (featured) features_.reserve(edges.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      const Edge& e = edges[order[k]];
      if (!edges_.empty() && edges_.back() == e)
        throw std::invalid_argument("duplicate edge rejected: " + std::to_string(e.first) +
                                    "-" + std::to_string(e.second));
      edges_.push_back(e);
      if (featured) {
        const auto& f = edge_features[order[k]];
        if (f.empty() || (!features_.empty() && f.size() != features_.front().size()))
          throw std::invalid_argument("edge features must share one positive dimension");
        features_.push_back(f);
      }
    }

    adj_.assign(n, {});
    for (const auto& [u, v] : edges_) {
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  }

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
  }

  bool featured() const { return !features_.empty(); }
  int feature_dim() const {
    return features_.empty() ? 0 : static_cast<int>(features_.front().size());
  }

  const std::vector<double>& feature(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v})
      throw std::invalid_argument("feature lookup on a missing edge");
    return features_[static_cast<std::size_t>(it - edges_.begin())];
  }

  const std::vector<std::vector<double>>& features() const { return features_; }

  // FNV-1a over the node count and the sorted edge list.
  std::uint64_t hash() const {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t x) {
      for (int b = 0; b < 8; ++b) {
        h ^= (x >> (8 * b)) & 0xff;
        h *= 1099511628211ull;
      }
    };
    mix(static_cast<std::uint64_t>(n_));
    for (const auto& [u, v] : edges_) {
      mix(static_cast<std::uint64_t>(u));
      mix(static_cast<std::uint64_t>(v));
    }
    return h;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.features_ == b.features_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<double>> features_;
  std::vector<std::vector<int>> adj_;
};

inline Graph permute_graph(const Graph& g, const Permutation& p) {
  if (p.size() != g.node_count())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(p(u), p(v));
  if (g.featured()) return Graph(g.node_count(), std::move(edges), g.features());
  return Graph(g.node_count(), std::move(edges));
}

template <typename S>
Matrix<S> adjacency_matrix(const Graph& g) {
  static_assert(!std::is_same_v<S, FeatureVec>,
                "adjacency entries need a multiplicative unit");
  Matrix<S> a(g.node_count());
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = S(1);
    a(v, u) = S(1);
  }
  return a;
}

}  // namespace sieveforge
