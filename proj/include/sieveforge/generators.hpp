// Built-in fixture graphs, the circulant-skip-link family generator, and
// seeded random graphs for tests and experiments.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sieveforge/graph.hpp"
#include "sieveforge/random.hpp"

namespace sieveforge {

// Ring 0-1-...-(n-1)-0 plus chords {i, i+s mod n}. Parameters that would
// duplicate an edge (s = 1, s = n-1, or 2s = n) are rejected.
inline Graph generate_csl(int n, int s) {
  if (n < 5) throw std::invalid_argument("csl: need at least 5 nodes");
  if (s < 2 || s > n - 2) throw std::invalid_argument("csl: skip out of range");
  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<std::size_t>(n));
  auto push_unique = [&edges](int a, int b) {
    if (a > b) std::swap(a, b);
    for (const auto& e : edges)
      if (e == Edge{a, b})
        throw std::invalid_argument("csl: parameters duplicate edge " +
                                    std::to_string(a) + "-" + std::to_string(b));
    edges.emplace_back(a, b);
  };
  for (int i = 0; i < n; ++i) push_unique(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) push_unique(i, (i + s) % n);
  return Graph(n, std::move(edges));
}

namespace detail {

inline Graph cayley_z4xz4_shrikhande() {
  // Cayley graph of Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)};
  // node (a, b) sits at index 4a + b.
  std::vector<Edge> edges;
  auto idx = [](int a, int b) { return 4 * ((a % 4 + 4) % 4) + ((b % 4 + 4) % 4); };
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      int v = idx(a, b);
      for (auto [da, db] : {std::pair{1, 0}, {0, 1}, {1, 1}}) {
        int u = idx(a + da, b + db);
        edges.emplace_back(std::min(u, v), std::max(u, v));
      }
    }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(16, std::move(edges));
}

inline Graph rook_4x4() {
  // Two squares attack each other when they share a row or a column.
  std::vector<Edge> edges;
  auto idx = [](int r, int c) { return 4 * r + c; };
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      for (int c2 = c + 1; c2 < 4; ++c2) edges.emplace_back(idx(r, c), idx(r, c2));
      for (int r2 = r + 1; r2 < 4; ++r2) edges.emplace_back(idx(r, c), idx(r2, c));
    }
  return Graph(16, std::move(edges));
}

}  // namespace detail

inline Graph builtin_graph(const std::string& name) {
  if (name == "k3") return Graph(3, {{0, 1}, {0, 2}, {1, 2}});
  if (name == "p3") return Graph(3, {{0, 1}, {1, 2}});
  if (name == "c6")
    return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  if (name == "two_triangles")
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  if (name == "example6_G")
    return Graph(6, {{0, 1}, {0, 3}, {1, 2}, {1, 4}, {2, 5}, {3, 4}, {4, 5}});
  if (name == "example6_H")
    return Graph(6, {{0, 1}, {0, 4}, {1, 2}, {1, 4}, {2, 3}, {2, 5}, {3, 5}});
  if (name == "shrikhande") return detail::cayley_z4xz4_shrikhande();
  if (name == "rook4x4") return detail::rook_4x4();
  throw std::invalid_argument("unknown builtin graph: " + name);
}

inline const std::vector<std::string>& builtin_graph_names() {
  static const std::vector<std::string> names = {
      "k3", "p3", "c6", "two_triangles", "example6_G", "example6_H",
      "shrikhande", "rook4x4"};
  return names;
}

// Erdos-Renyi style: each pair becomes an edge independently.
inline Graph random_graph(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(p)) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

inline Graph random_featured_graph(int n, double p, int dim, Rng& rng) {
  std::vector<Edge> edges;
  std::vector<std::vector<double>> feats;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(p)) {
        edges.emplace_back(i, j);
        std::vector<double> f(dim);
        for (double& x : f) x = static_cast<double>(rng.range(1, 8));
        feats.push_back(std::move(f));
      }
  return Graph(n, std::move(edges), std::move(feats));
}

}  // namespace sieveforge
