// The monoid of directed subgraphs over a host graph. An element is a
// directed multigraph (a list of arcs) together with the set of paths a
// traversal is allowed to take; the product concatenates the arc lists and
// closes the path sets under head-to-tail composition. Projecting an element
// to its matrix of path counts per (start, end) pair turns the product into
// circ, which is what the rest of the library exploits; this module is the
// slow, literal route used to validate that projection.
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sieveforge/graph.hpp"
#include "sieveforge/matrix.hpp"

namespace sieveforge {

struct Arc {
  int tail = 0;
  int head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

inline constexpr std::size_t kDefaultPathCap = 1000000;

struct PathCapExceeded : std::runtime_error {
  explicit PathCapExceeded(std::size_t need, std::size_t cap)
      : std::runtime_error("allowed path set would hold " + std::to_string(need) +
                           " paths, above the cap of " + std::to_string(cap)) {}
};

// A connected, cycle-free set of directed arcs inside a host graph: every
// arc's underlying edge belongs to the host and is used at most once.
class DirectedSubgraph {
 public:
  DirectedSubgraph(const Graph& host, std::vector<Arc> arcs)
      : n_(host.node_count()), arcs_(std::move(arcs)) {
    std::vector<Edge> seen;
    for (const Arc& a : arcs_) {
      if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
        throw std::invalid_argument("arc endpoint out of range");
      if (!host.has_edge(a.tail, a.head))
        throw std::invalid_argument("arc is not a host edge");
      seen.emplace_back(std::min(a.tail, a.head), std::max(a.tail, a.head));
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
      throw std::invalid_argument("underlying edge used twice");
    if (!tree_shaped())
      throw std::invalid_argument("arcs must form a connected acyclic edge set");
  }

  int host_nodes() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool empty() const { return arcs_.empty(); }

 private:
  bool tree_shaped() const {
    if (arcs_.empty()) return true;
    // Union-find over the touched nodes; acyclic and connected means the
    // number of touched nodes is exactly arcs + 1.
    std::map<int, int> parent;
    auto find = [&parent](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Arc& a : arcs_) {
      for (int v : {a.tail, a.head})
        if (!parent.count(v)) parent[v] = v;
      int ra = find(a.tail), rb = find(a.head);
      if (ra == rb) return false;
      parent[ra] = rb;
    }
    return parent.size() == arcs_.size() + 1;
  }

  int n_ = 0;
  std::vector<Arc> arcs_;
};

// A path is a chain of arc identifiers; identifiers are positions in the
// owning element's arc list.
using ArcPath = std::vector<int>;

class MonoidElement {
 public:
  explicit MonoidElement(int host_nodes) : n_(host_nodes) {}

  static MonoidElement single_arc(int host_nodes, Arc a) {
    MonoidElement e(host_nodes);
    e.arcs_.push_back(a);
    e.paths_.push_back({0});
    return e;
  }

  // A directed subgraph together with every directed path it contains.
  static MonoidElement from_subgraph(const DirectedSubgraph& d) {
    MonoidElement e(d.host_nodes());
    e.arcs_ = d.arcs();
    std::vector<std::vector<int>> out(d.host_nodes());
    for (std::size_t i = 0; i < e.arcs_.size(); ++i)
      out[e.arcs_[i].tail].push_back(static_cast<int>(i));
    ArcPath cur;
    auto extend = [&](auto&& self, int at) -> void {
      for (int id : out[at]) {
        cur.push_back(id);
        e.paths_.push_back(cur);
        self(self, e.arcs_[id].head);
        cur.pop_back();
      }
    };
    for (int v = 0; v < d.host_nodes(); ++v) extend(extend, v);
    std::sort(e.paths_.begin(), e.paths_.end());
    return e;
  }

  int host_nodes() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<ArcPath>& paths() const { return paths_; }

  int path_tail(const ArcPath& p) const { return arcs_[p.front()].tail; }
  int path_head(const ArcPath& p) const { return arcs_[p.back()].head; }

  // Resolve a path to the arcs it walks.
  std::vector<Arc> resolve(const ArcPath& p) const {
    std::vector<Arc> r;
    r.reserve(p.size());
    for (int id : p) r.push_back(arcs_[id]);
    return r;
  }

  bool valid() const {
    for (const ArcPath& p : paths_) {
      if (p.empty()) return false;
      std::vector<int> ids = p;
      std::sort(ids.begin(), ids.end());
      if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) return false;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0 || static_cast<std::size_t>(p[i]) >= arcs_.size()) return false;
        if (i && arcs_[p[i - 1]].head != arcs_[p[i]].tail) return false;
      }
    }
    return std::is_sorted(paths_.begin(), paths_.end()) &&
           std::adjacent_find(paths_.begin(), paths_.end()) == paths_.end();
  }

  friend bool operator==(const MonoidElement&, const MonoidElement&) = default;

  friend MonoidElement bullet(const MonoidElement& a, const MonoidElement& b,
                              std::size_t path_cap);

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<ArcPath> paths_;  // sorted, unique
};

// Monoid product: disjoint union of the arc lists, and paths of both sides
// plus every composition of an allowed path of a with an allowed path of b
// whose endpoints meet.
inline MonoidElement bullet(const MonoidElement& a, const MonoidElement& b,
                            std::size_t path_cap = kDefaultPathCap) {
  if (a.n_ != b.n_) throw std::invalid_argument("host size mismatch");
  const int shift = static_cast<int>(a.arcs_.size());

  std::vector<std::size_t> by_tail_count(a.n_, 0);
  for (const ArcPath& t : b.paths_) ++by_tail_count[b.path_tail(t)];
  std::size_t compositions = 0;
  for (const ArcPath& s : a.paths_) compositions += by_tail_count[a.path_head(s)];
  const std::size_t total = a.paths_.size() + b.paths_.size() + compositions;
  if (total > path_cap) throw PathCapExceeded(total, path_cap);

  MonoidElement r(a.n_);
  r.arcs_ = a.arcs_;
  r.arcs_.insert(r.arcs_.end(), b.arcs_.begin(), b.arcs_.end());
  r.paths_ = a.paths_;
  r.paths_.reserve(total);
  const std::size_t b_begin = r.paths_.size();
  for (const ArcPath& t : b.paths_) {
    ArcPath shifted;
    shifted.reserve(t.size());
    for (int id : t) shifted.push_back(id + shift);
    r.paths_.push_back(std::move(shifted));
  }
  const std::size_t b_end = r.paths_.size();
  std::vector<std::vector<std::size_t>> bucket(a.n_);
  for (std::size_t ti = b_begin; ti < b_end; ++ti)
    bucket[r.arcs_[r.paths_[ti].front()].tail].push_back(ti);
  for (std::size_t si = 0; si < b_begin; ++si) {
    int join = r.arcs_[r.paths_[si].back()].head;
    for (std::size_t ti : bucket[join]) {
      ArcPath c = r.paths_[si];
      c.insert(c.end(), r.paths_[ti].begin(), r.paths_[ti].end());
      r.paths_.push_back(std::move(c));
    }
  }
  std::sort(r.paths_.begin(), r.paths_.end());
  return r;
}

// Count the allowed paths from each start node to each end node.
inline Matrix<BigInt> tr_count(const MonoidElement& e) {
  Matrix<BigInt> m(e.host_nodes());
  for (const ArcPath& p : e.paths()) m(e.path_tail(p), e.path_head(p)) += 1;
  return m;
}

// Transitive reachability along the arcs, as a 0/1 matrix. Every distinct
// directed subgraph of a host maps to a distinct matrix.
inline Matrix<BigInt> rep(const DirectedSubgraph& d) {
  const int n = d.host_nodes();
  std::vector<std::vector<int>> out(n);
  for (const Arc& a : d.arcs()) out[a.tail].push_back(a.head);
  Matrix<BigInt> m(n);
  std::vector<int> stack;
  std::vector<char> seen(n);
  for (int v = 0; v < n; ++v) {
    std::fill(seen.begin(), seen.end(), 0);
    stack.assign(out[v].begin(), out[v].end());
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      if (seen[u]) continue;
      seen[u] = 1;
      m(v, u) = 1;
      for (int w : out[u]) stack.push_back(w);
    }
  }
  return m;
}

// Order-insensitive comparison: same arc multiset and the same multiset of
// walked arc sequences.
inline bool equivalent(const MonoidElement& a, const MonoidElement& b) {
  if (a.host_nodes() != b.host_nodes()) return false;
  std::vector<Arc> aa = a.arcs(), ba = b.arcs();
  std::sort(aa.begin(), aa.end());
  std::sort(ba.begin(), ba.end());
  if (aa != ba) return false;
  auto walked = [](const MonoidElement& e) {
    std::vector<std::vector<Arc>> w;
    w.reserve(e.paths().size());
    for (const ArcPath& p : e.paths()) w.push_back(e.resolve(p));
    std::sort(w.begin(), w.end());
    return w;
  };
  return walked(a) == walked(b);
}

// Peels a terminal arc into a sink of the tree; folding the pieces back
// together with bullet recovers the subgraph's full path set.
inline std::vector<Arc> edge_factorization(const DirectedSubgraph& d) {
  std::vector<Arc> result;
  auto factor = [](auto&& self, std::vector<Arc> arcs, std::vector<Arc>& out) -> void {
    if (arcs.empty()) return;
    // Sink: a touched node with no outgoing arc. One exists because the
    // arc set is finite and acyclic.
    std::vector<int> nodes;
    for (const Arc& a : arcs) {
      nodes.push_back(a.tail);
      nodes.push_back(a.head);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    int sink = -1;
    for (int v : nodes) {
      bool has_out = false;
      for (const Arc& a : arcs)
        if (a.tail == v) {
          has_out = true;
          break;
        }
      if (!has_out) {
        sink = v;
        break;
      }
    }
    Arc e{-1, -1};
    for (const Arc& a : arcs)
      if (a.head == sink && (e.tail < 0 || a < e)) e = a;
    // Removing e splits the tree into the side of its tail and the side of
    // its head; either side may be empty of arcs.
    std::vector<Arc> rest;
    for (const Arc& a : arcs)
      if (!(a == e)) rest.push_back(a);
    std::vector<int> stack = {e.tail};
    std::vector<char> visited;
    int maxnode = 0;
    for (const Arc& a : rest) maxnode = std::max({maxnode, a.tail, a.head});
    maxnode = std::max({maxnode, e.tail, e.head});
    visited.assign(maxnode + 1, 0);
    visited[e.tail] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Arc& a : rest) {
        for (auto [x, y] : {std::pair{a.tail, a.head}, {a.head, a.tail}})
          if (x == v && !visited[y]) {
            visited[y] = 1;
            stack.push_back(y);
          }
      }
    }
    std::vector<Arc> tail_part, head_part;
    for (const Arc& a : rest)
      (visited[a.tail] ? tail_part : head_part).push_back(a);
    self(self, std::move(tail_part), out);
    out.push_back(e);
    self(self, std::move(head_part), out);
  };
  factor(factor, d.arcs(), result);
  return result;
}

// Left fold of bullet over single-arc elements.
inline MonoidElement fold_arcs(int host_nodes, const std::vector<Arc>& arcs,
                               std::size_t path_cap = kDefaultPathCap) {
  MonoidElement e(host_nodes);
  for (const Arc& a : arcs)
    e = bullet(e, MonoidElement::single_arc(host_nodes, a), path_cap);
  return e;
}

}  // namespace sieveforge
