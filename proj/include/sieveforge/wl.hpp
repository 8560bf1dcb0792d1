// One-dimensional Weisfeiler-Leman colour refinement with a canonical
// transcript. Two graphs get the same transcript exactly when refinement
// cannot tell them apart.
//
// Round 0 records the raw degree multiset; round r records the multiset of
// signatures (own colour, sorted neighbour colours) under the previous
// round's colours, then replaces colours by the dense rank of each node's
// signature. Matching transcripts force matching signature-to-rank
// dictionaries round by round, so ranks stay comparable across graphs; the
// first round that fails to split any class is recorded and refinement stops.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "sieveforge/graph.hpp"

namespace sieveforge {

inline std::string wl_transcript(const Graph& g) {
  const int n = g.node_count();
  std::string out = "n" + std::to_string(n);

  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
  {
    std::vector<int> degs = colour;
    std::sort(degs.begin(), degs.end());
    out += "|d:";
    for (std::size_t i = 0; i < degs.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(degs[i]);
    }
    // Degrees become dense ranks so later rounds are scale-free.
    std::vector<int> distinct = degs;
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int& c : colour)
      c = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), c) -
                           distinct.begin());
  }

  std::size_t classes = 0;
  {
    std::vector<int> tmp = colour;
    std::sort(tmp.begin(), tmp.end());
    classes = static_cast<std::size_t>(
        std::unique(tmp.begin(), tmp.end()) - tmp.begin());
  }

  using Sig = std::pair<int, std::vector<int>>;
  for (int round = 1; round <= n; ++round) {
    std::vector<Sig> sigs(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      nb.reserve(g.neighbors(v).size());
      for (int u : g.neighbors(v)) nb.push_back(colour[u]);
      std::sort(nb.begin(), nb.end());
      sigs[v] = {colour[v], std::move(nb)};
    }
    std::vector<Sig> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    out += "|r:";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (i) out += ';';
      out += std::to_string(sorted[i].first);
      out += '(';
      for (std::size_t j = 0; j < sorted[i].second.size(); ++j) {
        if (j) out += ',';
        out += std::to_string(sorted[i].second[j]);
      }
      out += ')';
    }
    std::map<Sig, int> rank;
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      rank[sorted[i]] = static_cast<int>(i);
    for (int v = 0; v < n; ++v) colour[v] = rank[sigs[v]];
    if (sorted.size() == classes) break;
    classes = sorted.size();
  }
  return out;
}

inline bool wl_distinguish(const Graph& a, const Graph& b) {
  return wl_transcript(a) != wl_transcript(b);
}

}  // namespace sieveforge
