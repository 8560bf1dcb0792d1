// Isomorphism-discrimination runs: embed every graph through a configured
// network, group by exact embedding equality, and compare against the colour
// refinement baseline. Includes the two desk-scale experiment drivers and
// deterministic report serialization.
#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "sieveforge/generators.hpp"
#include "sieveforge/graph.hpp"
#include "sieveforge/parallel.hpp"
#include "sieveforge/permutation.hpp"
#include "sieveforge/random.hpp"
#include "sieveforge/snn.hpp"
#include "sieveforge/stats.hpp"
#include "sieveforge/wl.hpp"

namespace sieveforge {

struct PairCounts {
  std::int64_t distinguished = 0;
  std::int64_t total = 0;
  std::int64_t wl_distinguished = 0;
};

struct DiscriminationReport {
  SnnConfig config;
  std::vector<Stat> stats;
  std::uint64_t seed = 0;
  std::vector<std::string> ids;
  std::vector<Embedding> embeddings;
  std::vector<std::vector<int>> classes;  // graph indices, by first occurrence
  PairCounts pairs;
  Rational failure_rate{0};
  std::vector<std::pair<int, int>> duplicate_pairs;  // identical inputs
  std::int64_t elapsed_ms = 0;
};

// labels, when nonempty, carry ground truth: two graphs are isomorphic iff
// their labels match. A failure is then an unseparated cross-label pair.
// Without labels only byte-identical inputs count as isomorphic.
inline DiscriminationReport discriminate(const std::vector<Graph>& graphs,
                                         const std::vector<std::string>& ids,
                                         const SnnConfig& cfg,
                                         const std::vector<Stat>& stats,
                                         const std::vector<int>& labels = {},
                                         std::uint64_t seed = 0,
                                         unsigned threads = 1) {
  cfg.validate();
  if (cfg.effective_kind() != ScalarKind::BigInt &&
      cfg.effective_kind() != ScalarKind::Rational)
    throw std::invalid_argument("discrimination runs need an exact scalar kind");
  if (ids.size() != graphs.size())
    throw std::invalid_argument("id list does not match graph list");
  if (!labels.empty() && labels.size() != graphs.size())
    throw std::invalid_argument("label list does not match graph list");

  DiscriminationReport rep;
  rep.config = cfg;
  rep.stats = stats;
  rep.seed = seed;
  rep.ids = ids;
  rep.embeddings.resize(graphs.size());
  std::vector<std::string> wl(graphs.size());
  parallel_for(graphs.size(), threads, [&](std::size_t i) {
    MatrixVariant m = run_snn(graphs[i], cfg, 1);
    if (auto* b = std::get_if<Matrix<BigInt>>(&m))
      rep.embeddings[i] = embed_stats(*b, stats);
    else
      rep.embeddings[i] = embed_stats(std::get<Matrix<Rational>>(m), stats);
    wl[i] = wl_transcript(graphs[i]);
  });

  std::map<std::vector<Rational>, int> class_of;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto [it, fresh] = class_of.emplace(rep.embeddings[i].values,
                                        static_cast<int>(rep.classes.size()));
    if (fresh) rep.classes.emplace_back();
    rep.classes[it->second].push_back(static_cast<int>(i));
  }

  std::int64_t failures = 0, comparable = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      ++rep.pairs.total;
      const bool separated = rep.embeddings[i].values != rep.embeddings[j].values;
      if (separated) ++rep.pairs.distinguished;
      if (wl[i] != wl[j]) ++rep.pairs.wl_distinguished;
      bool known_isomorphic;
      if (!labels.empty()) {
        known_isomorphic = labels[i] == labels[j];
      } else {
        known_isomorphic = graphs[i] == graphs[j];
        if (known_isomorphic)
          rep.duplicate_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
      if (!known_isomorphic) {
        ++comparable;
        if (!separated) ++failures;
      }
    }
  rep.failure_rate = comparable ? Rational(failures, comparable) : Rational(0);
  return rep;
}

inline constexpr int kCslNodes = 41;
inline const std::vector<int>& csl_skips() {
  static const std::vector<int> skips = {2, 3, 4, 5, 6, 9, 11, 12, 13, 16};
  return skips;
}

// Ten circulant-skip-link classes on 41 nodes, fifteen labelings each: the
// identity labeling plus fourteen seeded relabelings.
inline DiscriminationReport run_csl(std::uint64_t seed, unsigned threads) {
  std::vector<Graph> graphs;
  std::vector<std::string> ids;
  std::vector<int> labels;
  Rng rng(seed);
  for (std::size_t c = 0; c < csl_skips().size(); ++c) {
    const int s = csl_skips()[c];
    Graph base = generate_csl(kCslNodes, s);
    for (int r = 0; r < 15; ++r) {
      Graph g = r == 0 ? base : permute_graph(base, Permutation::random(kCslNodes, rng));
      graphs.push_back(std::move(g));
      ids.push_back("csl-41-s" + std::to_string(s) + "-r" + std::to_string(r));
      labels.push_back(static_cast<int>(c));
    }
  }
  SnnConfig cfg;
  cfg.variant = SnnVariant::Beta;
  cfg.levels = {-1};
  return discriminate(graphs, ids, cfg, {Stat::Sum}, labels, seed, threads);
}

// Strongly regular family files: deeper pipeline, moment statistics on the
// whole matrix and its diagonal.
inline DiscriminationReport run_srg(const std::vector<Graph>& graphs,
                                    const std::vector<std::string>& ids,
                                    unsigned threads) {
  SnnConfig cfg;
  cfg.variant = SnnVariant::Beta;
  cfg.levels = {-1, -1, -1};
  return discriminate(graphs, ids, cfg,
                      {Stat::Mean, Stat::Var, Stat::DiagMean, Stat::DiagVar}, {}, 0,
                      threads);
}

inline nlohmann::ordered_json config_json(const SnnConfig& cfg) {
  nlohmann::ordered_json j;
  j["variant"] = cfg.variant == SnnVariant::Alpha ? "alpha" : "beta";
  j["levels"] = cfg.levels;
  j["normalize"] = cfg.normalize;
  j["scalar"] = kind_name(cfg.effective_kind());
  j["gamma"] = cfg.gamma.str();
  j["featured"] = cfg.featured;
  return j;
}

inline nlohmann::ordered_json report_json(const DiscriminationReport& rep,
                                          bool with_elapsed = false) {
  nlohmann::ordered_json j;
  j["config"] = config_json(rep.config);
  {
    std::vector<std::string> names;
    names.reserve(rep.stats.size());
    for (Stat s : rep.stats) names.push_back(stat_name(s));
    j["statistics"] = names;
  }
  j["seed"] = rep.seed;
  nlohmann::ordered_json gs = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < rep.ids.size(); ++i) {
    nlohmann::ordered_json g;
    g["id"] = rep.ids[i];
    std::vector<std::string> vals;
    vals.reserve(rep.embeddings[i].values.size());
    for (const Rational& v : rep.embeddings[i].values) vals.push_back(v.str());
    g["embedding"] = vals;
    gs.push_back(std::move(g));
  }
  j["graphs"] = std::move(gs);
  nlohmann::ordered_json cs = nlohmann::ordered_json::array();
  for (const auto& cls : rep.classes) {
    nlohmann::ordered_json ids = nlohmann::ordered_json::array();
    for (int i : cls) ids.push_back(rep.ids[i]);
    cs.push_back(std::move(ids));
  }
  j["classes"] = std::move(cs);
  j["pairs"] = {{"distinguished", rep.pairs.distinguished},
                {"total", rep.pairs.total},
                {"wl_distinguished", rep.pairs.wl_distinguished}};
  j["failure_rate"] = rep.failure_rate.str();
  if (!rep.duplicate_pairs.empty()) {
    nlohmann::ordered_json d = nlohmann::ordered_json::array();
    for (auto [a, b] : rep.duplicate_pairs)
      d.push_back({rep.ids[a], rep.ids[b]});
    j["duplicates"] = std::move(d);
  }
  if (with_elapsed) j["elapsed_ms"] = rep.elapsed_ms;
  return j;
}

inline std::string report_csv(const DiscriminationReport& rep) {
  std::string out = "id";
  for (Stat s : rep.stats) {
    out += ',';
    out += stat_name(s);
  }
  out += '\n';
  for (std::size_t i = 0; i < rep.ids.size(); ++i) {
    out += rep.ids[i];
    for (const Rational& v : rep.embeddings[i].values) {
      out += ',';
      out += v.str();
    }
    out += '\n';
  }
  return out;
}

}  // namespace sieveforge
