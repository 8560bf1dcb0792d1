// Dataset transformation: run the configured network over a list of graphs
// and stream the output matrices as JSON Lines or CSV. JSONL carries exact
// entries as decimal strings, floats as numbers and feature vectors as
// arrays; CSV lists nonzero entries as id,i,j,value rows.
#pragma once

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "sieveforge/graph.hpp"
#include "sieveforge/parallel.hpp"
#include "sieveforge/snn.hpp"

namespace sieveforge {

namespace detail {

inline nlohmann::ordered_json entry_json(const BigInt& x) { return x.str(); }
inline nlohmann::ordered_json entry_json(const Rational& x) { return x.str(); }
inline nlohmann::ordered_json entry_json(double x) { return x; }
inline nlohmann::ordered_json entry_json(const FeatureVec& x) { return x.v; }

template <typename S>
nlohmann::ordered_json record_json(const std::string& id, const Matrix<S>& m, int dim) {
  nlohmann::ordered_json j;
  j["id"] = id;
  j["n"] = m.n();
  j["kind"] = kind_name(scalar_kind_of<S>::value);
  if constexpr (std::is_same_v<S, FeatureVec>) j["m"] = dim;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (int i = 0; i < m.n(); ++i)
    for (int jx = 0; jx < m.n(); ++jx) {
      if constexpr (std::is_same_v<S, FeatureVec>) {
        // Zero entries widen to the record's dimension.
        const FeatureVec& f = m(i, jx);
        if (f.v.empty())
          entries.push_back(std::vector<double>(static_cast<std::size_t>(dim), 0.0));
        else
          entries.push_back(f.v);
      } else {
        entries.push_back(entry_json(m(i, jx)));
      }
    }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace detail

// Graphs to transform must agree on featuredness and feature dimension.
inline void check_uniform_features(const std::vector<Graph>& graphs, bool featured) {
  if (!featured) return;
  int dim = -1;
  for (const Graph& g : graphs) {
    if (!g.featured())
      throw std::invalid_argument("featured run on a graph without edge features");
    if (dim < 0) dim = g.feature_dim();
    if (g.feature_dim() != dim)
      throw std::invalid_argument("mixed feature dimensions across graphs");
  }
}

inline void transform_jsonl(std::ostream& out, const std::vector<Graph>& graphs,
                            const std::vector<std::string>& ids, const SnnConfig& cfg,
                            unsigned threads = 1) {
  cfg.validate();
  check_uniform_features(graphs, cfg.featured);
  std::vector<std::string> lines(graphs.size());
  parallel_for(graphs.size(), threads, [&](std::size_t i) {
    MatrixVariant m = run_snn(graphs[i], cfg, 1);
    lines[i] = std::visit(
        [&](const auto& mm) {
          return detail::record_json(ids[i], mm, graphs[i].feature_dim()).dump();
        },
        m);
  });
  for (const std::string& l : lines) out << l << '\n';
}

inline void transform_csv(std::ostream& out, const std::vector<Graph>& graphs,
                          const std::vector<std::string>& ids, const SnnConfig& cfg,
                          unsigned threads = 1) {
  cfg.validate();
  if (cfg.effective_kind() == ScalarKind::FeatureVec)
    throw std::invalid_argument("feature vector entries need the jsonl format");
  check_uniform_features(graphs, cfg.featured);
  std::vector<std::string> blocks(graphs.size());
  parallel_for(graphs.size(), threads, [&](std::size_t g) {
    MatrixVariant m = run_snn(graphs[g], cfg, 1);
    std::string block;
    std::visit(
        [&](const auto& mm) {
          for (int i = 0; i < mm.n(); ++i)
            for (int j = 0; j < mm.n(); ++j) {
              if (is_zero(mm(i, j))) continue;
              block += ids[g];
              block += ',';
              block += std::to_string(i);
              block += ',';
              block += std::to_string(j);
              block += ',';
              block += scalar_string(mm(i, j));
              block += '\n';
            }
        },
        m);
    blocks[g] = std::move(block);
  });
  out << "id,i,j,value\n";
  for (const std::string& b : blocks) out << b;
}

// Graph input as JSON Lines: {"id": ..., "n": ..., "edges": [[u,v], ...],
// "edge_features": [[...], ...]} with id and edge_features optional.
inline std::vector<std::pair<std::string, Graph>> read_graph_jsonl(std::istream& in) {
  std::vector<std::pair<std::string, Graph>> out;
  std::string line;
  std::size_t record = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++record;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw std::runtime_error("graph record " + std::to_string(record) + ": " +
                               e.what());
    }
    if (!j.contains("n") || !j["n"].is_number_integer())
      throw std::runtime_error("graph record " + std::to_string(record) +
                               ": missing node count");
    std::vector<Edge> edges;
    if (j.contains("edges"))
      for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
          throw std::runtime_error("graph record " + std::to_string(record) +
                                   ": bad edge");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
      }
    std::vector<std::vector<double>> feats;
    if (j.contains("edge_features"))
      for (const auto& f : j["edge_features"])
        feats.push_back(f.get<std::vector<double>>());
    std::string id = j.contains("id") ? j["id"].get<std::string>()
                                      : std::to_string(record);
    try {
      out.emplace_back(std::move(id),
                       Graph(j["n"].get<int>(), std::move(edges), std::move(feats)));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("graph record " + std::to_string(record) + ": " +
                               e.what());
    }
  }
  return out;
}

}  // namespace sieveforge
