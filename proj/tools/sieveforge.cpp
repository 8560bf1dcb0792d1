// Command line front door: dataset transforms, pair and family isomorphism
// drivers, the validation suite, and graph6 utilities.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sieveforge/sieveforge.hpp"

namespace {

using namespace sieveforge;

std::vector<std::pair<std::string, Graph>> load_graphs(const std::string& source) {
  const auto& names = builtin_graph_names();
  auto is_builtin = [&](const std::string& s) {
    return std::find(names.begin(), names.end(), s) != names.end();
  };
  if (source.rfind("builtin:", 0) == 0) {
    std::string name = source.substr(8);
    return {{name, builtin_graph(name)}};
  }
  if (!std::filesystem::exists(source)) {
    if (is_builtin(source)) return {{source, builtin_graph(source)}};
    throw std::runtime_error("no such input: " + source);
  }
  std::ifstream in(source, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + source);
  if (source.size() >= 6 && source.compare(source.size() - 6, 6, ".jsonl") == 0)
    return read_graph_jsonl(in);
  return read_graph6_stream(in);
}

struct Sink {
  std::ofstream file;
  std::ostream* out = &std::cout;
  explicit Sink(const std::string& path) {
    if (!path.empty() && path != "-") {
      file.open(path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open " + path);
      out = &file;
    }
  }
  std::ostream& stream() { return *out; }
};

std::vector<int> parse_levels(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad level: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty level list");
  return out;
}

struct ModelFlags {
  std::string variant = "beta";
  std::string levels = "-1";
  std::string scalar = "bigint";
  std::string gamma = "1";
  bool normalize = false;
  bool featured = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--variant", variant, "alpha or beta")
        ->check(CLI::IsMember({"alpha", "beta"}));
    cmd->add_option("--levels", levels, "comma separated levels, -1 for stabilized");
    cmd->add_option("--scalar", scalar, "entry kind")
        ->check(CLI::IsMember({"bigint", "rational", "float"}));
    cmd->add_option("--gamma", gamma, "path damping in (0,1], decimal or p/q");
    cmd->add_flag("--normalize", normalize, "alpha only: divide by expected paths");
    cmd->add_flag("--featured", featured, "use edge feature vectors as weights");
  }

  SnnConfig config() const {
    SnnConfig cfg;
    cfg.variant = variant == "alpha" ? SnnVariant::Alpha : SnnVariant::Beta;
    cfg.levels = parse_levels(levels);
    cfg.scalar = parse_kind(scalar);
    cfg.gamma = rational_from_decimal(gamma);
    cfg.normalize = normalize;
    cfg.featured = featured;
    cfg.validate();
    return cfg;
  }
};

void emit_report(DiscriminationReport& rep, const std::string& out_path,
                 const std::string& csv_path, bool timing,
                 std::chrono::steady_clock::time_point t0) {
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  Sink sink(out_path);
  sink.stream() << report_json(rep, timing).dump(2) << '\n';
  if (!csv_path.empty()) {
    Sink csv(csv_path);
    csv.stream() << report_csv(rep);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"sieve network toolkit"};
  app.require_subcommand(1);
  unsigned threads = default_thread_count();

  auto* transform = app.add_subcommand("transform", "rewrite a graph dataset");
  std::string t_in, t_out = "-", t_emit = "jsonl";
  ModelFlags t_model;
  transform->add_option("--in", t_in, "graph6 or jsonl input")->required();
  transform->add_option("--out", t_out, "output path, - for stdout");
  transform->add_option("--emit", t_emit, "output format")
      ->check(CLI::IsMember({"jsonl", "csv"}));
  t_model.attach(transform);
  transform->add_option("--threads", threads, "worker count");

  auto* iso = app.add_subcommand("iso", "pair verdict: refinement and network");
  std::string i_a, i_b, i_stats = "var";
  ModelFlags i_model;
  i_model.variant = "alpha";
  i_model.levels = "1,1";
  iso->add_option("--a", i_a, "first graph")->required();
  iso->add_option("--b", i_b, "second graph")->required();
  iso->add_option("--stats", i_stats, "embedding statistics");
  i_model.attach(iso);
  iso->add_option("--threads", threads, "worker count");

  auto* csl = app.add_subcommand("csl", "circulant skip link benchmark");
  std::uint64_t seed = 0;
  std::string c_out = "-", c_csv;
  bool timing = false;
  csl->add_option("--seed", seed, "relabeling seed");
  csl->add_option("--out", c_out, "report path, - for stdout");
  csl->add_option("--csv", c_csv, "also write the embedding table");
  csl->add_flag("--timing", timing, "include elapsed time in the report");
  csl->add_option("--threads", threads, "worker count");

  auto* srg = app.add_subcommand("srg", "strongly regular family report");
  std::vector<std::string> s_in;
  std::string s_out = "-", s_csv;
  srg->add_option("--in", s_in, "graph6 family file or builtin, repeatable")
      ->required();
  srg->add_option("--out", s_out, "report path, - for stdout");
  srg->add_option("--csv", s_csv, "also write the embedding table");
  srg->add_flag("--timing", timing, "include elapsed time in the report");
  srg->add_option("--threads", threads, "worker count");

  auto* validate = app.add_subcommand("validate", "run the correctness suite");
  std::uint64_t v_seed = 0;
  bool quick = false;
  validate->add_option("--seed", v_seed, "randomized check seed");
  validate->add_flag("--quick", quick, "fewer randomized trials");

  auto* g6 = app.add_subcommand("g6", "graph6 utilities");
  std::string r_file, e_in, e_out = "-";
  auto* r_opt = g6->add_option("--roundtrip", r_file, "re-encode a file and compare");
  auto* e_opt = g6->add_option("--encode", e_in, "print graph6 for an input");
  g6->add_option("--out", e_out, "output path, - for stdout");
  r_opt->excludes(e_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (transform->parsed()) {
    auto loaded = load_graphs(t_in);
    std::vector<Graph> graphs;
    std::vector<std::string> ids;
    for (auto& [id, g] : loaded) {
      ids.push_back(id);
      graphs.push_back(std::move(g));
    }
    SnnConfig cfg = t_model.config();
    Sink sink(t_out);
    if (t_emit == "jsonl")
      transform_jsonl(sink.stream(), graphs, ids, cfg, threads);
    else
      transform_csv(sink.stream(), graphs, ids, cfg, threads);
    return 0;
  }

  if (iso->parsed()) {
    Graph a = load_graphs(i_a).at(0).second;
    Graph b = load_graphs(i_b).at(0).second;
    SnnConfig cfg = i_model.config();
    std::vector<Stat> stats = parse_stats(i_stats);
    DiscriminationReport rep = discriminate({a, b}, {"a", "b"}, cfg, stats, {}, 0, threads);
    const bool wl = rep.pairs.wl_distinguished > 0;
    const bool snn = rep.pairs.distinguished > 0;
    std::cout << "WL: " << (wl ? "DISTINGUISHED" : "indistinguishable") << "; SNN("
              << i_stats << "): " << (snn ? "DISTINGUISHED" : "indistinguishable")
              << '\n';
    return 0;
  }

  if (csl->parsed()) {
    auto t0 = std::chrono::steady_clock::now();
    DiscriminationReport rep = run_csl(seed, threads);
    emit_report(rep, c_out, c_csv, timing, t0);
    return 0;
  }

  if (srg->parsed()) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Graph> graphs;
    std::vector<std::string> ids;
    for (const std::string& source : s_in) {
      auto loaded = load_graphs(source);
      const bool prefix = s_in.size() > 1 && loaded.size() > 1;
      for (auto& [id, g] : loaded) {
        ids.push_back(prefix
                          ? std::filesystem::path(source).stem().string() + ":" + id
                          : id);
        graphs.push_back(std::move(g));
      }
    }
    DiscriminationReport rep = run_srg(graphs, ids, threads);
    emit_report(rep, s_out, s_csv, timing, t0);
    return 0;
  }

  if (validate->parsed()) {
    auto checks = run_all_checks(v_seed, quick);
    int failures = 0;
    for (const CheckResult& c : checks) {
      std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name;
      if (!c.detail.empty()) std::cout << ": " << c.detail;
      std::cout << '\n';
      failures += !c.pass;
    }
    std::cout << checks.size() - failures << "/" << checks.size() << " checks passed\n";
    return failures ? 1 : 0;
  }

  if (g6->parsed()) {
    if (!r_file.empty()) {
      std::ifstream in(r_file, std::ios::binary);
      if (!in) throw std::runtime_error("cannot open " + r_file);
      std::string line;
      int records = 0;
      while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::string body = line;
        if (body.rfind(kGraph6Header, 0) == 0) {
          body = body.substr(kGraph6Header.size());
          if (body.empty()) continue;
        }
        ++records;
        std::string again = to_graph6(parse_graph6(body));
        if (again != body) {
          std::cout << "record " << records << " re-encodes differently\n";
          return 1;
        }
      }
      std::cout << records << " records round-trip\n";
      return 0;
    }
    if (!e_in.empty()) {
      Sink sink(e_out);
      for (auto& [id, g] : load_graphs(e_in)) sink.stream() << to_graph6(g) << '\n';
      return 0;
    }
    throw std::invalid_argument("g6 needs --roundtrip or --encode");
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
