// End-to-end acceptance gate: one line per criterion, nonzero exit when any
// criterion misses. Criterion 10 is an expected failure frozen in place: the
// strongly regular pair provably cannot split under entry-multiset statistics
// in exact arithmetic, so the line asserts the refutation instead and any
// drift from it fails the run.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "sieveforge/selftest.hpp"

using namespace sieveforge;
namespace fs = std::filesystem;

namespace {

int failures = 0;

template <typename F>
CheckResult timed(F&& fn, double& ms) {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult r = fn();
  ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
           .count();
  return r;
}

template <typename F>
void criterion(int num, double bound_ms, F&& fn) {
  double ms = 0;
  CheckResult r = timed(fn, ms);
  bool ok = r.pass;
  std::string note = r.detail;
  if (ok && bound_ms > 0 && ms > bound_ms) {
    ok = false;
    note = "took " + std::to_string(ms) + " ms, bound " + std::to_string(bound_ms);
  }
  if (!ok) ++failures;
  std::printf("%-5s %2d %s: %s (%.1f ms)\n", ok ? "pass" : "FAIL", num,
              r.name.c_str(), note.c_str(), ms);
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CheckResult check_csl_classes() {
  const std::string name = "circulant families resolve into exact classes";
  DiscriminationReport rep = run_csl(0, 1);
  if (rep.ids.size() != 150)
    return {name, false, "expected 150 graphs, got " + std::to_string(rep.ids.size())};
  if (rep.classes.size() != 10)
    return {name, false,
            "expected 10 embedding classes, got " + std::to_string(rep.classes.size())};
  for (const auto& cls : rep.classes)
    if (cls.size() != 15)
      return {name, false, "class sizes uneven"};
  if (rep.failure_rate != 0)
    return {name, false, "failure rate " + rep.failure_rate.str()};
  return {name, true,
          "150 graphs, 10 classes of 15, failure rate 0, refinement split " +
              std::to_string(rep.pairs.wl_distinguished) + " pairs"};
}

CheckResult check_cli_determinism(const std::string& cli) {
  const std::string name = "reports are byte-identical across worker counts";
  if (cli.empty()) return {name, false, "no --cli path supplied"};
  fs::path dir = fs::temp_directory_path();
  fs::path one = dir / "acceptance-csl-t1.json";
  fs::path eight = dir / "acceptance-csl-t8.json";
  auto run = [&cli](const std::string& args, const fs::path& out) {
    std::string cmd = "\"" + cli + "\" csl --seed 0 " + args + " --out \"" +
                      out.string() + "\"";
    return std::system(cmd.c_str()) == 0;
  };
  if (!run("--threads 1", one)) return {name, false, "single-worker run failed"};
  if (!run("--threads 8", eight)) return {name, false, "eight-worker run failed"};
  std::string a = read_file(one), b = read_file(eight);
  fs::remove(one);
  fs::remove(eight);
  if (a.empty()) return {name, false, "empty report"};
  if (a != b) return {name, false, "reports differ between 1 and 8 workers"};
  return {name, true, std::to_string(a.size()) + " identical bytes"};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

  criterion(1, 1.0, [] { return check_circ_reference(); });
  criterion(2, 0, [] { return check_adjacency_identity(100, 30, 2026); });
  criterion(3, 10.0, [] { return check_alpha_reference(); });
  criterion(4, 60000.0, [] { return check_homomorphism(1000, 8, 2027); });
  criterion(5, 0, [] { return check_expansion(100, 2028); });
  criterion(6, 0, [] { return check_change_of_order(200, 2029); });
  criterion(7, 0, [] { return check_invariance(50, 2030); });
  criterion(8, 120000.0, [] { return check_sieve_paths(25, 7, 3, 2031); });
  criterion(9, 300000.0, check_csl_classes);

  // The (16,6,2,2) pair: non-isomorphic (4-clique counts 0 vs 8), yet every
  // statistic here reads only the entry multiset, and both outputs equal the
  // same parameter-determined closed form. Separation is off the table, so
  // the criterion stays an expected failure; what must hold instead is the
  // frozen refutation itself.
  double ms = 0;
  CheckResult srg = timed([] { return check_srg_pair(); }, ms);
  if (srg.pass) {
    std::printf("%-5s %2d %s: %s (%.1f ms)\n", "XFAIL", 10,
                "strongly regular pair stays fused", srg.detail.c_str(), ms);
  } else {
    ++failures;
    std::printf("%-5s %2d %s: %s (%.1f ms)\n", "FAIL", 10,
                "strongly regular pair refutation drifted", srg.detail.c_str(), ms);
  }

  criterion(11, 0, [&cli] { return check_cli_determinism(cli); });

  if (failures == 0) {
    std::printf("10 criteria pass, 1 expected failure pinned\n");
    return 0;
  }
  std::printf("%d criteria failed\n", failures);
  return 1;
}
