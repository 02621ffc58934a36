#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "minhlt/chordal.hpp"
#include "minhlt/fpt.hpp"
#include "minhlt/gen.hpp"
#include "minhlt/graph.hpp"
#include "minhlt/io.hpp"

namespace {

using minhlt::DfsTree;
using minhlt::Graph;
using nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

struct Report {
  std::string command;
  std::string verdict;
  std::optional<int> height;
  double time_ms = 0;
  std::uint64_t seed = 0;
  bool as_json = false;

  void print() const {
    if (as_json) {
      json j{{"command", command},
             {"verdict", verdict},
             {"height", height ? json(*height) : json(nullptr)},
             {"time_ms", time_ms},
             {"seed", seed}};
      std::cout << j.dump() << "\n";
    } else if (height) {
      std::cout << verdict << " height=" << *height << "\n";
    } else {
      std::cout << verdict << "\n";
    }
  }
};

int run_solve_minhlt(const std::string& graph_path, int k,
                     const std::string& td_path, const std::string& out_path,
                     bool as_json) {
  auto start = std::chrono::steady_clock::now();
  Graph g = minhlt::io::read_graph_file(graph_path);
  std::optional<minhlt::TreeDecomposition> td;
  if (!td_path.empty()) td = minhlt::io::read_decomposition_file(td_path);
  auto res = minhlt::fpt::solve_minhlt(g, k, td);
  Report rep{"solve minhlt", res.yes ? "YES" : "NO", std::nullopt,
             elapsed_ms(start), 0, as_json};
  if (res.yes) {
    rep.height = minhlt::tree_height(*res.certificate);
    if (!out_path.empty())
      minhlt::io::write_tree_file(out_path, *res.certificate);
  }
  rep.print();
  return res.yes ? kExitYes : kExitNo;
}

int run_solve_dual(const std::string& graph_path, int k,
                   const std::string& out_path, bool as_json,
                   std::uint64_t budget) {
  auto start = std::chrono::steady_clock::now();
  Graph g = minhlt::io::read_graph_file(graph_path);
  minhlt::chordal::DualSolveResult res;
  const int n = g.vertex_count();
  if (k < 1 || k > n) throw std::runtime_error("need 1 <= k <= n");
  // Same dispatch as dual_minhlt_chordal, with the budget threaded through.
  auto rec = minhlt::chordal::recognize_chordal(g);
  if (!rec.chordal) throw std::runtime_error("input graph is not chordal");
  if (!minhlt::is_connected(g))
    throw std::runtime_error("input graph is not connected");
  if (g.edge_count() == std::size_t(n) * (n - 1) / 2) {
    res = {};
  } else {
    auto ct = minhlt::chordal::clique_tree(g, rec.peo);
    auto K = minhlt::balanced_separator(g, ct);
    std::sort(K.begin(), K.end());
    int ks = static_cast<int>(K.size());
    if (ks <= n - 2 * k) {
      res.yes = true;
      res.certificate = minhlt::chordal::dfs_from_hamiltonian_separator(g, K, K);
    } else if (ks <= n - k) {
      res = minhlt::chordal::solve_moderate_case(g, k, K, 4, budget);
    }
  }
  Report rep{"solve dual-chordal", res.yes ? "YES" : "NO", std::nullopt,
             elapsed_ms(start), 0, as_json};
  if (res.yes) {
    rep.height = minhlt::tree_height(*res.certificate);
    if (!out_path.empty())
      minhlt::io::write_tree_file(out_path, *res.certificate);
  }
  rep.print();
  return res.yes ? kExitYes : kExitNo;
}

int run_verify(const std::string& graph_path, const std::string& tree_path,
               int max_height, bool as_json) {
  auto start = std::chrono::steady_clock::now();
  Graph g = minhlt::io::read_graph_file(graph_path);
  minhlt::RootedTree t = minhlt::io::read_tree_file(tree_path);
  auto check = minhlt::verify_dfs_tree(g, t);
  Report rep{"verify", "", std::nullopt, 0, 0, as_json};
  int code = kExitYes;
  if (!check.ok()) {
    rep.verdict = "INVALID";
    code = kExitNo;
    if (!as_json) std::cout << "witness: " << check.message << "\n";
  } else {
    int h = minhlt::tree_height(t);
    rep.height = h;
    if (max_height > 0 && h > max_height) {
      rep.verdict = "TOO-TALL";
      code = kExitNo;
    } else {
      rep.verdict = "OK";
    }
  }
  rep.time_ms = elapsed_ms(start);
  rep.print();
  return code;
}

void write_graph_with_header(const std::string& path, const Graph& g,
                             const std::string& header) {
  minhlt::io::write_graph_file(path, g, {header});
}

int run_bench(const std::string& suite, const std::vector<int>& sizes, int k,
              std::uint64_t seed, std::uint64_t budget, bool as_json) {
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    int n = sizes[i];
    std::uint64_t inst_seed = seed + i;
    auto start = std::chrono::steady_clock::now();
    std::string verdict;
    std::optional<int> height;
    std::size_t peak = 0;
    try {
      if (suite == "minhlt") {
        // Chord count is capped so instance width stays bounded as n grows.
        Graph g = minhlt::gen::random_tree_plus_chords(
            n, std::min(n / 20, 50), inst_seed);
        auto res = minhlt::fpt::solve_minhlt(g, k);
        verdict = res.yes ? "YES" : "NO";
        if (res.yes) height = minhlt::tree_height(*res.certificate);
        peak = res.stats.peak_table_size;
      } else {
        Graph g = minhlt::gen::random_chordal(n, 0.5, inst_seed);
        minhlt::chordal::DualSolveResult res;
        auto rec = minhlt::chordal::recognize_chordal(g);
        auto ct = minhlt::chordal::clique_tree(g, rec.peo);
        if (g.edge_count() != std::size_t(n) * (n - 1) / 2) {
          auto K = minhlt::balanced_separator(g, ct);
          std::sort(K.begin(), K.end());
          int ks = static_cast<int>(K.size());
          if (ks <= n - 2 * k) {
            res.yes = true;
            res.certificate =
                minhlt::chordal::dfs_from_hamiltonian_separator(g, K, K);
          } else if (ks <= n - k) {
            res = minhlt::chordal::solve_moderate_case(g, k, K, 4, budget);
          }
        }
        verdict = res.yes ? "YES" : "NO";
        if (res.yes) height = minhlt::tree_height(*res.certificate);
      }
    } catch (const std::exception& e) {
      verdict = std::string("ERROR: ") + e.what();
    }
    double ms = elapsed_ms(start);
    if (as_json) {
      json j{{"suite", suite},       {"n", n},
             {"k", k},               {"seed", inst_seed},
             {"verdict", verdict},   {"time_ms", ms},
             {"peak_table", peak},
             {"height", height ? json(*height) : json(nullptr)}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "suite=" << suite << " n=" << n << " k=" << k
                << " seed=" << inst_seed << " verdict=" << verdict
                << " time_ms=" << ms << " peak_table=" << peak << "\n";
    }
  }
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DFS spanning trees of bounded height: solvers, generators, "
               "and verification"};
  app.require_subcommand(1);
  bool as_json = false;
  int threads = 1;
  app.add_flag("--json", as_json, "one-line machine-readable report");
  app.add_option("--threads", threads, "worker count (results do not depend on it)")
      ->check(CLI::PositiveNumber);

  // solve
  auto* solve = app.add_subcommand("solve", "decide height bounds");
  solve->require_subcommand(1);
  int k = 0;
  std::string graph_path, td_path, out_path;
  std::uint64_t budget = 20'000'000;
  auto* sm = solve->add_subcommand("minhlt", "is there a DFS tree of height <= k");
  sm->add_option("--k", k, "height bound")->required();
  sm->add_option("--td", td_path, "tree decomposition file (.td)");
  sm->add_option("--out", out_path, "write the certificate (.tree)");
  sm->add_option("graph", graph_path, "input graph (.gr)")->required();
  auto* sd = solve->add_subcommand("dual-chordal",
                                   "is MinHLT <= n-k on a chordal graph");
  sd->add_option("--k", k, "dual parameter")->required();
  sd->add_option("--out", out_path, "write the certificate (.tree)");
  sd->add_option("--budget", budget, "moderate-case enumeration step budget");
  sd->add_option("graph", graph_path, "input graph (.gr)")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "check a DFS tree certificate");
  std::string tree_path;
  int max_height = 0;
  verify->add_option("graph", graph_path, "input graph (.gr)")->required();
  verify->add_option("tree", tree_path, "certificate (.tree)")->required();
  verify->add_option("--max-height", max_height, "also enforce a height bound");

  // gen
  auto* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  std::uint64_t seed = 0;
  std::string wtree_path, kind = "km";
  long long m = 1;
  int n = 1, wmax = 3, chords = 0;
  double density = 0.5;
  auto* gb = gen->add_subcommand("blowup", "blown-up weighted tree");
  gb->add_option("--wtree", wtree_path, "weighted tree (.wt)")->required();
  gb->add_option("--m", m, "blowup factor")->required();
  gb->add_option("--seed", seed, "recorded in the header");
  gb->add_option("--out", out_path, "output graph (.gr)")->required();
  auto* gc = gen->add_subcommand("chordal", "random connected chordal graph");
  gc->add_option("--n", n, "vertex count")->required();
  gc->add_option("--density", density, "0..1");
  gc->add_option("--seed", seed, "rng seed");
  gc->add_option("--out", out_path, "output graph (.gr)")->required();
  auto* gw = gen->add_subcommand("wtree", "random weighted tree");
  gw->add_option("--n", n, "vertex count")->required();
  gw->add_option("--wmax", wmax, "max weight");
  gw->add_option("--seed", seed, "rng seed");
  gw->add_option("--out", out_path, "output file (.wt)")->required();
  auto* gt = gen->add_subcommand("traceable", "K_m, C_m, or K_{m,m}");
  gt->add_option("--kind", kind, "km | cm | kmm")
      ->check(CLI::IsMember({"km", "cm", "kmm"}));
  gt->add_option("--m", m, "family parameter")->required();
  gt->add_option("--seed", seed, "recorded in the header");
  gt->add_option("--out", out_path, "output graph (.gr)")->required();
  auto* gp = gen->add_subcommand("tree-chords", "random subcubic tree plus chords");
  gp->add_option("--n", n, "vertex count")->required();
  gp->add_option("--chords", chords, "extra edges");
  gp->add_option("--seed", seed, "rng seed");
  gp->add_option("--out", out_path, "output graph (.gr)")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "timing table over generated instances");
  std::string suite = "minhlt";
  std::vector<int> sizes;
  bench->add_option("--suite", suite, "minhlt | dual-chordal")
      ->check(CLI::IsMember({"minhlt", "dual-chordal"}));
  bench->add_option("--sizes", sizes, "instance sizes")->delimiter(',');
  bench->add_option("--k", k, "parameter")->required();
  bench->add_option("--seed", seed, "base seed");
  bench->add_option("--budget", budget, "moderate-case enumeration step budget");

  CLI11_PARSE(app, argc, argv);
  (void)threads;  // reserved; the solvers are sequential

  try {
    if (sm->parsed()) {
      if (k < 1) throw std::runtime_error("--k must be at least 1");
      return run_solve_minhlt(graph_path, k, td_path, out_path, as_json);
    }
    if (sd->parsed()) return run_solve_dual(graph_path, k, out_path, as_json, budget);
    if (verify->parsed())
      return run_verify(graph_path, tree_path, max_height, as_json);
    if (gb->parsed()) {
      auto t = minhlt::io::read_weighted_tree_file(wtree_path);
      auto bu = minhlt::gen::blowup(t, m);
      write_graph_with_header(out_path, bu.graph,
                              "gen blowup m=" + std::to_string(m) +
                                  " seed=" + std::to_string(seed));
      return kExitYes;
    }
    if (gc->parsed()) {
      auto g = minhlt::gen::random_chordal(n, density, seed);
      write_graph_with_header(out_path, g,
                              "gen chordal n=" + std::to_string(n) +
                                  " density=" + std::to_string(density) +
                                  " seed=" + std::to_string(seed));
      return kExitYes;
    }
    if (gw->parsed()) {
      auto t = minhlt::gen::random_weighted_tree(n, wmax, seed);
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot open " + out_path);
      out << "c gen wtree n=" << n << " wmax=" << wmax << " seed=" << seed
          << "\n";
      minhlt::io::write_weighted_tree(out, t);
      return kExitYes;
    }
    if (gt->parsed()) {
      minhlt::gen::TraceableKind tk = minhlt::gen::TraceableKind::kKm;
      if (kind == "cm") tk = minhlt::gen::TraceableKind::kCm;
      if (kind == "kmm") tk = minhlt::gen::TraceableKind::kKmm;
      auto g = minhlt::gen::traceable_graph(tk, static_cast<int>(m));
      write_graph_with_header(out_path, g,
                              "gen traceable kind=" + kind +
                                  " m=" + std::to_string(m) +
                                  " seed=" + std::to_string(seed));
      return kExitYes;
    }
    if (gp->parsed()) {
      auto g = minhlt::gen::random_tree_plus_chords(n, chords, seed);
      write_graph_with_header(out_path, g,
                              "gen tree-chords n=" + std::to_string(n) +
                                  " chords=" + std::to_string(chords) +
                                  " seed=" + std::to_string(seed));
      return kExitYes;
    }
    if (bench->parsed()) return run_bench(suite, sizes, k, seed, budget, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
