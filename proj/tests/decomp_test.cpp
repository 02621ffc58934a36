#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "helpers.hpp"
#include "minhlt/decomp.hpp"
#include "minhlt/gen.hpp"
#include "minhlt/graph.hpp"

using namespace minhlt;
using namespace testutil;

TEST_CASE("validate_decomposition examples") {
  TreeDecomposition single{{{0, 1, 2}}, {}};
  CHECK(validate_decomposition(complete_graph(3), single).ok);

  TreeDecomposition p3{{{0, 1}, {1, 2}}, {{0, 1}}};
  CHECK(validate_decomposition(path_graph(3), p3).ok);

  TreeDecomposition bad{{{0, 1}, {2}}, {{0, 1}}};
  auto r = validate_decomposition(path_graph(3), bad);
  CHECK(!r.ok);
  CHECK(!r.violation.empty());

  // Broken connectivity: vertex 1 in two bags not joined through a bag
  // containing it.
  TreeDecomposition discon{{{0, 1}, {0, 2}, {1, 2}}, {{0, 1}, {1, 2}}};
  CHECK(!validate_decomposition(complete_graph(3), discon).ok);
}

TEST_CASE("make_nice examples") {
  // Single bag for K_3: forced node algebra.
  TreeDecomposition single{{{0, 1, 2}}, {}};
  auto nice = make_nice(complete_graph(3), single);
  int intro = 0, forget = 0, join = 0;
  for (const auto& node : nice.nodes) {
    if (node.kind == NiceNodeKind::kIntroduce) ++intro;
    if (node.kind == NiceNodeKind::kForget) ++forget;
    if (node.kind == NiceNodeKind::kJoin) ++join;
  }
  CHECK(intro == 3);
  CHECK(forget == 2);  // forgetting stops at a singleton root bag
  CHECK(join == 0);
  CHECK(nice.nodes[nice.root].bag.size() == 1);
  CHECK(nice.width() == single.width());
  CHECK(validate_decomposition(complete_graph(3), nice.flatten()).ok);

  // Path decomposition of P_4 stays width 1.
  TreeDecomposition p4{{{0, 1}, {1, 2}, {2, 3}}, {{0, 1}, {1, 2}}};
  auto nice4 = make_nice(path_graph(4), p4);
  CHECK(nice4.width() == 1);
  CHECK(validate_decomposition(path_graph(4), nice4.flatten()).ok);

  // A degree-3 decomposition node forces at least one Join.
  Graph star = star_graph(3);
  TreeDecomposition st{{{0}, {0, 1}, {0, 2}, {0, 3}},
                       {{0, 1}, {0, 2}, {0, 3}}};
  auto nices = make_nice(star, st);
  bool has_join = false;
  for (const auto& node : nices.nodes)
    if (node.kind == NiceNodeKind::kJoin) has_join = true;
  CHECK(has_join);

  CHECK_THROWS_AS(make_nice(path_graph(3),
                            TreeDecomposition{{{0, 1}, {2}}, {{0, 1}}}),
                  std::invalid_argument);
}

TEST_CASE("nice decomposition structure invariants") {
  for (const Graph& g :
       {path_graph(6), cycle_graph(6), complete_graph(4), star_graph(5)}) {
    auto td = *exact_decomposition(g);
    auto nice = make_nice(g, td);
    CHECK(nice.width() == td.width());
    CHECK(validate_decomposition(g, nice.flatten()).ok);
    CHECK(nice.nodes[nice.root].bag.size() == 1);
    // Bag equations of each node kind.
    for (const auto& node : nice.nodes) {
      if (node.kind == NiceNodeKind::kIntroduce) {
        std::vector<int> child_bag =
            node.child1 >= 0 ? nice.nodes[node.child1].bag : std::vector<int>{};
        auto expect = child_bag;
        expect.push_back(node.vertex);
        std::sort(expect.begin(), expect.end());
        CHECK(node.bag == expect);
      } else if (node.kind == NiceNodeKind::kForget) {
        auto expect = nice.nodes[node.child1].bag;
        expect.erase(std::find(expect.begin(), expect.end(), node.vertex));
        CHECK(node.bag == expect);
      } else {
        CHECK(node.bag == nice.nodes[node.child1].bag);
        CHECK(node.bag == nice.nodes[node.child2].bag);
      }
    }
    // Every vertex is forgotten exactly once (root's survivor excepted).
    std::vector<int> forgotten(g.vertex_count(), 0);
    for (const auto& node : nice.nodes)
      if (node.kind == NiceNodeKind::kForget) ++forgotten[node.vertex];
    int root_vertex = nice.nodes[nice.root].bag[0];
    for (int v = 0; v < g.vertex_count(); ++v)
      CHECK(forgotten[v] == (v == root_vertex ? 0 : 1));
    // Node count stays linear-ish: <= c * (w+1) * n with c = 4.
    CHECK(static_cast<int>(nice.nodes.size()) <=
          4 * (td.width() + 1) * g.vertex_count() + 4);
  }
}

TEST_CASE("heuristic_decomposition examples") {
  Graph tree(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
  auto td_tree = heuristic_decomposition(tree);
  CHECK(validate_decomposition(tree, td_tree).ok);
  CHECK(td_tree.width() == 1);

  auto td_k5 = heuristic_decomposition(complete_graph(5));
  CHECK(validate_decomposition(complete_graph(5), td_k5).ok);
  CHECK(td_k5.width() == 4);

  auto td_c6 = heuristic_decomposition(cycle_graph(6));
  CHECK(validate_decomposition(cycle_graph(6), td_c6).ok);
  CHECK(td_c6.width() == 2);
}

TEST_CASE("exact_decomposition examples") {
  CHECK(exact_decomposition(cycle_graph(4))->width() == 2);
  CHECK(exact_decomposition(complete_graph(4))->width() == 3);
  CHECK(exact_decomposition(path_graph(9))->width() == 1);
  CHECK(exact_decomposition(star_graph(5))->width() == 1);
  CHECK(!exact_decomposition(path_graph(25)).has_value());  // too large
  for (const Graph& g : {cycle_graph(5), complete_graph(4), star_graph(4)})
    CHECK(validate_decomposition(g, *exact_decomposition(g)).ok);
}

TEST_CASE("exact width never exceeds heuristic width") {
  auto levels = enumerate_connected(6);
  for (int n = 2; n <= 6; ++n)
    for (std::uint64_t mask : levels[n]) {
      Graph g = mask_to_graph(n, mask);
      auto exact = *exact_decomposition(g);
      auto heur = heuristic_decomposition(g);
      CHECK(validate_decomposition(g, exact).ok);
      CHECK(validate_decomposition(g, heur).ok);
      CHECK(exact.width() <= heur.width());
    }
}

TEST_CASE("make_nice preserves width and validity (exhaustive n <= 6)") {
  auto levels = enumerate_connected(6);
  for (int n = 2; n <= 6; ++n)
    for (std::uint64_t mask : levels[n]) {
      Graph g = mask_to_graph(n, mask);
      auto td = *exact_decomposition(g);
      auto nice = make_nice(g, td);
      CHECK(nice.width() == td.width());
      CHECK(validate_decomposition(g, nice.flatten()).ok);
    }
}

TEST_CASE("decomposition_from_elimination_order") {
  // Eliminating a path end-to-end gives bags of size 2.
  auto td = decomposition_from_elimination_order(path_graph(4), {0, 1, 2, 3});
  CHECK(validate_decomposition(path_graph(4), td).ok);
  CHECK(td.width() == 1);
  // A bad order on C_4 fills in: width 2 regardless.
  auto tdc = decomposition_from_elimination_order(cycle_graph(4), {0, 1, 2, 3});
  CHECK(validate_decomposition(cycle_graph(4), tdc).ok);
  CHECK(tdc.width() == 2);
}

namespace {

void check_balance(const Graph& g, const std::vector<int>& k,
                   const TreeDecomposition& td) {
  // K is a subset of some bag.
  bool inside_bag = false;
  for (const auto& bag : td.bags)
    if (std::includes(bag.begin(), bag.end(), k.begin(), k.end()))
      inside_bag = true;
  CHECK(inside_bag);
  // Components of G - K obey 2 * max <= sum.
  std::vector<char> removed(g.vertex_count(), 0);
  for (int v : k) removed[v] = 1;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> remap(g.vertex_count(), -1);
  int idx = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!removed[v]) remap[v] = idx++;
  for (auto [u, v] : g.edges())
    if (!removed[u] && !removed[v]) edges.emplace_back(remap[u], remap[v]);
  Graph rest(idx, std::move(edges));
  std::size_t total = 0, biggest = 0;
  for (const auto& comp : connected_components(rest)) {
    total += comp.size();
    biggest = std::max(biggest, comp.size());
  }
  CHECK(2 * biggest <= total);
}

}  // namespace

TEST_CASE("balanced_separator examples") {
  TreeDecomposition p3{{{0, 1}, {1, 2}}, {{0, 1}}};
  auto k = balanced_separator(path_graph(3), p3);
  CHECK(std::find(k.begin(), k.end(), 1) != k.end());
  check_balance(path_graph(3), k, p3);

  Graph star = star_graph(6);
  auto td_star = heuristic_decomposition(star);
  auto ks = balanced_separator(star, td_star);
  CHECK(std::find(ks.begin(), ks.end(), 0) != ks.end());  // the center
  check_balance(star, ks, td_star);

  TreeDecomposition p7{{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}},
                       {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}};
  auto kp = balanced_separator(path_graph(7), p7);
  check_balance(path_graph(7), kp, p7);

  CHECK_THROWS_AS(
      balanced_separator(Graph(1), TreeDecomposition{{{0}}, {}}),
      std::invalid_argument);
}

TEST_CASE("balanced_separator property on random graphs (n <= 50)") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 49);
    // Random connected graph: random spanning tree plus extra edges.
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
      edges.emplace_back(v, static_cast<int>(rng() % v));
    int extra = static_cast<int>(rng() % (2 * n));
    for (int i = 0; i < extra; ++i) {
      int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u != v) edges.emplace_back(u, v);
    }
    std::set<std::pair<int, int>> dedup;
    for (auto [u, v] : edges) dedup.insert(std::minmax(u, v));
    Graph g(n, {dedup.begin(), dedup.end()});
    auto td = heuristic_decomposition(g);
    REQUIRE(validate_decomposition(g, td).ok);
    check_balance(g, balanced_separator(g, td), td);
  }
}
