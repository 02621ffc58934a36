#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "helpers.hpp"
#include "minhlt/chordal.hpp"
#include "minhlt/gen.hpp"
#include "minhlt/graph.hpp"
#include "minhlt/oracle.hpp"

using namespace minhlt;
using namespace minhlt::gen;
using namespace testutil;

TEST_CASE("blowup examples") {
  // Edge with weights (1,1), m=2: two 2-cliques completely joined = K_4.
  WeightedTree edge{Graph(2, {{0, 1}}), {1, 1}};
  auto b = blowup(edge, 2);
  CHECK(b.graph.vertex_count() == 4);
  CHECK(b.graph.edge_count() == 6);
  CHECK(std::count(b.origin.begin(), b.origin.end(), 0) == 2);
  CHECK(std::count(b.origin.begin(), b.origin.end(), 1) == 2);

  // Single vertex of weight 5, m=1: K_5.
  WeightedTree single{Graph(1), {5}};
  auto b5 = blowup(single, 1);
  CHECK(b5.graph.vertex_count() == 5);
  CHECK(b5.graph.edge_count() == 10);

  // Identity blowup of a path: P_3 again.
  WeightedTree p3{path_graph(3), {1, 1, 1}};
  auto bp = blowup(p3, 1);
  CHECK(bp.graph.vertex_count() == 3);
  CHECK(bp.graph.edge_count() == 2);
  CHECK(bp.origin == std::vector<int>{0, 1, 2});

  // Blowups are chordal.
  WeightedTree t{path_graph(3), {2, 1, 2}};
  CHECK(chordal::recognize_chordal(blowup(t, 2).graph).chordal);

  CHECK_THROWS(blowup(edge, 2'000'000'000));
}

TEST_CASE("blowup structure: cliques and joins follow the origin map") {
  WeightedTree t{star_graph(2), {1, 2, 1}};  // center 0, leaves 1, 2
  auto b = blowup(t, 2);
  const Graph& g = b.graph;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      bool expect = b.origin[u] == b.origin[v] ||
                    t.tree.has_edge(b.origin[u], b.origin[v]);
      CHECK(g.has_edge(u, v) == expect);
    }
}

TEST_CASE("recursively_optimal_decomposition examples") {
  WeightedTree single{Graph(1), {3}};
  auto d1 = recursively_optimal_decomposition(single);
  CHECK(d1.root == 0);
  CHECK(d1.size() == 1);

  WeightedTree p3{path_graph(3), {1, 5, 1}};
  auto d3 = recursively_optimal_decomposition(p3);
  CHECK(d3.root == 1);
  CHECK(d3.parent == std::vector<int>{1, -1, 1});

  WeightedTree star{star_graph(3), {1, 1, 1, 1}};
  auto ds = recursively_optimal_decomposition(star);
  CHECK(ds.root == 0);
  CHECK(tree_height(ds) == 2);
}

TEST_CASE("construct_witness examples and bound") {
  WeightedTree single{Graph(1), {1}};
  auto w1 = construct_witness(single, 3);  // blowup = K_3
  CHECK(verify_dfs_tree(blowup(single, 3).graph, w1).ok());
  CHECK(tree_height(w1) == 3);

  WeightedTree edge{Graph(2, {{0, 1}}), {1, 1}};
  auto w2 = construct_witness(edge, 2);  // blowup = K_4
  CHECK(verify_dfs_tree(blowup(edge, 2).graph, w2).ok());
  CHECK(tree_height(w2) == 4);

  WeightedTree p3{path_graph(3), {1, 1, 1}};
  auto w3 = construct_witness(p3, 3);
  CHECK(verify_dfs_tree(blowup(p3, 3).graph, w3).ok());
  long long td = oracle::brute_weighted_treedepth(p3).value;
  CHECK(td == 2);
  CHECK(tree_height(w3) <= 3 * td + 9);

  CHECK_THROWS(construct_witness(p3, 2));  // m < |V(t)|
}

TEST_CASE("construct_witness bound over random weighted trees") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto t = random_weighted_tree(2 + static_cast<int>(seed % 4), 3, seed);
    long long n = t.tree.vertex_count();
    long long m = n;  // smallest legal m
    auto w = construct_witness(t, m);
    CHECK(verify_dfs_tree(blowup(t, m).graph, w).ok());
    long long td = oracle::brute_weighted_treedepth(t).value;
    CHECK(tree_height(w) <= m * td + n * n);
  }
}

TEST_CASE("sandwich bound: m*td <= minhlt(blowup) <= m*td + n^2") {
  // All weighted trees with <= 4 vertices, weights <= 3, m = |V(t)|,
  // restricted to blowups small enough for the brute oracle.
  for (int n = 1; n <= 4; ++n) {
    auto levels = enumerate_connected(n);
    for (std::uint64_t mask : levels[n]) {
      Graph shape = mask_to_graph(n, mask);
      if (static_cast<int>(shape.edge_count()) != n - 1) continue;  // trees only
      std::vector<long long> w(n, 1);
      auto next = [&]() {
        for (int i = 0; i < n; ++i) {
          if (w[i] < 3) {
            ++w[i];
            return true;
          }
          w[i] = 1;
        }
        return false;
      };
      do {
        WeightedTree t{shape, w};
        long long m = n;
        long long total = 0;
        for (long long x : w) total += x * m;
        if (total > 10) continue;
        auto b = blowup(t, m);
        long long td = oracle::brute_weighted_treedepth(t).value;
        long long mh = oracle::brute_minhlt(b.graph);
        CHECK(m * td <= mh);
        CHECK(mh <= m * td + n * n);
        CHECK(tree_height(construct_witness(t, m)) <= m * td + n * n);
      } while (next());
    }
  }
}

TEST_CASE("treedepth of a blowup is m times the weighted treedepth") {
  for (int n = 1; n <= 4; ++n) {
    auto levels = enumerate_connected(n);
    for (std::uint64_t mask : levels[n]) {
      Graph shape = mask_to_graph(n, mask);
      if (static_cast<int>(shape.edge_count()) != n - 1) continue;
      std::vector<long long> w(n, 1);
      auto next = [&]() {
        for (int i = 0; i < n; ++i) {
          if (w[i] < 3) {
            ++w[i];
            return true;
          }
          w[i] = 1;
        }
        return false;
      };
      do {
        WeightedTree t{shape, w};
        long long m = n;
        long long total = 0;
        for (long long x : w) total += x * m;
        if (total > 12) continue;
        auto b = blowup(t, m);
        CHECK(oracle::brute_treedepth(b.graph) ==
              m * oracle::brute_weighted_treedepth(t).value);
      } while (next());
    }
  }
}

TEST_CASE("random_chordal") {
  CHECK(random_chordal(1, 0.5, 0).vertex_count() == 1);
  Graph kn = random_chordal(7, 1.0, 3);
  CHECK(kn.edge_count() == 21);  // density 1 gives K_n

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Graph g = random_chordal(2 + static_cast<int>(seed % 11), 0.4, seed);
    CHECK(is_connected(g));
    CHECK(chordal::recognize_chordal(g).chordal);
  }
  // Seed stability.
  CHECK(random_chordal(10, 0.5, 9).edges() ==
        random_chordal(10, 0.5, 9).edges());
  CHECK(random_chordal(10, 0.5, 9).edges() !=
        random_chordal(10, 0.5, 10).edges());
}

TEST_CASE("random_weighted_tree") {
  auto t1 = random_weighted_tree(1, 5, 0);
  CHECK(t1.tree.vertex_count() == 1);
  auto t2 = random_weighted_tree(2, 5, 0);
  CHECK(t2.tree.edge_count() == 1);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto t = random_weighted_tree(8, 3, seed);
    CHECK_NOTHROW(check_weighted_tree(t));
    for (long long w : t.weights) {
      CHECK(w >= 1);
      CHECK(w <= 3);
    }
  }
  CHECK(random_weighted_tree(6, 4, 1).tree.edges() ==
        random_weighted_tree(6, 4, 1).tree.edges());
}

TEST_CASE("traceable_graph families") {
  Graph k4 = traceable_graph(TraceableKind::kKm, 4);
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);

  Graph c5 = traceable_graph(TraceableKind::kCm, 5);
  CHECK(c5.vertex_count() == 5);
  CHECK(c5.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(c5.neighbors(v).size() == 2);

  Graph k33 = traceable_graph(TraceableKind::kKmm, 3);
  CHECK(k33.vertex_count() == 6);
  CHECK(k33.edge_count() == 9);

  CHECK_THROWS(traceable_graph(TraceableKind::kCm, 2));
}

TEST_CASE("traceable families: every DFS tree is a Hamiltonian path") {
  auto all_paths = [](const Graph& g) {
    bool ok = true;
    oracle::enumerate_dfs_trees(g, [&](const DfsTree& t) {
      if (tree_height(t) != g.vertex_count()) ok = false;
      return ok;
    });
    return ok;
  };
  for (int m = 2; m <= 5; ++m)
    CHECK(all_paths(traceable_graph(TraceableKind::kKm, m)));
  for (int m = 3; m <= 8; ++m)
    CHECK(all_paths(traceable_graph(TraceableKind::kCm, m)));
  for (int m = 1; m <= 3; ++m)
    CHECK(all_paths(traceable_graph(TraceableKind::kKmm, m)));
}

TEST_CASE("random_tree_plus_chords") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = random_tree_plus_chords(40, 5, seed);
    CHECK(g.vertex_count() == 40);
    CHECK(is_connected(g));
    CHECK(g.edge_count() >= 39);
    CHECK(g.edge_count() <= 44u);
  }
  CHECK(random_tree_plus_chords(30, 3, 2).edges() ==
        random_tree_plus_chords(30, 3, 2).edges());
}
