#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "helpers.hpp"
#include "minhlt/decomp.hpp"
#include "minhlt/fpt.hpp"
#include "minhlt/graph.hpp"
#include "minhlt/oracle.hpp"

using namespace minhlt;
using namespace minhlt::fpt;
using namespace testutil;

TEST_CASE("solve_minhlt examples") {
  auto yes4 = solve_minhlt(complete_graph(4), 4);
  CHECK(yes4.yes);
  REQUIRE(yes4.certificate.has_value());
  CHECK(verify_dfs_tree(complete_graph(4), *yes4.certificate).ok());
  CHECK(tree_height(*yes4.certificate) == 4);  // Hamiltonian path

  auto no3 = solve_minhlt(complete_graph(4), 3);
  CHECK(!no3.yes);
  CHECK(!no3.certificate.has_value());

  auto p7 = solve_minhlt(path_graph(7), 4);
  CHECK(p7.yes);
  CHECK(verify_dfs_tree(path_graph(7), *p7.certificate).ok());
  CHECK(tree_height(*p7.certificate) <= 4);

  CHECK(!solve_minhlt(cycle_graph(5), 4).yes);
  CHECK(solve_minhlt(cycle_graph(5), 5).yes);

  CHECK_THROWS_AS(solve_minhlt(Graph(2), 1), std::invalid_argument);
  CHECK_THROWS_AS(solve_minhlt(path_graph(3), 0), std::invalid_argument);
}

TEST_CASE("ancestral_closure examples") {
  RootedTree path{{-1, 0, 1, 2}, 0};  // a-b-c-d from the root down
  auto whole = ancestral_closure(path, {3});
  CHECK(whole.kept == std::vector<int>{0, 1, 2, 3});

  auto r = ancestral_closure(path, {0});
  CHECK(r.kept == std::vector<int>{0});
  CHECK(r.tree.size() == 1);

  auto abc = ancestral_closure(path, {2});
  CHECK(abc.kept == std::vector<int>{0, 1, 2});
  CHECK(abc.tree.root == 0);
  CHECK(tree_height(abc.tree) == 3);

  RootedTree branchy{{-1, 0, 0, 1, 1}, 0};  // leaves 2, 3, 4
  auto all = ancestral_closure(branchy, {2, 3, 4});
  CHECK(all.kept.size() == 5);
}

TEST_CASE("is_promising examples") {
  // D path r-a-b with the image at b.
  PartialSolution ps;
  ps.parent = {-1, 0, 1};
  ps.label = {-1, -1, 0};
  ps.in_s = {0, 0, 0};
  CHECK(is_promising(ps));  // S empty

  ps.in_s = {1, 1, 0};  // S = all unassigned vertices
  CHECK(is_promising(ps));

  ps.in_s = {0, 1, 0};  // a in S, r not: edge r-a crosses
  CHECK(!is_promising(ps));
}

TEST_CASE("canonical keys") {
  PartialSolution a;
  a.parent = {-1, 0, 0};
  a.label = {-1, 0, 1};
  a.in_s = {0, 0, 0};
  PartialSolution b;  // mirror-image child order
  b.parent = {-1, 0, 0};
  b.label = {-1, 1, 0};
  b.in_s = {0, 0, 0};
  CHECK(tree_key(canonicalize(a)) == tree_key(canonicalize(b)));
  CHECK(canonical_key(canonicalize(a)) == canonical_key(canonicalize(b)));

  // Same (D, tau), different S: tree part equal, full key different.
  PartialSolution c;
  c.parent = {-1, 0, 1};
  c.label = {-1, -1, 0};
  c.in_s = {0, 0, 0};
  PartialSolution d = c;
  d.in_s = {1, 1, 0};
  CHECK(tree_key(canonicalize(c)) == tree_key(canonicalize(d)));
  CHECK(canonical_key(canonicalize(c)) != canonical_key(canonicalize(d)));

  // Two single-vertex solutions with the same preimage agree.
  PartialSolution e;
  e.parent = {-1};
  e.label = {0};
  e.in_s = {0};
  CHECK(canonical_key(canonicalize(e)) == canonical_key(canonicalize(e)));
}

TEST_CASE("transitions_introduce at a leaf") {
  // Leaf node introducing v with k=3: exactly the 3 root paths with the
  // image at the deep end and S empty.
  Graph g = path_graph(2);
  auto sols = transitions_introduce(std::nullopt, {}, {0}, 0, g, 3);
  CHECK(sols.size() == 3);
  std::set<int> sizes;
  for (const auto& tr : sols) {
    const auto& ps = tr.sol;
    sizes.insert(ps.size());
    CHECK(ps.image_of(0) != -1);
    // The image is the unique leaf of a path.
    int img = ps.image_of(0);
    for (int v = 0; v < ps.size(); ++v)
      CHECK(ps.in_s[v] == 0);
    int depth = 0;
    for (int v = img; v != -1; v = ps.parent[v]) ++depth;
    CHECK(depth == ps.size());  // img at the bottom
  }
  CHECK(sizes == std::set<int>{1, 2, 3});
}

TEST_CASE("transitions_introduce respects adjacency and the height budget") {
  // Child: single vertex image of w; introduce v adjacent to w, k=2.
  Graph g(2, {{0, 1}});  // v=0, w=1
  PartialSolution child;
  child.parent = {-1};
  child.label = {0};  // bag {1}, position 0
  child.in_s = {0};
  auto sols = transitions_introduce(child, {1}, {0, 1}, 0, g, 2);
  // Only tau(v) as child of tau(w): height 2 caps path length at 1, and
  // D never grows a new root above the existing one.
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].sol.size() == 2);
  int iv = sols[0].sol.image_of(0), iw = sols[0].sol.image_of(1);
  CHECK(sols[0].sol.parent[iv] == iw);

  // Non-adjacent introduce in K_2-less graph: no D-edge between images.
  Graph g2(2);  // no edges -- disconnected, but transitions are local
  auto sols2 = transitions_introduce(child, {1}, {0, 1}, 0, g2, 2);
  for (const auto& tr : sols2) {
    int a = tr.sol.image_of(0), b = tr.sol.image_of(1);
    CHECK(tr.sol.parent[a] != b);
    CHECK(tr.sol.parent[b] != a);
  }

  // k=1 allows no room below the existing image: nothing at all.
  CHECK(transitions_introduce(child, {1}, {0, 1}, 0, g, 1).empty());
}

TEST_CASE("transitions_forget") {
  // D = r - tau(u) - tau(v), bag {u, v} = {0, 1}; forget 1.
  PartialSolution child;
  child.parent = {-1, 0, 1};
  child.label = {-1, 0, 1};
  child.in_s = {0, 0, 0};
  auto res = transitions_forget(child, {0, 1}, 1);
  REQUIRE(res.has_value());
  // tau(v) lands in S' and leaves the closure: legal; D keeps r-tau(u).
  CHECK(res->sol.size() == 2);
  CHECK(res->sol.image_of(0) != -1);

  // Illegal: an unassigned vertex outside S' would be cut off.
  PartialSolution bad;
  bad.parent = {-1, 0, 0, 2};  // r -> tau(u); r -> b -> tau(v)
  bad.label = {-1, 0, -1, 1};
  bad.in_s = {0, 0, 0, 0};
  CHECK(!transitions_forget(bad, {0, 1}, 1).has_value());
}

TEST_CASE("transitions_join") {
  PartialSolution base;
  base.parent = {-1};
  base.label = {0};
  base.in_s = {0};
  base = canonicalize(base);
  auto joined = transitions_join(base, base);
  REQUIRE(joined.has_value());  // S empty on both sides
  CHECK(joined->size() == 1);

  // Nonempty S joined with itself: S cap S != empty set.
  PartialSolution with_s;
  with_s.parent = {-1, 0};
  with_s.label = {0, -1};
  with_s.in_s = {0, 1};
  with_s = canonicalize(with_s);
  CHECK(!transitions_join(with_s, with_s).has_value());

  // Disjoint S over isomorphic trees: union.
  PartialSolution other = with_s;
  std::fill(other.in_s.begin(), other.in_s.end(), 0);
  auto u = transitions_join(with_s, other);
  REQUIRE(u.has_value());
  int s_count = 0;
  for (char f : u->in_s) s_count += f;
  CHECK(s_count == 1);

  // Different tree parts never join.
  CHECK(!transitions_join(base, with_s).has_value());
}

TEST_CASE("oracle equivalence, monotonicity, sandwich (exhaustive n <= 7)") {
  auto levels = enumerate_connected(7);
  for (int n = 1; n <= 7; ++n) {
    for (std::uint64_t mask : levels[n]) {
      Graph g = mask_to_graph(n, mask);
      int truth = oracle::brute_minhlt(g);
      int td = oracle::brute_treedepth(g);
      bool prev_yes = false;
      for (int k = 1; k <= n; ++k) {
        auto res = solve_minhlt(g, k);
        REQUIRE_MESSAGE(res.yes == (truth <= k),
                        "n=" << n << " mask=" << mask << " k=" << k);
        if (res.yes) {
          REQUIRE(res.certificate.has_value());
          CHECK(verify_dfs_tree(g, *res.certificate).ok());
          CHECK(tree_height(*res.certificate) <= k);
          CHECK(td <= k);  // treedepth lower-bounds the height
        } else {
          CHECK(!res.certificate.has_value());
          CHECK(k < truth);
          CHECK(truth <= (1 << td));
        }
        CHECK(!(prev_yes && !res.yes));  // monotone in k
        prev_yes = res.yes;
        // Table sanity: |V(D)| stays within the closure bound.
        if (res.stats.max_d_size > 0)
          CHECK(res.stats.max_d_size <=
                static_cast<std::size_t>((res.stats.decomposition_width + 1) *
                                         k));
      }
    }
  }
}

TEST_CASE("oracle equivalence on random graphs n in 8..10") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 8 + static_cast<int>(rng() % 3);
    std::set<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
      edges.insert(std::minmax(v, static_cast<int>(rng() % v)));
    int extra = static_cast<int>(rng() % (n + 4));
    for (int i = 0; i < extra; ++i) {
      int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u != v) edges.insert(std::minmax(u, v));
    }
    Graph g(n, {edges.begin(), edges.end()});
    int truth = oracle::brute_minhlt(g);
    int k = 1 + static_cast<int>(rng() % n);
    auto res = solve_minhlt(g, k);
    REQUIRE_MESSAGE(res.yes == (truth <= k), "trial " << trial);
    if (res.yes) {
      CHECK(verify_dfs_tree(g, *res.certificate).ok());
      CHECK(tree_height(*res.certificate) <= k);
    }
  }
}

TEST_CASE("verdict independent of the supplied decomposition") {
  auto check_graph = [](const Graph& g) {
    auto exact = *exact_decomposition(g);
    auto heur = heuristic_decomposition(g);
    int n = g.vertex_count();
    for (int k = 1; k <= n; ++k) {
      auto r1 = solve_minhlt(g, k, exact);
      auto r2 = solve_minhlt(g, k, heur);
      CHECK(r1.yes == r2.yes);
      if (r1.yes) {
        CHECK(verify_dfs_tree(g, *r1.certificate).ok());
        CHECK(verify_dfs_tree(g, *r2.certificate).ok());
      }
    }
  };
  auto levels = enumerate_connected(6);
  for (int n = 2; n <= 6; ++n)
    for (std::uint64_t mask : levels[n]) check_graph(mask_to_graph(n, mask));
  // A sample at n = 8.
  std::mt19937_64 rng(5);
  auto level8 = enumerate_connected(8)[8];
  for (int i = 0; i < 100; ++i)
    check_graph(mask_to_graph(8, level8[rng() % level8.size()]));
}

TEST_CASE("solve_minhlt accepts a caller-supplied valid decomposition") {
  Graph g = cycle_graph(6);
  TreeDecomposition td{{{0, 1, 5}, {1, 4, 5}, {1, 2, 4}, {2, 3, 4}},
                       {{0, 1}, {1, 2}, {2, 3}}};
  REQUIRE(validate_decomposition(g, td).ok);
  CHECK(solve_minhlt(g, 4, td).yes == (oracle::brute_minhlt(g) <= 4));
}
