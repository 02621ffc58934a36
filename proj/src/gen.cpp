#include "minhlt/gen.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace minhlt {
namespace gen {

Blowup blowup(const WeightedTree& t, long long m) {
  check_weighted_tree(t);
  if (m < 1) throw std::invalid_argument("blowup: m must be positive");
  const int tn = t.tree.vertex_count();
  long long total = 0;
  for (int x = 0; x < tn; ++x) {
    total += t.weights[x] * m;
    if (total > 2'000'000)
      throw std::invalid_argument("blowup: vertex budget exceeded");
  }
  Blowup out;
  out.origin.reserve(total);
  std::vector<std::pair<int, int>> ranges(tn);  // [begin, end) per tree vertex
  int next = 0;
  for (int x = 0; x < tn; ++x) {
    int sz = static_cast<int>(t.weights[x] * m);
    ranges[x] = {next, next + sz};
    for (int i = 0; i < sz; ++i) out.origin.push_back(x);
    next += sz;
  }
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < tn; ++x)
    for (int a = ranges[x].first; a < ranges[x].second; ++a)
      for (int b = a + 1; b < ranges[x].second; ++b) edges.emplace_back(a, b);
  for (auto [x, y] : t.tree.edges())
    for (int a = ranges[x].first; a < ranges[x].second; ++a)
      for (int b = ranges[y].first; b < ranges[y].second; ++b)
        edges.emplace_back(a, b);
  out.graph = Graph(next, std::move(edges));
  return out;
}

RootedTree recursively_optimal_decomposition(const WeightedTree& t) {
  return oracle::brute_weighted_treedepth(t).decomposition;
}

namespace {

// Tree path from v to target staying inside `allowed` (plus v itself).
std::vector<int> tree_path(const Graph& tree, int v, int target,
                           const std::vector<char>& allowed) {
  const int n = tree.vertex_count();
  std::vector<int> par(n, -2);
  std::queue<int> bfs;
  bfs.push(v);
  par[v] = -1;
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop();
    if (x == target) break;
    for (int y : tree.neighbors(x))
      if (par[y] == -2 && (allowed[y] || y == v)) {
        par[y] = x;
        bfs.push(y);
      }
  }
  std::vector<int> path;
  for (int x = target; x != -1; x = par[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;  // starts at v, ends at target
}

}  // namespace

DfsTree construct_witness(const WeightedTree& t, long long m) {
  check_weighted_tree(t);
  const int tn = t.tree.vertex_count();
  if (m < tn)
    throw std::invalid_argument(
        "construct_witness: m must be at least the tree's vertex count");
  Blowup bu = blowup(t, m);
  RootedTree decomp = recursively_optimal_decomposition(t);
  std::vector<std::vector<int>> dchildren(tn);
  for (int x = 0; x < tn; ++x)
    if (x != decomp.root) dchildren[decomp.parent[x]].push_back(x);
  for (auto& c : dchildren) std::sort(c.begin(), c.end());

  // Remaining blown vertices per tree vertex, consumed in ascending id.
  std::vector<std::deque<int>> pool(tn);
  for (int v = 0; v < bu.graph.vertex_count(); ++v)
    pool[bu.origin[v]].push_back(v);

  DfsTree out;
  out.parent.assign(bu.graph.vertex_count(), -1);
  // Vertex set of the decomposition subtree rooted at x.
  std::vector<char> inSubtree(tn, false);
  auto mark_subtree = [&](auto&& self, int x, char val) -> void {
    inSubtree[x] = val;
    for (int c : dchildren[x]) self(self, c, val);
  };

  auto walk = [&](auto&& self, int v, int attach) -> void {
    // Visit the whole remaining clique of v as a downward path.
    int last = attach;
    while (!pool[v].empty()) {
      int z = pool[v].front();
      pool[v].pop_front();
      out.parent[z] = last;
      if (last == -1) out.root = z;
      last = z;
    }
    // Branch into each component, walking one representative per tree
    // vertex along the path toward the component's decomposition root.
    for (int x : dchildren[v]) {
      mark_subtree(mark_subtree, x, 1);
      auto path = tree_path(t.tree, v, x, inSubtree);
      int prev = last;
      for (std::size_t j = 1; j + 1 < path.size(); ++j) {
        int y = path[j];
        int z = pool[y].front();
        pool[y].pop_front();
        out.parent[z] = prev;
        prev = z;
      }
      self(self, x, prev);
      mark_subtree(mark_subtree, x, 0);
    }
  };
  walk(walk, decomp.root, -1);
  return out;
}

Graph random_chordal(int n, double density, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_chordal: n must be >= 1");
  density = std::clamp(density, 0.0, 1.0);
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> cliques{{0}};
  std::vector<int> all{0};
  for (int i = 1; i < n; ++i) {
    std::vector<int> q;
    if (density >= 1.0) {
      q = all;  // everything so far is a clique by induction
    } else {
      const auto& c =
          cliques[std::uniform_int_distribution<std::size_t>(0, cliques.size() - 1)(rng)];
      std::vector<int> shuffled = c;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      int extra = 0;
      std::bernoulli_distribution coin(density);
      for (std::size_t j = 1; j < c.size(); ++j)
        if (coin(rng)) ++extra;
      q.assign(shuffled.begin(), shuffled.begin() + 1 + extra);
    }
    for (int u : q) edges.emplace_back(u, i);
    q.push_back(i);
    cliques.push_back(std::move(q));
    all.push_back(i);
  }
  return Graph(n, std::move(edges));
}

WeightedTree random_weighted_tree(int n, long long wmax, std::uint64_t seed) {
  if (n < 1 || wmax < 1)
    throw std::invalid_argument("random_weighted_tree: bad parameters");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  if (n == 2) {
    edges.emplace_back(0, 1);
  } else if (n > 2) {
    // Pruefer decoding for a uniform labeled tree.
    std::vector<int> pruefer(n - 2);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (auto& x : pruefer) x = pick(rng);
    std::vector<int> degree(n, 1);
    for (int x : pruefer) ++degree[x];
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) leaves.push(v);
    for (int x : pruefer) {
      int leaf = leaves.top();
      leaves.pop();
      edges.emplace_back(leaf, x);
      if (--degree[x] == 1) leaves.push(x);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.emplace_back(a, b);
  }
  WeightedTree t;
  t.tree = Graph(n, std::move(edges));
  t.weights.resize(n);
  std::uniform_int_distribution<long long> w(1, wmax);
  for (auto& x : t.weights) x = w(rng);
  return t;
}

Graph traceable_graph(TraceableKind kind, int m) {
  if (m < 1) throw std::invalid_argument("traceable_graph: m must be >= 1");
  std::vector<std::pair<int, int>> edges;
  switch (kind) {
    case TraceableKind::kKm:
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) edges.emplace_back(a, b);
      return Graph(m, std::move(edges));
    case TraceableKind::kCm:
      if (m < 3) throw std::invalid_argument("traceable_graph: C_m needs m >= 3");
      for (int a = 0; a < m; ++a) edges.emplace_back(a, (a + 1) % m);
      return Graph(m, std::move(edges));
    case TraceableKind::kKmm:
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) edges.emplace_back(a, m + b);
      return Graph(2 * m, std::move(edges));
  }
  throw std::invalid_argument("traceable_graph: unknown kind");
}

Graph random_tree_plus_chords(int n, int chords, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tree_plus_chords: n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> degree(n, 0);
  std::vector<int> open{0};  // degree < 3
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    std::size_t j = pick(rng);
    int p = open[j];
    edges.emplace_back(p, i);
    if (++degree[p] == 3) {
      open[j] = open.back();
      open.pop_back();
    }
    ++degree[i];
    open.push_back(i);
  }
  std::unordered_set<std::uint64_t> have;
  auto key = [](int a, int b) {
    if (a > b) std::swap(a, b);
    return (std::uint64_t(a) << 32) | std::uint64_t(b);
  };
  for (auto [a, b] : edges) have.insert(key(a, b));
  std::uniform_int_distribution<int> pick(0, n - 1);
  int added = 0;
  for (int attempt = 0; attempt < 50 * (chords + 1) && added < chords;
       ++attempt) {
    int a = pick(rng), b = pick(rng);
    if (a == b || degree[a] >= 3 || degree[b] >= 3) continue;
    if (!have.insert(key(a, b)).second) continue;
    edges.emplace_back(a, b);
    ++degree[a];
    ++degree[b];
    ++added;
  }
  return Graph(n, std::move(edges));
}

}  // namespace gen
}  // namespace minhlt
