#include "minhlt/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace minhlt {

void check_weighted_tree(const WeightedTree& t) {
  const int n = t.tree.vertex_count();
  if (n == 0) throw std::invalid_argument("weighted tree must be nonempty");
  if (static_cast<int>(t.weights.size()) != n)
    throw std::invalid_argument("weight count must match vertex count");
  for (long long w : t.weights)
    if (w < 1) throw std::invalid_argument("weights must be >= 1");
  if (t.tree.edge_count() != static_cast<std::size_t>(n - 1) ||
      !is_connected(t.tree))
    throw std::invalid_argument("graph is not a tree");
}

namespace oracle {
namespace {

void size_guard(int n, int limit, bool force, const char* what) {
  if (!force && n > limit)
    throw std::invalid_argument(std::string(what) +
                                ": size guard exceeded (use force to override)");
}

using Mask = std::uint32_t;

// Connected components of g restricted to `mask`.
std::vector<Mask> mask_components(const Graph& g, Mask mask) {
  std::vector<Mask> out;
  Mask todo = mask;
  while (todo) {
    int s = __builtin_ctz(todo);
    Mask comp = 0, frontier = Mask{1} << s;
    while (frontier) {
      comp |= frontier;
      Mask next = 0;
      Mask f = frontier;
      while (f) {
        int v = __builtin_ctz(f);
        f &= f - 1;
        for (int w : g.neighbors(v))
          if ((mask >> w) & 1) next |= Mask{1} << w;
      }
      frontier = next & ~comp;
    }
    out.push_back(comp);
    todo &= ~comp;
  }
  return out;
}

Mask neighbor_mask(const Graph& g, int v) {
  Mask m = 0;
  for (int w : g.neighbors(v)) m |= Mask{1} << w;
  return m;
}

struct MinhltSolver {
  const Graph& g;
  std::vector<Mask> nbr;
  std::unordered_map<std::uint64_t, int> memo;

  explicit MinhltSolver(const Graph& graph) : g(graph) {
    nbr.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) nbr[v] = neighbor_mask(g, v);
  }

  // Minimum height over DFS trees of g[mask] rooted at r. Each component
  // of g[mask] - r becomes exactly one child subtree whose root must be a
  // neighbor of r.
  int solve(Mask mask, int r) {
    if (mask == (Mask{1} << r)) return 1;
    std::uint64_t key = (std::uint64_t(mask) << 5) | std::uint64_t(r);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int worst = 0;
    for (Mask comp : mask_components(g, mask & ~(Mask{1} << r))) {
      int best = -1;
      Mask entries = comp & nbr[r];
      while (entries) {
        int x = __builtin_ctz(entries);
        entries &= entries - 1;
        int h = solve(comp, x);
        if (best == -1 || h < best) best = h;
      }
      worst = std::max(worst, best);
    }
    int res = 1 + worst;
    memo.emplace(key, res);
    return res;
  }
};

}  // namespace

void enumerate_dfs_trees(const Graph& g,
                         const std::function<bool(const DfsTree&)>& emit) {
  const int n = g.vertex_count();
  if (n == 0) return;
  if (!is_connected(g)) throw std::invalid_argument("graph not connected");

  std::unordered_set<std::string> seen;
  DfsTree t;
  t.parent.assign(n, -1);
  std::vector<char> visited(n, false);
  std::vector<int> stack;
  bool stop = false;

  // Branch over the next vertex entered from the current stack top; the
  // resulting parent arrays are deduplicated since distinct traversal
  // orders can realize the same tree.
  auto rec = [&](auto&& self, int numVisited) -> void {
    if (stop) return;
    if (numVisited == n) {
      std::string fp(t.parent.begin(), t.parent.end());
      for (char& c : fp) c += 1;
      if (seen.insert(fp).second) {
        if (!emit(t)) stop = true;
      }
      return;
    }
    int v = stack.back();
    bool branched = false;
    for (int w : g.neighbors(v)) {
      if (visited[w]) continue;
      branched = true;
      visited[w] = true;
      t.parent[w] = v;
      stack.push_back(w);
      self(self, numVisited + 1);
      stack.pop_back();
      t.parent[w] = -1;
      visited[w] = false;
      if (stop) return;
    }
    if (!branched) {
      stack.pop_back();
      self(self, numVisited);
      stack.push_back(v);
    }
  };

  for (int root = 0; root < n && !stop; ++root) {
    t.root = root;
    visited[root] = true;
    stack.push_back(root);
    rec(rec, 1);
    stack.pop_back();
    visited[root] = false;
  }
}

std::vector<DfsTree> all_dfs_trees(const Graph& g, std::size_t limit) {
  std::vector<DfsTree> out;
  enumerate_dfs_trees(g, [&](const DfsTree& t) {
    out.push_back(t);
    return limit == 0 || out.size() < limit;
  });
  return out;
}

int brute_minhlt(const Graph& g, bool force) {
  const int n = g.vertex_count();
  size_guard(n, 12, force, "brute_minhlt");
  if (n > 31) throw std::invalid_argument("brute_minhlt: n > 31 unsupported");
  if (!is_connected(g)) throw std::invalid_argument("graph not connected");
  MinhltSolver solver(g);
  Mask full = (n == 31) ? ~Mask{0} >> 1 : (Mask{1} << n) - 1;
  int best = -1;
  for (int r = 0; r < n; ++r) {
    int h = solver.solve(full, r);
    if (best == -1 || h < best) best = h;
  }
  return best;
}

int brute_treedepth(const Graph& g, bool force) {
  const int n = g.vertex_count();
  size_guard(n, 12, force, "brute_treedepth");
  if (n == 0) throw std::invalid_argument("empty graph");
  if (n > 31) throw std::invalid_argument("brute_treedepth: n > 31 unsupported");
  std::unordered_map<Mask, int> memo;
  auto td = [&](auto&& self, Mask mask) -> int {
    // mask induces a connected subgraph here
    if ((mask & (mask - 1)) == 0) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int best = -1;
    Mask iter = mask;
    while (iter) {
      int v = __builtin_ctz(iter);
      iter &= iter - 1;
      int worst = 0;
      for (Mask comp : mask_components(g, mask & ~(Mask{1} << v)))
        worst = std::max(worst, self(self, comp));
      if (best == -1 || 1 + worst < best) best = 1 + worst;
    }
    memo.emplace(mask, best);
    return best;
  };
  Mask full = (Mask{1} << n) - 1;
  int res = 0;
  for (Mask comp : mask_components(g, full)) res = std::max(res, td(td, comp));
  return res;
}

WeightedTreedepthResult brute_weighted_treedepth(const WeightedTree& t,
                                                 bool force) {
  check_weighted_tree(t);
  const int n = t.tree.vertex_count();
  size_guard(n, 12, force, "brute_weighted_treedepth");

  struct Entry {
    long long value;
    int root;
  };
  std::unordered_map<Mask, Entry> memo;
  auto wtd = [&](auto&& self, Mask mask) -> Entry {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Entry best{-1, -1};
    Mask iter = mask;
    while (iter) {
      int v = __builtin_ctz(iter);
      iter &= iter - 1;
      long long worst = 0;
      for (Mask comp : mask_components(t.tree, mask & ~(Mask{1} << v)))
        worst = std::max(worst, self(self, comp).value);
      long long val = t.weights[v] + worst;
      if (best.root == -1 || val < best.value) best = {val, v};
    }
    memo.emplace(mask, best);
    return best;
  };

  WeightedTreedepthResult res;
  Mask full = (Mask{1} << n) - 1;
  Entry top = wtd(wtd, full);
  res.value = top.value;
  res.decomposition.parent.assign(n, -1);
  res.decomposition.root = top.root;
  // Materialize the recursively optimal decomposition from the memoized
  // per-subset root choices.
  std::vector<std::pair<Mask, int>> todo{{full, -1}};
  while (!todo.empty()) {
    auto [mask, par] = todo.back();
    todo.pop_back();
    int r = memo.at(mask).root;
    res.decomposition.parent[r] = par;
    for (Mask comp : mask_components(t.tree, mask & ~(Mask{1} << r)))
      todo.push_back({comp, r});
  }
  return res;
}

LeafExtremes brute_leaf_extremes(const Graph& g, bool force) {
  const int n = g.vertex_count();
  size_guard(n, 10, force, "brute_leaf_extremes");
  if (n == 0) throw std::invalid_argument("empty graph");
  LeafExtremes ext{n + 1, -1};
  enumerate_dfs_trees(g, [&](const DfsTree& t) {
    std::vector<char> hasChild(n, false);
    for (int v = 0; v < n; ++v)
      if (v != t.root) hasChild[t.parent[v]] = true;
    int leaves = 0;
    for (int v = 0; v < n; ++v)
      if (!hasChild[v]) ++leaves;
    ext.min_leaves = std::min(ext.min_leaves, leaves);
    ext.max_leaves = std::max(ext.max_leaves, leaves);
    return true;
  });
  return ext;
}

}  // namespace oracle
}  // namespace minhlt
