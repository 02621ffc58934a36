#include "minhlt/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace minhlt {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  adj_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("duplicate edge rejected");
    edge_count_ += nb.size();
  }
  edge_count_ /= 2;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void check_rooted_tree(const RootedTree& t) {
  const int n = t.size();
  if (n == 0) throw std::invalid_argument("empty tree");
  if (t.root < 0 || t.root >= n || t.parent[t.root] != -1)
    throw std::invalid_argument("invalid root");
  for (int v = 0; v < n; ++v) {
    if (v == t.root) continue;
    if (t.parent[v] < 0 || t.parent[v] >= n)
      throw std::invalid_argument("vertex without valid parent");
  }
  // Every vertex must reach the root without cycles.
  std::vector<int> state(n, 0);  // 0 unseen, 1 on path, 2 done
  for (int v = 0; v < n; ++v) {
    int u = v;
    std::vector<int> path;
    while (u != -1 && state[u] == 0) {
      state[u] = 1;
      path.push_back(u);
      u = t.parent[u];
    }
    if (u != -1 && state[u] == 1)
      throw std::invalid_argument("cycle in parent pointers");
    for (int x : path) state[x] = 2;
  }
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int w : g.neighbors(v)) {
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  // Components are discovered from their minimum element in increasing
  // order, so the list is already sorted by minimum.
  return out;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return connected_components(g).size() == 1;
}

DfsTree run_dfs(const Graph& g, int root, const std::vector<int>& priority) {
  const int n = g.vertex_count();
  if (root < 0 || root >= n) throw std::invalid_argument("invalid root");
  if (!is_connected(g)) throw std::invalid_argument("graph not connected");
  DfsTree t;
  t.parent.assign(n, -1);
  t.root = root;
  std::vector<char> visited(n, false);
  std::vector<int> stack{root};
  visited[root] = true;
  while (!stack.empty()) {
    int v = stack.back();
    int best = -1;
    for (int w : g.neighbors(v)) {
      if (!visited[w] && (best == -1 || priority[w] < priority[best]))
        best = w;
    }
    if (best == -1) {
      stack.pop_back();
    } else {
      visited[best] = true;
      t.parent[best] = v;
      stack.push_back(best);
    }
  }
  return t;
}

DfsTree run_dfs(const Graph& g, int root) {
  std::vector<int> identity(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) identity[i] = i;
  return run_dfs(g, root, identity);
}

namespace {

// Euler intervals for O(1) ancestor tests; iterative to keep stack flat.
struct EulerTour {
  std::vector<int> tin, tout;

  explicit EulerTour(const RootedTree& t) {
    const int n = t.size();
    tin.assign(n, 0);
    tout.assign(n, 0);
    std::vector<std::vector<int>> children(n);
    for (int v = 0; v < n; ++v)
      if (v != t.root) children[t.parent[v]].push_back(v);
    int timer = 0;
    std::vector<std::pair<int, std::size_t>> stack{{t.root, 0}};
    tin[t.root] = timer++;
    while (!stack.empty()) {
      auto& [v, idx] = stack.back();
      if (idx < children[v].size()) {
        int c = children[v][idx++];
        tin[c] = timer++;
        stack.push_back({c, 0});
      } else {
        tout[v] = timer++;
        stack.pop_back();
      }
    }
  }

  bool ancestor(int u, int v) const {
    return tin[u] <= tin[v] && tout[v] <= tout[u];
  }
};

}  // namespace

DfsVerifyResult verify_dfs_tree(const Graph& g, const RootedTree& t) {
  DfsVerifyResult res;
  const int n = g.vertex_count();
  if (t.size() != n) {
    res.violation = DfsViolation::kNotSpanning;
    res.witness = {t.size() < n ? t.size() : n, -1};
    res.message = "tree does not span the graph's vertex set";
    return res;
  }
  try {
    check_rooted_tree(t);
  } catch (const std::invalid_argument& e) {
    res.violation = DfsViolation::kMalformed;
    res.message = e.what();
    return res;
  }
  for (int v = 0; v < n; ++v) {
    if (v == t.root) continue;
    if (!g.has_edge(v, t.parent[v])) {
      res.violation = DfsViolation::kNonGraphEdge;
      res.witness = {t.parent[v], v};
      res.message = "tree edge is not a graph edge";
      return res;
    }
  }
  EulerTour tour(t);
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) {
      if (v < u) continue;
      if (!tour.ancestor(u, v) && !tour.ancestor(v, u)) {
        res.violation = DfsViolation::kCrossEdge;
        res.witness = {u, v};
        res.message = "graph edge is a cross-edge for the tree";
        return res;
      }
    }
  }
  return res;
}

std::vector<int> tree_depths(const RootedTree& t) {
  const int n = t.size();
  std::vector<int> depth(n, 0);
  for (int v = 0; v < n; ++v) {
    if (depth[v]) continue;
    std::vector<int> chain;
    int u = v;
    while (u != -1 && depth[u] == 0) {
      chain.push_back(u);
      u = t.parent[u];
    }
    int d = (u == -1) ? 0 : depth[u];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++d;
  }
  return depth;
}

int tree_height(const RootedTree& t) {
  auto depth = tree_depths(t);
  return *std::max_element(depth.begin(), depth.end());
}

bool is_ancestor(const RootedTree& t, int u, int v) {
  while (v != -1) {
    if (v == u) return true;
    v = t.parent[v];
  }
  return false;
}

bool longest_vertical_path_check(const Graph& g, const DfsTree& t, int bound) {
  (void)g;
  return tree_height(t) <= bound;
}

}  // namespace minhlt
