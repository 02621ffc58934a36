#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "minhlt/graph.hpp"

namespace testutil {

using minhlt::Graph;

inline Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

inline Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

/// Star with `leaves` leaves; vertex 0 is the center.
inline Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, std::move(e));
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, std::move(e));
}

// ---- compact edge-mask representation for graphs on n <= 9 vertices ----

inline int pair_index(int u, int v) {  // u < v
  return v * (v - 1) / 2 + u;
}

inline bool mask_edge(std::uint64_t mask, int u, int v) {
  if (u > v) std::swap(u, v);
  return mask >> pair_index(u, v) & 1;
}

inline Graph mask_to_graph(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (mask >> pair_index(u, v) & 1) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

/// Cheap isomorphism invariant: per-vertex (degree, sorted neighbor
/// degrees, local triangle count), sorted.
inline std::vector<std::vector<int>> iso_invariant(int n, std::uint64_t mask) {
  std::vector<int> deg(n, 0);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (mask >> pair_index(u, v) & 1) {
        ++deg[u];
        ++deg[v];
      }
  std::vector<std::vector<int>> sig(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> nd;
    int tri = 0;
    std::vector<int> nb;
    for (int u = 0; u < n; ++u)
      if (u != v && mask_edge(mask, u, v)) nb.push_back(u);
    for (int u : nb) nd.push_back(deg[u]);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (mask_edge(mask, nb[i], nb[j])) ++tri;
    std::sort(nd.begin(), nd.end());
    sig[v] = {deg[v], tri};
    sig[v].insert(sig[v].end(), nd.begin(), nd.end());
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

/// Backtracking isomorphism test between equal-invariant graphs.
inline bool masks_isomorphic(int n, std::uint64_t a, std::uint64_t b) {
  std::vector<int> map_ab(n, -1), used(n, 0);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        ok = mask_edge(a, u, v) == mask_edge(b, map_ab[u], w);
      if (!ok) continue;
      map_ab[v] = w;
      used[w] = 1;
      if (self(self, v + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

/// Isomorph-free connected graphs on exactly n vertices, produced level
/// by level: every connected graph arises from a connected graph on one
/// vertex fewer by adding a vertex with a nonempty neighborhood.
/// `admit(prev_mask, nb_mask, new_n)` can restrict neighborhoods (e.g. to
/// cliques for chordal graphs); pass nullptr for no restriction.
inline std::vector<std::vector<std::uint64_t>> enumerate_connected(
    int nmax,
    const std::function<bool(std::uint64_t, std::uint32_t, int)>& admit =
        nullptr) {
  std::vector<std::vector<std::uint64_t>> levels(nmax + 1);
  if (nmax >= 1) levels[1] = {0};
  for (int n = 2; n <= nmax; ++n) {
    std::map<std::vector<std::vector<int>>, std::vector<std::uint64_t>> buckets;
    for (std::uint64_t prev : levels[n - 1]) {
      for (std::uint32_t nb = 1; nb < (1u << (n - 1)); ++nb) {
        if (admit && !admit(prev, nb, n)) continue;
        std::uint64_t mask = prev;
        for (int u = 0; u < n - 1; ++u)
          if (nb >> u & 1) mask |= std::uint64_t(1) << pair_index(u, n - 1);
        auto sig = iso_invariant(n, mask);
        auto& bucket = buckets[sig];
        bool fresh = true;
        for (std::uint64_t other : bucket)
          if (masks_isomorphic(n, mask, other)) {
            fresh = false;
            break;
          }
        if (fresh) bucket.push_back(mask);
      }
    }
    for (auto& [sig, bucket] : buckets)
      for (std::uint64_t m : bucket) levels[n].push_back(m);
    std::sort(levels[n].begin(), levels[n].end());
  }
  return levels;
}

/// Restriction closure for chordal enumeration: the new vertex's
/// neighborhood must be a clique of the existing graph.
inline bool neighborhood_is_clique(std::uint64_t prev, std::uint32_t nb,
                                   int /*new_n*/) {
  std::vector<int> verts;
  for (int u = 0; u < 31; ++u)
    if (nb >> u & 1) verts.push_back(u);
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!mask_edge(prev, verts[i], verts[j])) return false;
  return true;
}

/// Every rooted spanning tree of g (all edge subsets forming a spanning
/// tree, each tried with every root). Intended for n <= 6.
inline void for_all_rooted_spanning_trees(
    const Graph& g, const std::function<void(const minhlt::RootedTree&)>& cb) {
  const int n = g.vertex_count();
  auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<int> chosen;
  auto orient = [&](int root) {
    minhlt::RootedTree t;
    t.parent.assign(n, -2);
    t.root = root;
    t.parent[root] = -1;
    std::vector<std::vector<int>> adj(n);
    for (int i : chosen) {
      adj[edges[i].first].push_back(edges[i].second);
      adj[edges[i].second].push_back(edges[i].first);
    }
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (t.parent[w] == -2) {
          t.parent[w] = v;
          stack.push_back(w);
        }
    }
    for (int v = 0; v < n; ++v)
      if (t.parent[v] == -2) return;  // not spanning
    cb(t);
  };
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(chosen.size()) == n - 1) {
      // acyclic check via union-find
      std::vector<int> uf(n);
      std::iota(uf.begin(), uf.end(), 0);
      auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
      };
      for (int i : chosen) {
        int a = find(edges[i].first), b = find(edges[i].second);
        if (a == b) return;
        uf[a] = b;
      }
      for (int root = 0; root < n; ++root) orient(root);
      return;
    }
    if (next == m) return;
    if (m - next < n - 1 - static_cast<int>(chosen.size())) return;
    chosen.push_back(next);
    self(self, next + 1);
    chosen.pop_back();
    self(self, next + 1);
  };
  if (n == 1) {
    minhlt::RootedTree t;
    t.parent = {-1};
    t.root = 0;
    cb(t);
    return;
  }
  rec(rec, 0);
}

}  // namespace testutil
