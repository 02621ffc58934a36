#include "minhlt/decomp.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace minhlt {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

int NiceTreeDecomposition::width() const {
  int w = -1;
  for (const auto& nd : nodes) w = std::max(w, static_cast<int>(nd.bag.size()) - 1);
  return w;
}

TreeDecomposition NiceTreeDecomposition::flatten() const {
  TreeDecomposition td;
  td.bags.reserve(nodes.size());
  for (const auto& nd : nodes) td.bags.push_back(nd.bag);
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (nodes[i].child1 != -1) td.edges.emplace_back(i, nodes[i].child1);
    if (nodes[i].child2 != -1) td.edges.emplace_back(i, nodes[i].child2);
  }
  return td;
}

std::vector<int> NiceTreeDecomposition::post_order() const {
  std::vector<int> order;
  order.reserve(nodes.size());
  std::vector<std::pair<int, int>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [v, phase] = stack.back();
    if (phase == 0) {
      phase = 1;
      if (nodes[v].child1 != -1) stack.push_back({nodes[v].child1, 0});
    } else if (phase == 1) {
      phase = 2;
      if (nodes[v].child2 != -1) stack.push_back({nodes[v].child2, 0});
    } else {
      order.push_back(v);
      stack.pop_back();
    }
  }
  return order;
}

DecompositionCheck validate_decomposition(const Graph& g,
                                          const TreeDecomposition& td) {
  DecompositionCheck res;
  auto fail = [&](std::string msg) {
    res.ok = false;
    res.violation = std::move(msg);
    return res;
  };
  const int n = g.vertex_count();
  const int t = td.node_count();
  if (t == 0) {
    if (n == 0) return res;
    return fail("no bags but graph has vertices");
  }
  if (static_cast<int>(td.edges.size()) != t - 1)
    return fail("bag graph is not a tree (wrong edge count)");
  std::vector<std::vector<int>> tadj(t);
  for (auto [a, b] : td.edges) {
    if (a < 0 || a >= t || b < 0 || b >= t)
      return fail("bag edge endpoint out of range");
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  {
    std::vector<char> seen(t, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int cnt = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++cnt;
      for (int w : tadj[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    if (cnt != t) return fail("bag graph is not a tree (disconnected)");
  }
  // Condition 1: coverage, plus per-vertex occurrence lists for the
  // remaining two conditions.
  std::vector<std::vector<int>> occ(n);
  for (int i = 0; i < t; ++i)
    for (int v : td.bags[i]) {
      if (v < 0 || v >= n) return fail("bag vertex out of range");
      occ[v].push_back(i);
    }
  for (int v = 0; v < n; ++v)
    if (occ[v].empty())
      return fail("vertex " + std::to_string(v) + " not covered by any bag");
  // Condition 2: edge coverage. Scan the shorter occurrence list.
  for (auto [u, v] : g.edges()) {
    const auto& shorter = occ[u].size() <= occ[v].size() ? occ[u] : occ[v];
    int other = occ[u].size() <= occ[v].size() ? v : u;
    bool ok = false;
    for (int i : shorter)
      if (std::binary_search(td.bags[i].begin(), td.bags[i].end(), other)) {
        ok = true;
        break;
      }
    if (!ok)
      return fail("edge " + std::to_string(u) + "-" + std::to_string(v) +
                  " not inside any bag");
  }
  // Condition 3: each vertex's occurrence nodes induce a subtree, i.e.
  // the bag tree has exactly |occ(v)| - 1 edges joining two of them.
  std::vector<int> shared(n, 0);
  for (auto [a, b] : td.edges) {
    const auto &ba = td.bags[a], &bb = td.bags[b];
    std::size_t i = 0, j = 0;
    while (i < ba.size() && j < bb.size()) {
      if (ba[i] < bb[j])
        ++i;
      else if (ba[i] > bb[j])
        ++j;
      else
        ++shared[ba[i]], ++i, ++j;
    }
  }
  for (int v = 0; v < n; ++v)
    if (shared[v] + 1 != static_cast<int>(occ[v].size()))
      return fail("occurrence nodes of vertex " + std::to_string(v) +
                  " are not connected");
  return res;
}

namespace {

// Drops empty bags by contracting them into a tree neighbor, so that in
// the result (of a decomposition of a connected graph) adjacent bags
// always intersect.
TreeDecomposition strip_empty_bags(TreeDecomposition td) {
  for (;;) {
    int victim = -1;
    for (int i = 0; i < td.node_count() && victim == -1; ++i)
      if (td.bags[i].empty() && td.node_count() > 1) victim = i;
    if (victim == -1) return td;
    int into = -1;
    for (auto [a, b] : td.edges) {
      if (a == victim) into = b;
      if (b == victim) into = a;
      if (into != -1) break;
    }
    TreeDecomposition next;
    std::vector<int> newId(td.node_count(), -1);
    for (int i = 0; i < td.node_count(); ++i) {
      if (i == victim) continue;
      newId[i] = next.node_count();
      next.bags.push_back(std::move(td.bags[i]));
    }
    for (auto [a, b] : td.edges) {
      int x = (a == victim) ? into : a;
      int y = (b == victim) ? into : b;
      if (x != y) next.edges.emplace_back(newId[x], newId[y]);
    }
    td = std::move(next);
  }
}

}  // namespace

NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td0) {
  auto check = validate_decomposition(g, td0);
  if (!check) throw std::invalid_argument("invalid decomposition: " + check.violation);
  if (g.vertex_count() == 0)
    throw std::invalid_argument("make_nice: empty graph");
  TreeDecomposition td = strip_empty_bags(td0);

  const int t = td.node_count();
  std::vector<std::vector<int>> tadj(t);
  for (auto [a, b] : td.edges) {
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  // Root at a node with a nonempty bag.
  int tdroot = 0;
  for (int i = 0; i < t; ++i)
    if (!td.bags[i].empty()) {
      tdroot = i;
      break;
    }

  NiceTreeDecomposition nice;
  auto add = [&](NiceNodeKind kind, int vertex, int c1, int c2,
                 std::vector<int> bag) {
    nice.nodes.push_back({kind, vertex, c1, c2, std::move(bag)});
    return static_cast<int>(nice.nodes.size()) - 1;
  };

  // Builds the leaf-ward introduce chain for a bag; ascending vertex id.
  auto leaf_chain = [&](const std::vector<int>& bag) {
    int cur = -1;
    std::vector<int> acc;
    for (int v : bag) {
      acc.push_back(v);
      cur = add(NiceNodeKind::kIntroduce, v, cur, -1, acc);
    }
    return cur;
  };

  // Lifts a chain whose top bag is `from` to bag `to`: forgets then
  // introduces, both in ascending id order.
  auto lift = [&](int top, const std::vector<int>& from,
                  const std::vector<int>& to) {
    std::vector<int> bag = from;
    for (int v : from) {
      if (std::binary_search(to.begin(), to.end(), v)) continue;
      bag.erase(std::find(bag.begin(), bag.end(), v));
      top = add(NiceNodeKind::kForget, v, top, -1, bag);
    }
    for (int v : to) {
      if (std::binary_search(from.begin(), from.end(), v)) continue;
      bag.insert(std::lower_bound(bag.begin(), bag.end(), v), v);
      top = add(NiceNodeKind::kIntroduce, v, top, -1, bag);
    }
    return top;
  };

  // Post-order over the rooted bag tree; result[i] = top nice node with
  // bag equal to td.bags[i].
  std::vector<int> result(t, -1);
  std::vector<std::pair<int, int>> stack{{tdroot, -1}};
  std::vector<std::pair<int, int>> order;  // (node, parent)
  while (!stack.empty()) {
    auto [v, par] = stack.back();
    stack.pop_back();
    order.emplace_back(v, par);
    for (int w : tadj[v])
      if (w != par) stack.push_back({w, v});
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto [v, par] = *it;
    std::vector<int> childTops;
    for (int w : tadj[v])
      if (w != par) childTops.push_back(lift(result[w], td.bags[w], td.bags[v]));
    if (childTops.empty()) {
      result[v] = leaf_chain(td.bags[v]);
    } else {
      int cur = childTops[0];
      for (std::size_t i = 1; i < childTops.size(); ++i)
        cur = add(NiceNodeKind::kJoin, -1, cur, childTops[i], td.bags[v]);
      result[v] = cur;
    }
  }

  // Forget down to a singleton root bag.
  int top = result[tdroot];
  std::vector<int> bag = td.bags[tdroot];
  while (bag.size() > 1) {
    int v = bag.front();
    bag.erase(bag.begin());
    top = add(NiceNodeKind::kForget, v, top, -1, bag);
  }
  nice.root = top;
  return nice;
}

TreeDecomposition decomposition_from_elimination_order(
    const Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<std::set<int>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  TreeDecomposition td;
  td.bags.resize(n);
  std::vector<int> link(n, -1);  // bag index of first-eliminated neighbor
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> nb(adj[v].begin(), adj[v].end());
    td.bags[i] = nb;
    td.bags[i].push_back(v);
    std::sort(td.bags[i].begin(), td.bags[i].end());
    int first = -1;
    for (int u : nb)
      if (first == -1 || pos[u] < pos[first]) first = u;
    if (first != -1) link[i] = pos[first];
    // Eliminate: clique on the remaining neighborhood.
    for (int a : nb) adj[a].erase(v);
    for (std::size_t x = 0; x < nb.size(); ++x)
      for (std::size_t y = x + 1; y < nb.size(); ++y) {
        adj[nb[x]].insert(nb[y]);
        adj[nb[y]].insert(nb[x]);
      }
  }
  for (int i = 0; i < n; ++i) {
    if (link[i] != -1)
      td.edges.emplace_back(i, link[i]);
    else if (i + 1 < n)
      td.edges.emplace_back(i, i + 1);  // stitch components / last bag
  }
  return td;
}

TreeDecomposition heuristic_decomposition(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return {};
  std::vector<std::unordered_set<int>> adj(n);
  for (auto [u, v] : g.edges()) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  auto fill_count = [&](int v) {
    long long bad = 0;
    std::vector<int> nb(adj[v].begin(), adj[v].end());
    for (std::size_t x = 0; x < nb.size(); ++x)
      for (std::size_t y = x + 1; y < nb.size(); ++y)
        if (!adj[nb[x]].count(nb[y])) ++bad;
    return bad;
  };
  using Item = std::tuple<long long, int, int>;  // fill, id, version
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  std::vector<int> version(n, 0);
  std::vector<char> gone(n, false);
  for (int v = 0; v < n; ++v) heap.push({fill_count(v), v, 0});
  std::vector<int> order;
  order.reserve(n);
  while (static_cast<int>(order.size()) < n) {
    auto [f, v, ver] = heap.top();
    heap.pop();
    if (gone[v] || ver != version[v]) continue;
    // Lazy heap: verify before committing.
    long long cur = fill_count(v);
    if (cur != f) {
      heap.push({cur, v, ver});
      continue;
    }
    order.push_back(v);
    gone[v] = true;
    std::vector<int> nb(adj[v].begin(), adj[v].end());
    std::unordered_set<int> dirty(nb.begin(), nb.end());
    for (int a : nb) adj[a].erase(v);
    for (std::size_t x = 0; x < nb.size(); ++x)
      for (std::size_t y = x + 1; y < nb.size(); ++y) {
        int a = nb[x], b = nb[y];
        if (adj[a].count(b)) continue;
        adj[a].insert(b);
        adj[b].insert(a);
        for (int c : adj[a])
          if (adj[b].count(c)) dirty.insert(c);
      }
    for (int d : dirty) {
      if (gone[d]) continue;
      ++version[d];
      heap.push({fill_count(d), d, version[d]});
    }
  }
  return decomposition_from_elimination_order(g, order);
}

namespace {

using Mask = std::uint32_t;

int popcount(Mask m) { return __builtin_popcount(m); }

}  // namespace

std::optional<TreeDecomposition> exact_decomposition(const Graph& g,
                                                     int limit) {
  const int n = g.vertex_count();
  if (n > limit) return std::nullopt;
  if (n == 0) return TreeDecomposition{};
  if (n > 25) return std::nullopt;  // mask width
  std::vector<Mask> nbr(n, 0);
  for (auto [u, v] : g.edges()) {
    nbr[u] |= Mask{1} << v;
    nbr[v] |= Mask{1} << u;
  }
  const Mask full = (Mask{1} << n) - 1;
  // q(S, v): neighbors of v outside S after contracting S onto v.
  auto q = [&](Mask s, int v) {
    Mask seen = Mask{1} << v;
    Mask frontier = seen;
    Mask acc = 0;
    while (frontier) {
      Mask nb = 0;
      Mask f = frontier;
      while (f) {
        int x = __builtin_ctz(f);
        f &= f - 1;
        nb |= nbr[x];
      }
      acc |= nb & ~s & ~(Mask{1} << v);
      frontier = nb & s & ~seen;
      seen |= frontier;
    }
    return popcount(acc);
  };
  std::vector<std::int8_t> f(std::size_t{1} << n, 0);
  std::vector<std::int8_t> choice(std::size_t{1} << n, -1);
  for (Mask s = 1; s <= full; ++s) {
    int best = -1, bestv = -1;
    Mask iter = s;
    while (iter) {
      int v = __builtin_ctz(iter);
      iter &= iter - 1;
      Mask rest = s & ~(Mask{1} << v);
      int cand = std::max<int>(rest ? f[rest] : 0, q(rest, v));
      if (best == -1 || cand < best) {
        best = cand;
        bestv = v;
      }
    }
    f[s] = static_cast<std::int8_t>(best);
    choice[s] = static_cast<std::int8_t>(bestv);
  }
  std::vector<int> order(n);
  Mask s = full;
  for (int i = n - 1; i >= 0; --i) {
    int v = choice[s];
    order[i] = v;
    s &= ~(Mask{1} << v);
  }
  return decomposition_from_elimination_order(g, order);
}

namespace {

/// Components of g after deleting the vertex set `removed`; returns the
/// per-vertex component id (-1 for removed) plus sizes.
struct Flaps {
  std::vector<int> comp;
  std::vector<int> sizes;
  int total = 0;

  /// Id of the component with 2|C| > total, or -1 (at most one exists).
  int heavy() const {
    for (int id = 0; id < static_cast<int>(sizes.size()); ++id)
      if (2 * sizes[id] > total) return id;
    return -1;
  }
};

Flaps flaps_of(const Graph& g, const std::vector<char>& removed) {
  const int n = g.vertex_count();
  Flaps f;
  f.comp.assign(n, -1);
  for (int s0 = 0; s0 < n; ++s0) {
    if (removed[s0] || f.comp[s0] != -1) continue;
    int id = static_cast<int>(f.sizes.size());
    f.sizes.push_back(0);
    std::vector<int> stack{s0};
    f.comp[s0] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++f.sizes[id];
      ++f.total;
      for (int w : g.neighbors(v))
        if (!removed[w] && f.comp[w] == -1) {
          f.comp[w] = id;
          stack.push_back(w);
        }
    }
  }
  return f;
}

/// Shrinks the bag toward balance: while a heavy component C exists,
/// drop a bag vertex with no neighbor in C (which leaves C intact and
/// grows the rest). Empty result on getting stuck with every remaining
/// vertex adjacent to C.
std::optional<std::vector<int>> shrink_bag(const Graph& g,
                                           std::vector<int> k) {
  const int n = g.vertex_count();
  std::vector<char> removed(n, 0);
  for (int v : k) removed[v] = 1;
  for (;;) {
    Flaps f = flaps_of(g, removed);
    int heavy = f.heavy();
    if (heavy == -1) {
      std::sort(k.begin(), k.end());
      return k;
    }
    int drop = -1;
    for (int v : k) {
      bool touches = false;
      for (int w : g.neighbors(v))
        if (f.comp[w] == heavy) {
          touches = true;
          break;
        }
      if (!touches) {
        drop = v;
        break;
      }
    }
    if (drop == -1) return std::nullopt;
    removed[drop] = 0;
    k.erase(std::find(k.begin(), k.end(), drop));
    if (k.empty()) return std::nullopt;
  }
}

}  // namespace

std::vector<int> balanced_separator(const Graph& g,
                                    const TreeDecomposition& td) {
  const int n = g.vertex_count();
  if (n <= 1)
    throw std::invalid_argument("balanced_separator: graph too small");
  const int t = td.node_count();
  std::vector<std::vector<int>> tadj(t);
  for (auto [a, b] : td.edges) {
    tadj[a].push_back(b);
    tadj[b].push_back(a);
  }
  std::vector<int> occ(n, -1);
  for (int i = 0; i < t; ++i)
    for (int v : td.bags[i])
      if (occ[v] == -1) occ[v] = i;

  // Walk toward the unique too-heavy component. The out-direction of a
  // node is fixed, so the walk either reaches a balanced bag or enters a
  // two-cycle across one decomposition edge; in the latter case at least
  // one endpoint's bag can be shrunk to a balanced subset (dropping the
  // heavy component's non-neighbors keeps it intact while the rest
  // grows, and both endpoints being unshrinkable would force each heavy
  // component to outweigh the other).
  int cur = 0, prev = -1;
  for (int step = 0; step <= t; ++step) {
    const auto& bag = td.bags[cur];
    std::vector<char> removed(n, false);
    for (int v : bag) removed[v] = true;
    Flaps f = flaps_of(g, removed);
    int heavy = f.heavy();
    if (heavy == -1) return bag;
    // The heavy component's smallest vertex pins down the branch.
    int target = -1;
    for (int v = 0; v < n && target == -1; ++v)
      if (f.comp[v] == heavy) target = v;
    int goal = occ[target];
    // First edge on the tree path cur -> goal.
    std::vector<int> par(t, -2);
    std::vector<int> bfs{cur};
    par[cur] = -1;
    for (std::size_t i = 0; i < bfs.size(); ++i) {
      int x = bfs[i];
      for (int y : tadj[x])
        if (par[y] == -2) {
          par[y] = x;
          bfs.push_back(y);
        }
    }
    int nxt = goal;
    while (par[nxt] != cur && par[nxt] != -1) nxt = par[nxt];
    if (par[nxt] == -1)
      throw std::runtime_error("balanced_separator: walk left the tree");
    if (nxt == prev) {
      for (int side : {std::min(cur, nxt), std::max(cur, nxt)})
        if (auto k = shrink_bag(g, td.bags[side])) return *k;
      throw std::logic_error("balanced_separator: both bags unshrinkable");
    }
    prev = cur;
    cur = nxt;
  }
  throw std::runtime_error("balanced_separator: walk failed to terminate");
}

}  // namespace minhlt
