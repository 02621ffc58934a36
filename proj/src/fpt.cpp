#include "minhlt/fpt.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace minhlt {
namespace fpt {

int PartialSolution::d_root() const {
  for (int i = 0; i < size(); ++i)
    if (parent[i] == -1) return i;
  throw std::logic_error("partial solution has no root");
}

int PartialSolution::image_of(int bag_index) const {
  for (int i = 0; i < size(); ++i)
    if (label[i] == bag_index) return i;
  return -1;
}

ClosureResult ancestral_closure(const RootedTree& t, const std::vector<int>& x) {
  if (x.empty()) throw std::invalid_argument("ancestral_closure: empty set");
  const int n = static_cast<int>(t.parent.size());
  std::vector<char> keep(n, 0);
  for (int v : x) {
    if (v < 0 || v >= n)
      throw std::invalid_argument("ancestral_closure: vertex out of range");
    for (int u = v; u != -1 && !keep[u]; u = t.parent[u]) keep[u] = 1;
  }
  ClosureResult out;
  std::vector<int> new_id(n, -1);
  for (int v = 0; v < n; ++v)
    if (keep[v]) {
      new_id[v] = static_cast<int>(out.kept.size());
      out.kept.push_back(v);
    }
  out.tree.parent.resize(out.kept.size());
  for (std::size_t i = 0; i < out.kept.size(); ++i) {
    int p = t.parent[out.kept[i]];
    out.tree.parent[i] = p == -1 ? -1 : new_id[p];
  }
  out.tree.root = new_id[t.root];
  return out;
}

namespace {

/// a is an ancestor of b or equal to it.
bool anc_or_eq(const std::vector<int>& parent, int a, int b) {
  for (int x = b; x != -1; x = parent[x])
    if (x == a) return true;
  return false;
}

std::vector<int> d_depths(const std::vector<int>& parent) {
  std::vector<int> depth(parent.size(), 0);
  for (std::size_t v = 0; v < parent.size(); ++v) {
    int d = 0;
    for (int x = static_cast<int>(v); x != -1; x = parent[x]) ++d;
    depth[v] = d;
  }
  return depth;
}

}  // namespace

bool is_promising(const PartialSolution& ps) {
  const int n = ps.size();
  // Union unlabeled vertices along D-edges, then demand uniform S flags.
  std::vector<int> comp(n);
  for (int i = 0; i < n; ++i) comp[i] = i;
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (int v = 0; v < n; ++v) {
    int p = ps.parent[v];
    if (p != -1 && ps.label[v] < 0 && ps.label[p] < 0)
      comp[find(v)] = find(p);
  }
  std::vector<char> has_s(n, 0), has_plain(n, 0);
  for (int v = 0; v < n; ++v)
    if (ps.label[v] < 0) (ps.in_s[v] ? has_s : has_plain)[find(v)] = 1;
  for (int v = 0; v < n; ++v)
    if (has_s[v] && has_plain[v]) return false;
  return true;
}

PartialSolution canonicalize(const PartialSolution& ps,
                             std::vector<int>* old_to_new) {
  const int n = ps.size();
  std::vector<std::vector<int>> children(n);
  int root = -1;
  for (int v = 0; v < n; ++v) {
    if (ps.parent[v] == -1)
      root = v;
    else
      children[ps.parent[v]].push_back(v);
  }
  // AHU encodings; sibling order by encoding is unambiguous because every
  // leaf carries a distinct label, so no two sibling subtrees tie.
  std::vector<std::string> enc(n);
  auto encode = [&](auto&& self, int v) -> void {
    for (int c : children[v]) self(self, c);
    std::sort(children[v].begin(), children[v].end(),
              [&](int a, int b) { return enc[a] < enc[b]; });
    std::string e;
    e.push_back('(');
    e.push_back(static_cast<char>(ps.label[v] + 2));
    for (int c : children[v]) e += enc[c];
    e.push_back(')');
    enc[v] = std::move(e);
  };
  encode(encode, root);
  std::vector<int> perm(n, -1);
  int next = 0;
  auto assign = [&](auto&& self, int v) -> void {
    perm[v] = next++;
    for (int c : children[v]) self(self, c);
  };
  assign(assign, root);
  PartialSolution out;
  out.parent.resize(n);
  out.label.resize(n);
  out.in_s.resize(n);
  for (int v = 0; v < n; ++v) {
    out.parent[perm[v]] = ps.parent[v] == -1 ? -1 : perm[ps.parent[v]];
    out.label[perm[v]] = ps.label[v];
    out.in_s[perm[v]] = ps.in_s[v];
  }
  if (old_to_new) *old_to_new = std::move(perm);
  return out;
}

std::string tree_key(const PartialSolution& ps) {
  std::string key;
  key.reserve(2 * ps.size());
  for (int i = 0; i < ps.size(); ++i) {
    key.push_back(static_cast<char>(ps.parent[i] + 2));
    key.push_back(static_cast<char>(ps.label[i] + 2));
  }
  return key;
}

std::string canonical_key(const PartialSolution& ps) {
  std::string key = tree_key(ps);
  for (int i = 0; i < ps.size(); ++i) key.push_back(ps.in_s[i] ? 1 : 0);
  return key;
}

std::vector<Transition> transitions_introduce(
    const std::optional<PartialSolution>& child,
    const std::vector<int>& child_bag, const std::vector<int>& new_bag, int v,
    const Graph& g, int k) {
  std::vector<Transition> out;
  const int iv = static_cast<int>(
      std::lower_bound(new_bag.begin(), new_bag.end(), v) - new_bag.begin());
  if (iv >= static_cast<int>(new_bag.size()) || new_bag[iv] != v)
    throw std::invalid_argument("transitions_introduce: v not in new bag");

  if (!child) {
    // Leaf: the DFS forest seen so far is a single root-to-v path.
    for (int len = 1; len <= k; ++len) {
      PartialSolution sol;
      sol.parent.resize(len);
      sol.label.assign(len, -1);
      sol.in_s.assign(len, 0);
      for (int i = 0; i < len; ++i) sol.parent[i] = i - 1;
      sol.label[len - 1] = iv;
      out.push_back({canonicalize(sol), {}});
    }
    return out;
  }

  const PartialSolution& c = *child;
  const int n = c.size();
  std::vector<int> label_map(child_bag.size());
  for (std::size_t j = 0; j < child_bag.size(); ++j)
    label_map[j] = static_cast<int>(
        std::lower_bound(new_bag.begin(), new_bag.end(), child_bag[j]) -
        new_bag.begin());
  std::vector<char> adj(new_bag.size(), 0);
  for (std::size_t j = 0; j < new_bag.size(); ++j)
    adj[j] = new_bag[j] != v && g.has_edge(v, new_bag[j]);

  PartialSolution base = c;
  for (int i = 0; i < n; ++i)
    if (base.label[i] >= 0) base.label[i] = label_map[base.label[i]];
  std::vector<std::pair<int, int>> images;  // (D-vertex, new bag index)
  for (int i = 0; i < n; ++i)
    if (base.label[i] >= 0) images.emplace_back(i, base.label[i]);
  std::vector<int> depth = d_depths(base.parent);

  // Place v's image on an existing unlabeled vertex outside S.
  for (int u = 0; u < n; ++u) {
    if (base.label[u] >= 0 || base.in_s[u]) continue;
    bool ok = true;
    for (auto [d, l] : images) {
      if (adj[l]) {
        if (!anc_or_eq(base.parent, u, d) && !anc_or_eq(base.parent, d, u)) {
          ok = false;
          break;
        }
      } else if (base.parent[u] == d || base.parent[d] == u) {
        ok = false;  // a D-edge between images must be a graph edge
        break;
      }
    }
    if (!ok) continue;
    PartialSolution sol = base;
    sol.label[u] = iv;
    if (!is_promising(sol)) continue;
    std::vector<int> perm;
    PartialSolution canon = canonicalize(sol, &perm);
    out.push_back({std::move(canon), std::move(perm)});
  }

  // Or grow a fresh downward path from any vertex, its tip becoming the
  // image of v.
  for (int u = 0; u < n; ++u) {
    // Never below a vertex claimed by a forgotten graph vertex: the
    // forgotten vertex shares no bag with v, so the tree edge the
    // attachment would create cannot be a graph edge.
    if (base.in_s[u]) continue;
    bool grow_ok = true;
    for (auto [d, l] : images)
      if (adj[l] && !anc_or_eq(base.parent, d, u)) {
        grow_ok = false;
        break;
      }
    if (!grow_ok) continue;
    for (int len = 1; len + depth[u] <= k; ++len) {
      if (len == 1 && base.label[u] >= 0 && !adj[base.label[u]])
        continue;  // would create a D-edge for a non-edge of the graph
      PartialSolution sol = base;
      sol.parent.resize(n + len);
      sol.label.resize(n + len, -1);
      sol.in_s.resize(n + len, 0);
      sol.parent[n] = u;
      for (int i = 1; i < len; ++i) sol.parent[n + i] = n + i - 1;
      sol.label[n + len - 1] = iv;
      if (!is_promising(sol)) continue;
      std::vector<int> perm;
      PartialSolution canon = canonicalize(sol, &perm);
      perm.resize(n);
      out.push_back({std::move(canon), std::move(perm)});
    }
  }
  return out;
}

std::optional<Transition> transitions_forget(const PartialSolution& child,
                                             const std::vector<int>& child_bag,
                                             int v) {
  const int n = child.size();
  const int jv = static_cast<int>(
      std::lower_bound(child_bag.begin(), child_bag.end(), v) -
      child_bag.begin());
  if (jv >= static_cast<int>(child_bag.size()) || child_bag[jv] != v)
    throw std::invalid_argument("transitions_forget: v not in child bag");
  PartialSolution sol = child;
  int dv = sol.image_of(jv);
  if (dv < 0) throw std::logic_error("transitions_forget: v has no image");
  sol.in_s[dv] = 1;
  for (int i = 0; i < n; ++i) {
    if (sol.label[i] == jv)
      sol.label[i] = -1;
    else if (sol.label[i] > jv)
      --sol.label[i];
  }
  // Shrink to the ancestral closure of the remaining images; anything
  // that falls away must already be claimed by forgotten vertices.
  std::vector<char> keep(n, 0);
  for (int i = 0; i < n; ++i)
    if (sol.label[i] >= 0)
      for (int x = i; x != -1 && !keep[x]; x = sol.parent[x]) keep[x] = 1;
  for (int i = 0; i < n; ++i)
    if (!keep[i] && !sol.in_s[i]) return std::nullopt;
  std::vector<int> new_id(n, -1);
  PartialSolution shrunk;
  for (int i = 0; i < n; ++i)
    if (keep[i]) {
      new_id[i] = shrunk.size();
      shrunk.parent.push_back(-2);
      shrunk.label.push_back(sol.label[i]);
      shrunk.in_s.push_back(sol.in_s[i]);
    }
  for (int i = 0; i < n; ++i)
    if (keep[i])
      shrunk.parent[new_id[i]] =
          sol.parent[i] == -1 ? -1 : new_id[sol.parent[i]];
  if (!is_promising(shrunk)) return std::nullopt;
  std::vector<int> perm;
  PartialSolution canon = canonicalize(shrunk, &perm);
  Transition t;
  t.sol = std::move(canon);
  t.from_child.assign(n, -1);
  for (int i = 0; i < n; ++i)
    if (keep[i]) t.from_child[i] = perm[new_id[i]];
  return t;
}

std::optional<PartialSolution> transitions_join(const PartialSolution& a,
                                                const PartialSolution& b) {
  if (a.parent != b.parent || a.label != b.label) return std::nullopt;
  PartialSolution out = a;
  for (int i = 0; i < a.size(); ++i) {
    if (a.in_s[i] && b.in_s[i]) return std::nullopt;
    out.in_s[i] = a.in_s[i] || b.in_s[i];
  }
  return out;
}

namespace {

struct Entry {
  PartialSolution sol;
  int child1 = -1;  // entry index in the child table
  int child2 = -1;
  std::vector<int> map1;  // child D-vertex -> this D-vertex (-1 dropped)
};

DfsTree reconstruct(const Graph& g, const NiceTreeDecomposition& nice,
                    const std::vector<std::vector<Entry>>& tables,
                    int root_entry) {
  const int n = g.vertex_count();
  std::vector<int> fparent;  // the full DFS tree being unrolled
  std::vector<int> rho(n, -1);
  struct Frame {
    int node;
    int entry;
    std::vector<int> pi;  // D-vertex -> F-vertex
  };
  std::vector<Frame> stack;
  {
    const PartialSolution& s = tables[nice.root][root_entry].sol;
    fparent = s.parent;
    std::vector<int> pi(s.size());
    for (int i = 0; i < s.size(); ++i) pi[i] = i;
    stack.push_back({nice.root, root_entry, std::move(pi)});
  }
  while (!stack.empty()) {
    Frame fr = std::move(stack.back());
    stack.pop_back();
    const auto& node = nice.nodes[fr.node];
    const Entry& e = tables[fr.node][fr.entry];
    const PartialSolution& s = e.sol;
    for (int i = 0; i < s.size(); ++i)
      if (s.label[i] >= 0) rho[node.bag[s.label[i]]] = fr.pi[i];
    if (node.child1 < 0) continue;
    switch (node.kind) {
      case NiceNodeKind::kIntroduce: {
        const PartialSolution& c = tables[node.child1][e.child1].sol;
        std::vector<int> pi(c.size());
        for (int x = 0; x < c.size(); ++x) pi[x] = fr.pi[e.map1[x]];
        stack.push_back({node.child1, e.child1, std::move(pi)});
        break;
      }
      case NiceNodeKind::kForget: {
        const PartialSolution& c = tables[node.child1][e.child1].sol;
        // Dropped D-vertices become fresh F-vertices hanging under their
        // parent's image, so process shallow vertices first.
        std::vector<int> order(c.size());
        for (int x = 0; x < c.size(); ++x) order[x] = x;
        std::vector<int> depth = d_depths(c.parent);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return depth[a] < depth[b]; });
        std::vector<int> pi(c.size(), -1);
        for (int x : order) {
          if (e.map1[x] >= 0) {
            pi[x] = fr.pi[e.map1[x]];
          } else {
            int p = c.parent[x];
            pi[x] = static_cast<int>(fparent.size());
            fparent.push_back(p == -1 ? -1 : pi[p]);
          }
        }
        stack.push_back({node.child1, e.child1, std::move(pi)});
        break;
      }
      case NiceNodeKind::kJoin: {
        stack.push_back({node.child1, e.child1, fr.pi});
        stack.push_back({node.child2, e.child2, std::move(fr.pi)});
        break;
      }
    }
  }
  if (static_cast<int>(fparent.size()) != n)
    throw std::logic_error("certificate reconstruction: size mismatch");
  std::vector<int> inv(n, -1);
  for (int v = 0; v < n; ++v) {
    if (rho[v] < 0 || inv[rho[v]] != -1)
      throw std::logic_error("certificate reconstruction: bad embedding");
    inv[rho[v]] = v;
  }
  DfsTree tree;
  tree.parent.resize(n);
  tree.root = -1;
  for (int v = 0; v < n; ++v) {
    int fp = fparent[rho[v]];
    if (fp == -1) {
      tree.parent[v] = -1;
      tree.root = v;
    } else {
      tree.parent[v] = inv[fp];
    }
  }
  return tree;
}

}  // namespace

SolveResult solve_minhlt(const Graph& g, int k,
                         const std::optional<TreeDecomposition>& td) {
  if (!is_connected(g))
    throw std::invalid_argument("solve_minhlt: graph must be connected");
  SolveResult res;
  const int n = g.vertex_count();
  if (k < 1) throw std::invalid_argument("solve_minhlt: k must be positive");
  if (k >= n) {
    // Any DFS tree works.
    res.yes = true;
    res.certificate = run_dfs(g, 0);
    return res;
  }
  TreeDecomposition base;
  if (td) {
    auto check = validate_decomposition(g, *td);
    if (!check)
      throw std::invalid_argument("solve_minhlt: bad decomposition: " +
                                  check.violation);
    base = *td;
  } else if (auto exact = exact_decomposition(g)) {
    base = std::move(*exact);
  } else {
    base = heuristic_decomposition(g);
  }
  NiceTreeDecomposition nice = make_nice(g, base);
  res.stats.decomposition_width = nice.width();

  std::vector<std::vector<Entry>> tables(nice.nodes.size());
  for (int ni : nice.post_order()) {
    const auto& node = nice.nodes[ni];
    auto& table = tables[ni];
    std::unordered_map<std::string, int> seen;
    auto insert = [&](Entry e) {
      std::string key = canonical_key(e.sol);
      if (seen.emplace(std::move(key), static_cast<int>(table.size())).second)
        table.push_back(std::move(e));
    };
    switch (node.kind) {
      case NiceNodeKind::kIntroduce: {
        const bool leaf = node.child1 < 0;
        const std::vector<int> empty_bag;
        const std::vector<int>& cbag =
            leaf ? empty_bag : nice.nodes[node.child1].bag;
        if (leaf) {
          for (auto& t : transitions_introduce({}, cbag, node.bag, node.vertex,
                                               g, k))
            insert({std::move(t.sol), -1, -1, {}});
        } else {
          const auto& ctab = tables[node.child1];
          for (int ci = 0; ci < static_cast<int>(ctab.size()); ++ci)
            for (auto& t : transitions_introduce(ctab[ci].sol, cbag, node.bag,
                                                 node.vertex, g, k))
              insert({std::move(t.sol), ci, -1, std::move(t.from_child)});
        }
        break;
      }
      case NiceNodeKind::kForget: {
        const auto& ctab = tables[node.child1];
        const auto& cbag = nice.nodes[node.child1].bag;
        for (int ci = 0; ci < static_cast<int>(ctab.size()); ++ci)
          if (auto t = transitions_forget(ctab[ci].sol, cbag, node.vertex))
            insert({std::move(t->sol), ci, -1, std::move(t->from_child)});
        break;
      }
      case NiceNodeKind::kJoin: {
        const auto& tab1 = tables[node.child1];
        const auto& tab2 = tables[node.child2];
        std::unordered_map<std::string, std::vector<int>> by_tree;
        for (int i = 0; i < static_cast<int>(tab1.size()); ++i)
          by_tree[tree_key(tab1[i].sol)].push_back(i);
        for (int j = 0; j < static_cast<int>(tab2.size()); ++j) {
          auto it = by_tree.find(tree_key(tab2[j].sol));
          if (it == by_tree.end()) continue;
          for (int i : it->second)
            if (auto s = transitions_join(tab1[i].sol, tab2[j].sol)) {
              std::vector<int> identity(s->size());
              for (int x = 0; x < s->size(); ++x) identity[x] = x;
              insert({std::move(*s), i, j, std::move(identity)});
            }
        }
        break;
      }
    }
    res.stats.peak_table_size =
        std::max(res.stats.peak_table_size, table.size());
    res.stats.total_entries += table.size();
    for (const auto& e : table)
      res.stats.max_d_size =
          std::max(res.stats.max_d_size, static_cast<std::size_t>(e.sol.size()));
    if (table.empty()) return res;  // nothing extendable: NO
  }

  int best = -1;
  std::string best_key;
  const auto& root_table = tables[nice.root];
  for (int i = 0; i < static_cast<int>(root_table.size()); ++i) {
    const auto& s = root_table[i].sol;
    bool full = true;
    for (int x = 0; x < s.size(); ++x)
      if (s.label[x] < 0 && !s.in_s[x]) {
        full = false;
        break;
      }
    if (!full) continue;
    std::string key = canonical_key(s);
    if (best < 0 || key < best_key) {
      best = i;
      best_key = std::move(key);
    }
  }
  if (best < 0) return res;
  res.yes = true;
  DfsTree tree = reconstruct(g, nice, tables, best);
  auto verify = verify_dfs_tree(g, tree);
  if (!verify.ok()) {
#ifdef MINHLT_DEBUG_RECONSTRUCT
    fprintf(stderr, "tree:");
    for (int v = 0; v < n; ++v) fprintf(stderr, " %d", tree.parent[v]);
    fprintf(stderr, " root=%d witness=(%d,%d)\n", tree.root,
            verify.witness.first, verify.witness.second);
    for (std::size_t ni = 0; ni < nice.nodes.size(); ++ni) {
      const auto& node = nice.nodes[ni];
      fprintf(stderr, "node %zu kind=%d v=%d c1=%d c2=%d bag:",
              ni, (int)node.kind, node.vertex, node.child1, node.child2);
      for (int b : node.bag) fprintf(stderr, " %d", b);
      fprintf(stderr, " entries=%zu\n", tables[ni].size());
    }
#endif
    throw std::logic_error("certificate reconstruction: " + verify.message);
  }
  if (tree_height(tree) > k)
    throw std::logic_error("certificate reconstruction: height exceeds bound");
  res.certificate = std::move(tree);
  return res;
}

}  // namespace fpt
}  // namespace minhlt
