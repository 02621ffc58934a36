#include "minhlt/chordal.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <unordered_set>
#include <utility>

#include "minhlt/fpt.hpp"

namespace minhlt {
namespace chordal {

namespace {

/// LexBFS visit order via partition refinement: the pivot's unvisited
/// neighbors are pulled into a fresh cell just before their current one.
std::vector<int> lexbfs_order(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> cnext{-1}, cprev{-1}, chead{n > 0 ? 0 : -1};
  std::vector<int> cstamp{-1}, cbuddy{-1};
  int head_cell = 0;
  std::vector<int> vnext(n), vprev(n), vcell(n, 0);
  for (int v = 0; v < n; ++v) {
    vnext[v] = v + 1 < n ? v + 1 : -1;
    vprev[v] = v - 1;
  }
  auto unlink = [&](int w) {
    int c = vcell[w];
    if (vprev[w] != -1)
      vnext[vprev[w]] = vnext[w];
    else
      chead[c] = vnext[w];
    if (vnext[w] != -1) vprev[vnext[w]] = vprev[w];
  };
  auto push_front = [&](int w, int c) {
    vprev[w] = -1;
    vnext[w] = chead[c];
    if (chead[c] != -1) vprev[chead[c]] = w;
    chead[c] = w;
    vcell[w] = c;
  };
  auto cell_before = [&](int c) {
    int id = static_cast<int>(chead.size());
    cnext.push_back(c);
    cprev.push_back(cprev[c]);
    chead.push_back(-1);
    cstamp.push_back(-1);
    cbuddy.push_back(-1);
    if (cprev[c] != -1) cnext[cprev[c]] = id;
    // The buddy must be scanned before c; earlier cells are all empty.
    if (c == head_cell) head_cell = id;
    cprev[c] = id;
    return id;
  };
  std::vector<char> visited(n, 0);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    while (chead[head_cell] == -1) head_cell = cnext[head_cell];
    int v = chead[head_cell];
    unlink(v);
    visited[v] = 1;
    order.push_back(v);
    for (int w : g.neighbors(v)) {
      if (visited[w]) continue;
      int c = vcell[w];
      if (cstamp[c] != step) {
        cstamp[c] = step;
        cbuddy[c] = cell_before(c);
      }
      unlink(w);
      push_front(w, cbuddy[c]);
    }
  }
  return order;
}

/// Finds an induced cycle of length >= 4; callers guarantee one exists.
/// Witness search: nonadjacent u, w in N(v) joined by a path avoiding the
/// rest of N[v]; a shortest such path is induced.
std::vector<int> find_hole(const Graph& g) {
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        int u = nb[i], w = nb[j];
        if (g.has_edge(u, w)) continue;
        std::vector<char> blocked(n, 0);
        blocked[v] = 1;
        for (int x : nb) blocked[x] = 1;
        blocked[u] = blocked[w] = 0;
        std::vector<int> par(n, -2);
        std::queue<int> bfs;
        bfs.push(u);
        par[u] = -1;
        while (!bfs.empty() && par[w] == -2) {
          int x = bfs.front();
          bfs.pop();
          for (int y : g.neighbors(x))
            if (!blocked[y] && par[y] == -2) {
              par[y] = x;
              bfs.push(y);
            }
        }
        if (par[w] == -2) continue;
        std::vector<int> hole{v};
        for (int x = w; x != -1; x = par[x]) hole.push_back(x);
        std::reverse(hole.begin() + 1, hole.end());  // v, u, ..., w
        // Canonical form: start at the smallest vertex, head toward its
        // smaller cycle neighbor.
        int len = static_cast<int>(hole.size());
        int at = static_cast<int>(
            std::min_element(hole.begin(), hole.end()) - hole.begin());
        std::rotate(hole.begin(), hole.begin() + at, hole.end());
        if (hole[len - 1] < hole[1])
          std::reverse(hole.begin() + 1, hole.end());
        return hole;
      }
  }
  return {};
}

bool is_clique(const Graph& g, const std::vector<int>& verts) {
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (!g.has_edge(verts[i], verts[j])) return false;
  return true;
}

}  // namespace

bool is_peo(const Graph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] != -1) return false;
    pos[order[i]] = i;
  }
  for (int v = 0; v < n; ++v) {
    int u = -1;  // earliest-eliminated later neighbor
    for (int w : g.neighbors(v))
      if (pos[w] > pos[v] && (u == -1 || pos[w] < pos[u])) u = w;
    if (u == -1) continue;
    for (int w : g.neighbors(v))
      if (pos[w] > pos[u] && !g.has_edge(u, w)) return false;
  }
  return true;
}

ChordalityResult recognize_chordal(const Graph& g) {
  ChordalityResult res;
  std::vector<int> order = lexbfs_order(g);
  std::reverse(order.begin(), order.end());
  if (is_peo(g, order)) {
    res.chordal = true;
    res.peo = std::move(order);
  } else {
    res.hole = find_hole(g);
    if (res.hole.empty())
      throw std::logic_error("recognize_chordal: failed order but no hole");
  }
  return res;
}

TreeDecomposition clique_tree(const Graph& g, const std::vector<int>& peo) {
  if (!is_peo(g, peo))
    throw std::invalid_argument("clique_tree: not a perfect elimination order");
  const int n = g.vertex_count();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;
  TreeDecomposition td;
  for (int i = 0; i < n; ++i) {
    int v = peo[i];
    std::vector<int> bag{v};
    for (int w : g.neighbors(v))
      if (pos[w] > i) bag.push_back(w);
    std::sort(bag.begin(), bag.end());
    // Dominated iff some earlier-eliminated vertex sees the whole bag.
    bool maximal = true;
    for (int x : g.neighbors(v)) {
      if (pos[x] >= i) continue;
      bool all = true;
      for (int u : bag)
        if (u != v && !g.has_edge(x, u)) {
          all = false;
          break;
        }
      if (all) {
        maximal = false;
        break;
      }
    }
    if (maximal) td.bags.push_back(std::move(bag));
  }
  const int b = td.node_count();
  // Maximum-weight spanning tree of the clique graph, weight = overlap.
  std::vector<std::vector<int>> holds(n);
  for (int i = 0; i < b; ++i)
    for (int v : td.bags[i]) holds[v].push_back(i);
  std::unordered_set<std::uint64_t> seen;
  struct Cand {
    int w, a, b;
  };
  std::vector<Cand> cands;
  for (int v = 0; v < n; ++v)
    for (std::size_t i = 0; i < holds[v].size(); ++i)
      for (std::size_t j = i + 1; j < holds[v].size(); ++j) {
        int a = holds[v][i], c = holds[v][j];
        if (!seen.insert((std::uint64_t(a) << 32) | std::uint64_t(c)).second)
          continue;
        std::vector<int> inter;
        std::set_intersection(td.bags[a].begin(), td.bags[a].end(),
                              td.bags[c].begin(), td.bags[c].end(),
                              std::back_inserter(inter));
        cands.push_back({static_cast<int>(inter.size()), a, c});
      }
  std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
    return std::tie(y.w, x.a, x.b) < std::tie(x.w, y.a, y.b);
  });
  std::vector<int> uf(b);
  for (int i = 0; i < b; ++i) uf[i] = i;
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  auto merge = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    uf[x] = y;
    return true;
  };
  for (const auto& c : cands)
    if (merge(c.a, c.b)) td.edges.emplace_back(c.a, c.b);
  for (int i = 1; i < b; ++i)  // stitch components of a disconnected graph
    if (merge(i - 1, i)) td.edges.emplace_back(i - 1, i);
  return td;
}

DfsTree dfs_from_hamiltonian_separator(const Graph& g,
                                       const std::vector<int>& s,
                                       const std::vector<int>& hampath) {
  if (s.empty() || hampath.size() != s.size())
    throw std::invalid_argument(
        "dfs_from_hamiltonian_separator: path does not cover the separator");
  std::vector<int> a = s, b = hampath;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b)
    throw std::invalid_argument(
        "dfs_from_hamiltonian_separator: path is not a permutation of s");
  for (std::size_t i = 0; i + 1 < hampath.size(); ++i)
    if (!g.has_edge(hampath[i], hampath[i + 1]))
      throw std::invalid_argument(
          "dfs_from_hamiltonian_separator: path is not a path of g");
  const int n = g.vertex_count();
  std::vector<int> priority(n);
  for (int v = 0; v < n; ++v) priority[v] = static_cast<int>(s.size()) + v;
  for (std::size_t i = 0; i < hampath.size(); ++i)
    priority[hampath[i]] = static_cast<int>(i);
  return run_dfs(g, hampath[0], priority);
}

namespace {

struct TypeTable {
  std::vector<int> kclique;  // sorted
  std::vector<int> rverts;   // sorted
  std::vector<int> rindex;   // graph vertex -> index in rverts, or -1
  std::vector<std::uint32_t> masks;        // realized types, sorted
  std::vector<int> gcount;                 // per mask
  std::vector<std::vector<int>> members;   // per mask, ascending vertex id

  int mask_index(std::uint32_t m) const {
    auto it = std::lower_bound(masks.begin(), masks.end(), m);
    if (it == masks.end() || *it != m) return -1;
    return static_cast<int>(it - masks.begin());
  }
};

TypeTable build_type_table(const Graph& g, const std::vector<int>& kclique) {
  TypeTable tt;
  tt.kclique = kclique;
  std::sort(tt.kclique.begin(), tt.kclique.end());
  const int n = g.vertex_count();
  std::vector<char> ink(n, 0);
  for (int v : tt.kclique) {
    if (v < 0 || v >= n || ink[v])
      throw std::invalid_argument("moderate case: bad clique vertex set");
    ink[v] = 1;
  }
  tt.rindex.assign(n, -1);
  for (int v = 0; v < n; ++v)
    if (!ink[v]) {
      tt.rindex[v] = static_cast<int>(tt.rverts.size());
      tt.rverts.push_back(v);
    }
  if (tt.rverts.size() > 30)
    throw std::invalid_argument("moderate case: too many vertices outside K");
  std::vector<std::pair<std::uint32_t, int>> typed;
  for (int v : tt.kclique) {
    std::uint32_t m = 0;
    for (int w : g.neighbors(v))
      if (tt.rindex[w] >= 0) m |= std::uint32_t(1) << tt.rindex[w];
    typed.emplace_back(m, v);
  }
  std::sort(typed.begin(), typed.end());
  for (auto [m, v] : typed) {
    if (tt.masks.empty() || tt.masks.back() != m) {
      tt.masks.push_back(m);
      tt.gcount.push_back(0);
      tt.members.emplace_back();
    }
    ++tt.gcount.back();
    tt.members.back().push_back(v);
  }
  return tt;
}

/// Everything check_candidate, candidate_height, and decompression need,
/// computed in one pass. `ok` is false when any viability check fails.
struct Analysis {
  bool ok = false;
  TypeTable tt;
  int nc = 0;
  std::vector<int> depth;                 // root depth 1
  std::vector<std::vector<char>> anc;     // reflexive ancestor matrix
  std::vector<int> mask_of;               // per c-vertex: -1 InR, else mask
  std::vector<int> inr_cvertex;           // per R index
  std::vector<int> used;                  // per mask
  std::vector<std::pair<int, int>> amend;  // (parent, child)
  int deepest_k = -1;                     // the vertex X
  std::vector<int> surplus;               // per mask
  std::vector<int> chosen;     // per mask: index into amend, -1 if no surplus
  std::vector<int> edge_total;  // per amend edge: inserted vertex count
};

Analysis analyze(const Graph& g, const CompressedCandidate& c) {
  Analysis a;
  a.tt = build_type_table(g, c.kclique);
  const int r = static_cast<int>(a.tt.rverts.size());
  check_rooted_tree(c.ctree);
  a.nc = c.ctree.size();
  if (static_cast<int>(c.typemap.size()) != a.nc)
    throw std::invalid_argument("candidate: typemap size mismatch");
  if (a.nc > 3 * r + 2) return a;

  // Type multiplicities.
  a.mask_of.assign(a.nc, -1);
  a.inr_cvertex.assign(r, -1);
  a.used.assign(a.tt.masks.size(), 0);
  for (int v = 0; v < a.nc; ++v) {
    const VertexType& t = c.typemap[v];
    if (t.in_k) {
      std::uint32_t m = 0;
      for (int w : t.r_neighborhood) {
        if (w < 0 || w >= g.vertex_count() || a.tt.rindex[w] < 0) return a;
        m |= std::uint32_t(1) << a.tt.rindex[w];
      }
      int idx = a.tt.mask_index(m);
      if (idx < 0) return a;  // unrealized type
      a.mask_of[v] = idx;
      if (++a.used[idx] > a.tt.gcount[idx]) return a;
    } else {
      int ri = t.r_vertex >= 0 && t.r_vertex < g.vertex_count()
                   ? a.tt.rindex[t.r_vertex]
                   : -1;
      if (ri < 0 || a.inr_cvertex[ri] != -1) return a;
      a.inr_cvertex[ri] = v;
    }
  }
  for (int ri = 0; ri < r; ++ri)
    if (a.inr_cvertex[ri] < 0) return a;  // every R vertex appears once

  a.depth.assign(a.nc, 0);
  a.anc.assign(a.nc, std::vector<char>(a.nc, 0));
  for (int v = 0; v < a.nc; ++v) {
    int d = 0;
    for (int x = v; x != -1; x = c.ctree.parent[x]) {
      ++d;
      a.anc[x][v] = 1;
    }
    a.depth[v] = d;
  }

  // Types must be adjacent across edges and non-adjacent across
  // incomparable pairs. K-K pairs are always adjacent, which also forces
  // every InK vertex onto one vertical path.
  auto types_adjacent = [&](int x, int y) {
    bool xk = a.mask_of[x] >= 0, yk = a.mask_of[y] >= 0;
    if (xk && yk) return true;
    if (!xk && !yk)
      return g.has_edge(c.typemap[x].r_vertex, c.typemap[y].r_vertex);
    if (!xk) std::swap(x, y);
    int ri = a.tt.rindex[c.typemap[y].r_vertex];
    return (a.tt.masks[a.mask_of[x]] >> ri & 1) != 0;
  };
  for (int v = 0; v < a.nc; ++v)
    if (c.ctree.parent[v] != -1 && !types_adjacent(v, c.ctree.parent[v]))
      return a;
  for (int x = 0; x < a.nc; ++x)
    for (int y = x + 1; y < a.nc; ++y)
      if (!a.anc[x][y] && !a.anc[y][x] && types_adjacent(x, y)) return a;

  for (int v = 0; v < a.nc; ++v)
    if (a.mask_of[v] >= 0 &&
        (a.deepest_k < 0 || a.depth[v] > a.depth[a.deepest_k]))
      a.deepest_k = v;
  if (a.deepest_k < 0) return a;  // K is nonempty, some InK vertex must stay

  for (int v = 0; v < a.nc; ++v) {
    int p = c.ctree.parent[v];
    if (p != -1 && a.mask_of[v] >= 0 && a.mask_of[p] >= 0)
      a.amend.emplace_back(p, v);
  }
  const int ae = static_cast<int>(a.amend.size());
  if (ae > 60) throw std::logic_error("candidate: amendable edge overflow");

  // Surplus vertices of type S may only go into amendable edges lying on
  // the root path of every v in H(S); those edge sets are nested along
  // the spine, so the intersection is the smallest of them.
  a.surplus.resize(a.tt.masks.size());
  a.chosen.assign(a.tt.masks.size(), -1);
  a.edge_total.assign(ae, 0);
  const std::uint64_t all_edges =
      ae == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << ae) - 1;
  for (std::size_t mi = 0; mi < a.tt.masks.size(); ++mi) {
    a.surplus[mi] = a.tt.gcount[mi] - a.used[mi];
    if (a.surplus[mi] == 0) continue;
    std::uint64_t inter = all_edges;
    std::uint64_t smallest = all_edges;
    int smallest_count = ae + 1;
    for (int ri = 0; ri < r; ++ri) {
      if (!(a.tt.masks[mi] >> ri & 1)) continue;
      int tv = a.inr_cvertex[ri];
      if (a.anc[tv][a.deepest_k]) continue;  // comparable with all of K
      std::uint64_t on_path = 0;
      for (int e = 0; e < ae; ++e)
        if (a.anc[a.amend[e].second][tv]) on_path |= std::uint64_t(1) << e;
      if (on_path == 0) return a;  // some lost vertex has nowhere to go
      inter &= on_path;
      int cnt = std::popcount(on_path);
      if (cnt < smallest_count) {
        smallest_count = cnt;
        smallest = on_path;
      }
    }
    if (smallest_count <= ae && inter != smallest)
      throw std::runtime_error(
          "moderate case: amendable-edge sets along the spine are not "
          "nested");
    if (inter == 0 || ae == 0) return a;
    int best = -1;
    for (int e = 0; e < ae; ++e)
      if ((inter >> e & 1) &&
          (best < 0 || a.depth[a.amend[e].second] > a.depth[a.amend[best].second]))
        best = e;
    a.chosen[mi] = best;
    a.edge_total[best] += a.surplus[mi];
  }
  a.ok = true;
  return a;
}

}  // namespace

bool check_candidate(const Graph& g, const CompressedCandidate& c) {
  return analyze(g, c).ok;
}

int candidate_height(const Graph& g, const CompressedCandidate& c) {
  Analysis a = analyze(g, c);
  if (!a.ok)
    throw std::invalid_argument("candidate_height: candidate failed checks");
  int h = 0;
  for (int v = 0; v < a.nc; ++v) {
    int d = a.depth[v];
    for (std::size_t e = 0; e < a.amend.size(); ++e)
      if (a.anc[a.amend[e].second][v]) d += a.edge_total[e];
    h = std::max(h, d);
  }
  return h;
}

DfsTree decompress_candidate(const Graph& g, const CompressedCandidate& c) {
  Analysis a = analyze(g, c);
  if (!a.ok)
    throw std::invalid_argument(
        "decompress_candidate: candidate failed checks");
  const int n = g.vertex_count();
  // Concrete vertices: per type, candidate slots in ascending c-vertex id
  // take the smallest member ids; the surplus goes to the chosen edge.
  std::vector<int> concrete(a.nc, -1);
  std::vector<std::vector<int>> inserted(a.amend.size());
  for (std::size_t mi = 0; mi < a.tt.masks.size(); ++mi) {
    std::size_t next = 0;
    for (int v = 0; v < a.nc; ++v)
      if (a.mask_of[v] == static_cast<int>(mi))
        concrete[v] = a.tt.members[mi][next++];
    for (; next < a.tt.members[mi].size(); ++next)
      inserted[a.chosen[mi]].push_back(a.tt.members[mi][next]);
  }
  for (int v = 0; v < a.nc; ++v)
    if (a.mask_of[v] < 0) concrete[v] = c.typemap[v].r_vertex;
  for (auto& ins : inserted) std::sort(ins.begin(), ins.end());

  std::vector<int> amend_index(a.nc, -1);  // by child c-vertex
  for (std::size_t e = 0; e < a.amend.size(); ++e)
    amend_index[a.amend[e].second] = static_cast<int>(e);
  DfsTree out;
  out.parent.assign(n, -1);
  for (int v = 0; v < a.nc; ++v) {
    int p = c.ctree.parent[v];
    if (p == -1) {
      out.root = concrete[v];
      continue;
    }
    int above = concrete[p];
    if (amend_index[v] >= 0)
      for (int x : inserted[amend_index[v]]) {
        out.parent[x] = above;
        above = x;
      }
    out.parent[concrete[v]] = above;
  }
  return out;
}

std::string candidate_key(const CompressedCandidate& c) {
  // The key only needs consistent per-instance type ids, derived from the
  // candidate itself.
  std::vector<int> rv;
  for (const auto& t : c.typemap)
    if (!t.in_k) rv.push_back(t.r_vertex);
  std::sort(rv.begin(), rv.end());
  auto rindex = [&](int v) {
    return static_cast<int>(std::lower_bound(rv.begin(), rv.end(), v) -
                            rv.begin());
  };
  std::vector<std::vector<int>> ink_sets;
  for (const auto& t : c.typemap)
    if (t.in_k) {
      std::vector<int> s = t.r_neighborhood;
      std::sort(s.begin(), s.end());
      ink_sets.push_back(std::move(s));
    }
  std::sort(ink_sets.begin(), ink_sets.end());
  ink_sets.erase(std::unique(ink_sets.begin(), ink_sets.end()),
                 ink_sets.end());
  fpt::PartialSolution sol;
  sol.parent = c.ctree.parent;
  sol.in_s.assign(c.ctree.size(), 0);
  sol.label.resize(c.ctree.size());
  for (int v = 0; v < c.ctree.size(); ++v) {
    const auto& t = c.typemap[v];
    if (t.in_k) {
      std::vector<int> s = t.r_neighborhood;
      std::sort(s.begin(), s.end());
      int idx = static_cast<int>(
          std::lower_bound(ink_sets.begin(), ink_sets.end(), s) -
          ink_sets.begin());
      sol.label[v] = static_cast<int>(rv.size()) + idx;
    } else {
      sol.label[v] = rindex(t.r_vertex);
    }
    if (sol.label[v] > 250)
      throw std::logic_error("candidate_key: type id overflow");
  }
  return fpt::tree_key(fpt::canonicalize(sol));
}

void enumerate_candidates(
    const Graph& g, const std::vector<int>& kclique,
    const std::function<bool(const CompressedCandidate&)>& emit,
    std::uint64_t budget) {
  TypeTable tt = build_type_table(g, kclique);
  const int r = static_cast<int>(tt.rverts.size());
  if (r == 0)
    throw std::invalid_argument(
        "enumerate_candidates: no vertices outside the clique");
  if (tt.masks.empty())
    throw std::invalid_argument("enumerate_candidates: empty clique");
  const int ntypes = static_cast<int>(tt.masks.size());
  const int max_ink = 2 * r + 2;
  // Type ids: 0..r-1 are InR(rverts[i]); r..r+ntypes-1 are InK(masks[j]).
  auto type_adjacent = [&](int t1, int t2) {
    if (t1 >= r && t2 >= r) return true;
    if (t1 < r && t2 < r) return g.has_edge(tt.rverts[t1], tt.rverts[t2]);
    if (t1 < r) std::swap(t1, t2);
    return (tt.masks[t1 - r] >> t2 & 1) != 0;
  };
  std::uint64_t steps = 0;
  auto tick = [&] {
    if (++steps > budget)
      throw std::runtime_error(
          "parameter too large for moderate-case enumeration");
  };

  std::vector<int> trunk;                 // type ids, root first, ends at X
  std::uint32_t used_r_trunk = 0;
  std::vector<int> used_k(ntypes, 0);
  int ink_count = 0;
  int needy = 0;  // internal InK with both trunk neighbors InK so far
  std::vector<int> qverts;        // R type ids off the trunk, ascending
  std::vector<int> qparent;       // encoded: trunk index, or m + q index
  std::unordered_set<std::string> seen;
  bool stop = false;

  auto make_vertex_type = [&](int t) {
    VertexType vt;
    if (t < r) {
      vt.r_vertex = tt.rverts[t];
    } else {
      vt.in_k = true;
      for (int ri = 0; ri < r; ++ri)
        if (tt.masks[t - r] >> ri & 1) vt.r_neighborhood.push_back(tt.rverts[ri]);
    }
    return vt;
  };

  auto finish = [&] {
    const int m = static_cast<int>(trunk.size());
    const int nc = m + static_cast<int>(qverts.size());
    CompressedCandidate cand;
    cand.kclique = tt.kclique;
    cand.ctree.parent.resize(nc);
    cand.ctree.root = 0;
    cand.typemap.resize(nc);
    for (int i = 0; i < m; ++i) {
      cand.ctree.parent[i] = i - 1;
      cand.typemap[i] = make_vertex_type(trunk[i]);
      if (i > 0 && trunk[i] >= r && trunk[i - 1] >= r)
        cand.amendable.emplace_back(i - 1, i);
    }
    for (std::size_t i = 0; i < qverts.size(); ++i) {
      cand.ctree.parent[m + i] = qparent[i];
      cand.typemap[m + i] = make_vertex_type(qverts[i]);
    }
    // Reject attachment cycles.
    for (int v = m; v < nc; ++v) {
      int x = v, hops = 0;
      while (x != -1 && ++hops <= nc) x = cand.ctree.parent[x];
      if (x != -1) return;
    }
    // Importance: internal clique vertices must touch R in the tree,
    // otherwise the compression would have bypassed them.
    for (int i = 1; i + 1 < m; ++i) {
      if (trunk[i] < r || trunk[i - 1] < r || trunk[i + 1] < r) continue;
      bool has_child = false;
      for (std::size_t q = 0; q < qverts.size() && !has_child; ++q)
        has_child = qparent[q] == i;
      if (!has_child) return;
    }
    // Incomparable pairs must be non-adjacent.
    std::vector<std::vector<char>> anc(nc, std::vector<char>(nc, 0));
    for (int v = 0; v < nc; ++v)
      for (int x = v; x != -1; x = cand.ctree.parent[x]) anc[x][v] = 1;
    auto tid = [&](int v) { return v < m ? trunk[v] : qverts[v - m]; };
    for (int x = 0; x < nc; ++x)
      for (int y = x + 1; y < nc; ++y)
        if (!anc[x][y] && !anc[y][x] && type_adjacent(tid(x), tid(y))) return;
    if (!seen.insert(candidate_key(cand)).second) return;
    if (!emit(cand)) stop = true;
  };

  auto attach = [&](auto&& self, std::size_t qi) -> void {
    if (stop) return;
    tick();
    if (qi == qverts.size()) {
      finish();
      return;
    }
    const int m = static_cast<int>(trunk.size());
    int q = qverts[qi];
    for (int p = 0; p < m + static_cast<int>(qverts.size()); ++p) {
      if (p == m + static_cast<int>(qi)) continue;
      if (!type_adjacent(q, p < m ? trunk[p] : qverts[p - m])) continue;
      qparent[qi] = p;
      self(self, qi + 1);
      if (stop) return;
    }
  };

  auto extend = [&](auto&& self) -> void {
    if (stop) return;
    tick();
    if (!trunk.empty() && trunk.back() >= r) {
      // Close the trunk here: remaining R vertices become subtrees.
      qverts.clear();
      for (int ri = 0; ri < r; ++ri)
        if (!(used_r_trunk >> ri & 1)) qverts.push_back(ri);
      qparent.assign(qverts.size(), -1);
      attach(attach, 0);
      if (stop) return;
    }
    for (int t = 0; t < r + ntypes; ++t) {
      if (t < r) {
        if (used_r_trunk >> t & 1) continue;
      } else {
        if (used_k[t - r] == tt.gcount[t - r] || ink_count == max_ink)
          continue;
      }
      if (!trunk.empty() && !type_adjacent(t, trunk.back())) continue;
      int add_needy = 0;
      if (trunk.size() >= 2 && t >= r && trunk.back() >= r &&
          trunk[trunk.size() - 2] >= r)
        add_needy = 1;  // the previous vertex now needs an R child
      int avail = r - std::popcount(used_r_trunk) - (t < r ? 1 : 0);
      if (needy + add_needy > avail) continue;
      trunk.push_back(t);
      if (t < r)
        used_r_trunk |= std::uint32_t(1) << t;
      else {
        ++used_k[t - r];
        ++ink_count;
      }
      needy += add_needy;
      self(self);
      needy -= add_needy;
      if (t < r)
        used_r_trunk &= ~(std::uint32_t(1) << t);
      else {
        --used_k[t - r];
        --ink_count;
      }
      trunk.pop_back();
      if (stop) return;
    }
  };
  extend(extend);
}

DualSolveResult solve_moderate_case(const Graph& g, int k,
                                    const std::vector<int>& kclique,
                                    int max_k, std::uint64_t budget) {
  const int n = g.vertex_count();
  if (!is_connected(g))
    throw std::invalid_argument("solve_moderate_case: graph not connected");
  std::vector<int> kc = kclique;
  std::sort(kc.begin(), kc.end());
  if (!is_clique(g, kc))
    throw std::invalid_argument("solve_moderate_case: K is not a clique");
  const int ks = static_cast<int>(kc.size());
  if (k < 1 || ks <= n - 2 * k || ks > n - k)
    throw std::invalid_argument(
        "solve_moderate_case: |K| outside the moderate range");
  if (k > max_k)
    throw std::runtime_error(
        "parameter too large for moderate-case enumeration");

  bool have_best = false;
  int best_height = 0;
  std::string best_key;
  CompressedCandidate best;
  enumerate_candidates(
      g, kc,
      [&](const CompressedCandidate& c) {
        if (!check_candidate(g, c)) return true;
        int h = candidate_height(g, c);
        std::string key = candidate_key(c);
        if (!have_best || h < best_height ||
            (h == best_height && key < best_key)) {
          have_best = true;
          best_height = h;
          best_key = std::move(key);
          best = c;
        }
        return true;
      },
      budget);
  DualSolveResult res;
  if (!have_best || best_height > n - k) return res;
  DfsTree tree = decompress_candidate(g, best);
  auto verify = verify_dfs_tree(g, tree);
  if (!verify.ok())
    throw std::logic_error("solve_moderate_case: bad certificate: " +
                           verify.message);
  if (tree_height(tree) != best_height)
    throw std::logic_error("solve_moderate_case: height mismatch");
  res.yes = true;
  res.certificate = std::move(tree);
  return res;
}

DualSolveResult dual_minhlt_chordal(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (!is_connected(g))
    throw std::invalid_argument("dual_minhlt_chordal: graph not connected");
  if (k < 1 || k > n)
    throw std::invalid_argument("dual_minhlt_chordal: need 1 <= k <= n");
  ChordalityResult rec = recognize_chordal(g);
  if (!rec.chordal)
    throw std::invalid_argument(
        "dual_minhlt_chordal: graph is not chordal (found a hole of length " +
        std::to_string(rec.hole.size()) + ")");
  if (g.edge_count() == std::size_t(n) * (n - 1) / 2)
    return {};  // a clique: every DFS tree is a Hamiltonian path
  TreeDecomposition ct = clique_tree(g, rec.peo);
  std::vector<int> K = balanced_separator(g, ct);
  std::sort(K.begin(), K.end());
  const int ks = static_cast<int>(K.size());
  if (ks <= n - 2 * k) {
    // Small clique: DFS through K first; balance bounds the height.
    DfsTree tree = dfs_from_hamiltonian_separator(g, K, K);
    if (tree_height(tree) > n - k)
      throw std::logic_error("dual_minhlt_chordal: separator bound violated");
    DualSolveResult res;
    res.yes = true;
    res.certificate = std::move(tree);
    return res;
  }
  if (ks <= n - k) return solve_moderate_case(g, k, K);
  return {};  // large clique: MinHLT >= |K| > n-k
}

}  // namespace chordal
}  // namespace minhlt
