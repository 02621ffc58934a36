#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace minhlt {

/// Simple undirected graph over dense 0-based vertex ids.
/// Adjacency lists are sorted and deduplicated; self-loops are rejected.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::vector<std::pair<int, int>> edges = {});

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;

 private:
  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

/// Rooted tree given by a parent array; parent[root] == -1.
/// "ancestor" is reflexive: every vertex is an ancestor of itself.
struct RootedTree {
  std::vector<int> parent;
  int root = -1;

  int size() const { return static_cast<int>(parent.size()); }
};

/// A DFS spanning tree of some host graph. Structurally a RootedTree;
/// the host is passed to the operations that need it.
using DfsTree = RootedTree;

/// Checks the RootedTree invariants: exactly one root, acyclic parent
/// pointers, all vertices reach the root. Throws std::invalid_argument.
void check_rooted_tree(const RootedTree& t);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Deterministic DFS: at each step the smallest unvisited neighbor under
/// `priority` is entered next. `priority[v]` is the rank of v; lower first.
/// Throws if g is not connected.
DfsTree run_dfs(const Graph& g, int root, const std::vector<int>& priority);
DfsTree run_dfs(const Graph& g, int root);

enum class DfsViolation {
  kNone,
  kNotSpanning,
  kNonGraphEdge,
  kCrossEdge,
  kMalformed,
};

struct DfsVerifyResult {
  DfsViolation violation = DfsViolation::kNone;
  // Meaning depends on violation: missing vertex (kNotSpanning, .first only),
  // the offending tree edge (kNonGraphEdge), or cross-edge pair (kCrossEdge).
  std::pair<int, int> witness{-1, -1};
  std::string message;

  bool ok() const { return violation == DfsViolation::kNone; }
};

DfsVerifyResult verify_dfs_tree(const Graph& g, const RootedTree& t);

/// Height with the leaf = 1 convention.
int tree_height(const RootedTree& t);

/// Depth of every vertex; the root has depth 1.
std::vector<int> tree_depths(const RootedTree& t);

bool is_ancestor(const RootedTree& t, int u, int v);

bool longest_vertical_path_check(const Graph& g, const DfsTree& t, int bound);

}  // namespace minhlt
