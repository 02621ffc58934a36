#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "minhlt/graph.hpp"

namespace minhlt {

/// Tree with positive integer vertex weights; input to the blown-up
/// instance generator and the weighted treedepth oracle.
struct WeightedTree {
  Graph tree;
  std::vector<long long> weights;
};

void check_weighted_tree(const WeightedTree& t);

namespace oracle {

/// Emits every distinct DFS tree of g exactly once (deduplicated by the
/// parent-array fingerprint). Returns false from the callback to stop.
/// Intended for n <= 10; no hard guard here, callers guard sizes.
void enumerate_dfs_trees(const Graph& g,
                         const std::function<bool(const DfsTree&)>& emit);

/// Convenience: collect all DFS trees, optionally truncated at `limit`.
std::vector<DfsTree> all_dfs_trees(const Graph& g, std::size_t limit = 0);

/// Exact MinHLT via a memoized recursion over (component, root) pairs.
/// Guarded at n <= 12 unless force is set.
int brute_minhlt(const Graph& g, bool force = false);

/// Exact treedepth via td(S) = 1 + min_v max over components of S - v.
/// Disconnected inputs take the max over components. Guarded at n <= 12.
int brute_treedepth(const Graph& g, bool force = false);

struct WeightedTreedepthResult {
  long long value = 0;
  /// Recursively optimal decomposition: parent array over the tree's
  /// vertices; every rooted subtree is optimal for its induced subtree.
  RootedTree decomposition;
};

WeightedTreedepthResult brute_weighted_treedepth(const WeightedTree& t,
                                                 bool force = false);

struct LeafExtremes {
  int min_leaves = 0;
  int max_leaves = 0;
};

/// Min and max leaf counts over all DFS trees of g. Guarded at n <= 10.
LeafExtremes brute_leaf_extremes(const Graph& g, bool force = false);

}  // namespace oracle
}  // namespace minhlt
