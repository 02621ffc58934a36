#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minhlt/graph.hpp"

namespace minhlt {

/// Tree decomposition: a tree over bag nodes plus one vertex set per node.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;  // each sorted
  std::vector<std::pair<int, int>> edges;

  int node_count() const { return static_cast<int>(bags.size()); }
  int width() const;
};

struct DecompositionCheck {
  bool ok = true;
  std::string violation;  // empty when ok

  explicit operator bool() const { return ok; }
};

DecompositionCheck validate_decomposition(const Graph& g,
                                          const TreeDecomposition& td);

enum class NiceNodeKind { kIntroduce, kForget, kJoin };

/// Rooted binary decomposition of introduce/forget/join nodes. The root
/// bag is a singleton: forgetting stops when one vertex remains, so the
/// root acceptance test of the height DP applies verbatim.
struct NiceTreeDecomposition {
  struct Node {
    NiceNodeKind kind;
    int vertex = -1;       // introduced/forgotten vertex; -1 for join
    int child1 = -1;       // -1 for leaves
    int child2 = -1;       // set only for join
    std::vector<int> bag;  // sorted
  };
  std::vector<Node> nodes;
  int root = -1;

  int width() const;
  /// View as a plain decomposition (for validation).
  TreeDecomposition flatten() const;
  /// Node indices in post-order (children before parents).
  std::vector<int> post_order() const;
};

NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td);

/// Min-fill elimination ordering heuristic; width carries no guarantee.
TreeDecomposition heuristic_decomposition(const Graph& g);

/// Minimum-width decomposition via subset DP over elimination prefixes.
/// Returns nullopt ("too large") above `limit` vertices.
std::optional<TreeDecomposition> exact_decomposition(const Graph& g,
                                                     int limit = 20);

/// Decomposition induced by an elimination ordering (bags are the
/// eliminated vertex plus its higher neighbors in the fill-in graph).
TreeDecomposition decomposition_from_elimination_order(
    const Graph& g, const std::vector<int>& order);

/// Balanced separator contained in one bag: walks the decomposition
/// toward the unique too-heavy component of G - bag; the stopping bag,
/// shrunk to a balanced subset if necessary, is returned. Components
/// C_i of G - K satisfy 2 * max|C_i| <= sum |C_i|.
std::vector<int> balanced_separator(const Graph& g,
                                    const TreeDecomposition& td);

}  // namespace minhlt
