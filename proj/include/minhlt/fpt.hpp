#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minhlt/decomp.hpp"
#include "minhlt/graph.hpp"

namespace minhlt {
namespace fpt {

/// DP state of the height-bounded DFS-tree search: a rooted tree D (the
/// ancestral closure of the current bag's images), the bag-to-D map as
/// per-vertex labels, and the set S of D-vertices already claimed by
/// forgotten graph vertices.
struct PartialSolution {
  std::vector<int> parent;  // D; parent[root] == -1
  std::vector<int> label;   // index into the sorted bag, or -1
  std::vector<char> in_s;

  int size() const { return static_cast<int>(parent.size()); }
  int d_root() const;
  /// D-vertex holding the image of bag position j, or -1.
  int image_of(int bag_index) const;
};

struct ClosureResult {
  RootedTree tree;
  std::vector<int> kept;  // kept[i] = vertex id in the input tree
};

/// Induced subtree on x and all ancestors of x; x must be nonempty.
ClosureResult ancestral_closure(const RootedTree& t, const std::vector<int>& x);

/// True iff no component of D minus the bag images mixes S with non-S.
bool is_promising(const PartialSolution& ps);

/// Relabels D into its canonical (AHU) form: children ordered by
/// recursive encoding, ids assigned in preorder. The permutation is
/// independent of S, so join matching can compare byte arrays.
/// old_to_new, when given, receives the id mapping.
PartialSolution canonicalize(const PartialSolution& ps,
                             std::vector<int>* old_to_new = nullptr);

/// Key of the (D, tau) part only; equal keys mean label-preserving
/// rooted-tree isomorphism.
std::string tree_key(const PartialSolution& ps);
/// Full dedup key: tree part plus S flags.
std::string canonical_key(const PartialSolution& ps);

/// A generated solution plus the id mapping from the child solution's
/// D-vertices into the new (canonical) one; -1 marks dropped vertices.
struct Transition {
  PartialSolution sol;
  std::vector<int> from_child;
};

/// All candidates for introducing bag vertex v. `child` is empty at leaf
/// nodes. Bags are sorted vertex lists; labels refer to bag positions.
std::vector<Transition> transitions_introduce(
    const std::optional<PartialSolution>& child,
    const std::vector<int>& child_bag, const std::vector<int>& new_bag, int v,
    const Graph& g, int k);

std::optional<Transition> transitions_forget(const PartialSolution& child,
                                             const std::vector<int>& child_bag,
                                             int v);

/// Join of two canonical solutions over the same bag; empty unless the
/// tree parts agree and the S sets are disjoint.
std::optional<PartialSolution> transitions_join(const PartialSolution& a,
                                                const PartialSolution& b);

struct SolveStats {
  std::size_t peak_table_size = 0;
  std::size_t total_entries = 0;
  int decomposition_width = -1;
  std::size_t max_d_size = 0;
};

struct SolveResult {
  bool yes = false;
  std::optional<DfsTree> certificate;
  SolveStats stats;
};

/// Decides MinHLT(g) <= k; on YES the certificate is a verified DFS tree
/// of height <= k. A decomposition may be supplied; otherwise an exact
/// one is used for n <= 20 and min-fill beyond that.
SolveResult solve_minhlt(const Graph& g, int k,
                         const std::optional<TreeDecomposition>& td = {});

}  // namespace fpt
}  // namespace minhlt
