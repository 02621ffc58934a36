#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "minhlt/decomp.hpp"
#include "minhlt/graph.hpp"

namespace minhlt {
namespace chordal {

/// Outcome of chordality recognition: a perfect elimination order
/// (peo[0] eliminated first), or an induced cycle of length >= 4.
struct ChordalityResult {
  bool chordal = false;
  std::vector<int> peo;
  std::vector<int> hole;
};

ChordalityResult recognize_chordal(const Graph& g);

/// True iff `order` is a perfect elimination order of g: each vertex's
/// later neighbors form a clique.
bool is_peo(const Graph& g, const std::vector<int>& order);

/// Tree decomposition whose bags are exactly the maximal cliques,
/// linked by a maximum-weight spanning tree of the clique graph.
/// Throws if peo is not valid for g.
TreeDecomposition clique_tree(const Graph& g, const std::vector<int>& peo);

/// Type of a vertex relative to a moderate clique K: vertices of R keep
/// their identity, vertices of K collapse to their neighborhood in R.
struct VertexType {
  bool in_k = false;
  int r_vertex = -1;               // set when !in_k
  std::vector<int> r_neighborhood;  // sorted; set when in_k
};

/// Candidate compression of a DFS tree: a small rooted tree, a type per
/// vertex, and the edges (both ends in K) that may absorb bypassed
/// clique vertices when decompressing.
struct CompressedCandidate {
  RootedTree ctree;
  std::vector<VertexType> typemap;
  std::vector<std::pair<int, int>> amendable;  // (parent, child) pairs
  std::vector<int> kclique;                    // sorted
};

struct DualSolveResult {
  bool yes = false;
  std::optional<DfsTree> certificate;
};

/// DFS tree whose traversal starts along the given Hamiltonian path of
/// g[s]; its height is at most |s| plus the largest component of g - s.
DfsTree dfs_from_hamiltonian_separator(const Graph& g,
                                       const std::vector<int>& s,
                                       const std::vector<int>& hampath);

/// Emits candidate compressions (deduplicated up to isomorphism of the
/// typed tree) for the moderate clique kclique. Construction is
/// incremental: the root-to-X spine of clique types first, then the
/// remaining R vertices as attached subtrees, pruning partial objects
/// that already violate the sanity checks. Return false from `emit` to
/// stop. Throws when the step budget is exhausted.
void enumerate_candidates(
    const Graph& g, const std::vector<int>& kclique,
    const std::function<bool(const CompressedCandidate&)>& emit,
    std::uint64_t budget = 20'000'000);

/// Full viability test: type multiplicities, adjacency on edges,
/// non-adjacency across incomparable pairs, the single vertical path of
/// clique types, and the amendable-edge condition for every type with
/// surplus vertices.
bool check_candidate(const Graph& g, const CompressedCandidate& c);

/// Minimum-height tree among those compressing to c, materialized over
/// the graph's vertices. Surplus vertices of each type go into the
/// deepest amendable edge they are allowed in; slots are filled in
/// ascending vertex id. Requires check_candidate(g, c).
DfsTree decompress_candidate(const Graph& g, const CompressedCandidate& c);

/// Height of decompress_candidate(g, c) computed symbolically, without
/// materializing the tree.
int candidate_height(const Graph& g, const CompressedCandidate& c);

/// Canonical encoding of the typed candidate tree; equal keys mean
/// isomorphic candidates.
std::string candidate_key(const CompressedCandidate& c);

/// Decides MinHLT(g) <= n - k for a clique K with n-2k < |K| <= n-k by
/// enumerating candidate compressions. Guarded: k above max_k, or an
/// enumeration overrunning `budget` steps, raises
/// "parameter too large for moderate-case enumeration".
DualSolveResult solve_moderate_case(const Graph& g, int k,
                                    const std::vector<int>& kclique,
                                    int max_k = 4,
                                    std::uint64_t budget = 20'000'000);

/// Decides MinHLT(g) <= n - k on a connected chordal graph, with a
/// verified certificate on YES. Dispatches on the size of a balanced
/// clique separator K: small (|K| <= n-2k) via the Hamiltonian-path DFS,
/// moderate via solve_moderate_case, large (|K| > n-k) is an immediate
/// NO. Throws on non-chordal or disconnected input.
DualSolveResult dual_minhlt_chordal(const Graph& g, int k);

}  // namespace chordal
}  // namespace minhlt
