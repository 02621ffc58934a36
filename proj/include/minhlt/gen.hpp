#pragma once

#include <cstdint>
#include <vector>

#include "minhlt/graph.hpp"
#include "minhlt/oracle.hpp"

namespace minhlt {
namespace gen {

struct Blowup {
  Graph graph;
  /// origin[v] = tree vertex whose clique v belongs to.
  std::vector<int> origin;
};

/// Blown-up tree: each tree vertex x becomes a clique of w(x)*m vertices,
/// tree edges become complete joins. The result is chordal.
Blowup blowup(const WeightedTree& t, long long m);

/// Optimal weighted treedepth decomposition in which every rooted subtree
/// is optimal for its induced subtree.
RootedTree recursively_optimal_decomposition(const WeightedTree& t);

/// DFS tree of blowup(t, m) with height <= m * td(t, w) + |V(t)|^2,
/// built by the recursive clique-then-branch walk. Requires m >= |V(t)|.
DfsTree construct_witness(const WeightedTree& t, long long m);

/// Connected chordal graph from a random clique tree; deterministic per
/// seed. density in [0, 1]: 1 yields K_n.
Graph random_chordal(int n, double density, std::uint64_t seed);

WeightedTree random_weighted_tree(int n, long long wmax, std::uint64_t seed);

enum class TraceableKind { kKm, kCm, kKmm };

/// K_m, C_m, or K_{m,m}: the randomly traceable families.
Graph traceable_graph(TraceableKind kind, int m);

/// Connected graph built from a random tree with maximum degree 3 plus
/// `chords` extra edges; benchmark instance family.
Graph random_tree_plus_chords(int n, int chords, std::uint64_t seed);

}  // namespace gen
}  // namespace minhlt
