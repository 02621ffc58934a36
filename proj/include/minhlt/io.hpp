#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "minhlt/decomp.hpp"
#include "minhlt/graph.hpp"
#include "minhlt/oracle.hpp"

namespace minhlt {
namespace io {

/// PACE-style graph file: header `p tdp <n> <m>`, one `u v` edge line per
/// edge, 1-based vertex ids, `c` comment lines anywhere.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g,
                 const std::vector<std::string>& comments = {});

/// PACE-style decomposition: `s td <#bags> <width+1> <n>`, `b <id> v...`
/// lines, then one line per bag-tree edge.
TreeDecomposition read_decomposition(std::istream& in);
void write_decomposition(std::ostream& out, const TreeDecomposition& td,
                         int n);

/// Certificate tree: line `root <r>`, then `parent <v> <p>` per non-root
/// vertex, all ids 1-based.
RootedTree read_tree(std::istream& in);
void write_tree(std::ostream& out, const RootedTree& t);

/// Weighted tree sidecar: `p wt <n>`, `w <v> <weight>` per vertex,
/// `e <u> <v>` per tree edge, 1-based.
WeightedTree read_weighted_tree(std::istream& in);
void write_weighted_tree(std::ostream& out, const WeightedTree& t);

// File wrappers; throw std::runtime_error on open failure or bad syntax.
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g,
                      const std::vector<std::string>& comments = {});
TreeDecomposition read_decomposition_file(const std::string& path);
void write_decomposition_file(const std::string& path,
                              const TreeDecomposition& td, int n);
RootedTree read_tree_file(const std::string& path);
void write_tree_file(const std::string& path, const RootedTree& t);
WeightedTree read_weighted_tree_file(const std::string& path);
void write_weighted_tree_file(const std::string& path, const WeightedTree& t);

}  // namespace io
}  // namespace minhlt
