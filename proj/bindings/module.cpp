#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <utility>
#include <vector>

#include "minhlt/chordal.hpp"
#include "minhlt/fpt.hpp"
#include "minhlt/gen.hpp"
#include "minhlt/graph.hpp"
#include "minhlt/oracle.hpp"

namespace py = pybind11;
using namespace minhlt;

namespace {

RootedTree tree_from(const std::vector<int>& parent, int root) {
  RootedTree t;
  t.parent = parent;
  t.root = root;
  check_rooted_tree(t);
  return t;
}

py::object tree_to(const std::optional<DfsTree>& t) {
  if (!t) return py::none();
  return py::make_tuple(t->parent, t->root);
}

WeightedTree weighted_tree_from(int n,
                                const std::vector<std::pair<int, int>>& edges,
                                const std::vector<long long>& weights) {
  WeightedTree t;
  t.tree = Graph(n, edges);
  t.weights = weights;
  check_weighted_tree(t);
  return t;
}

}  // namespace

PYBIND11_MODULE(_minhlt, m) {
  m.doc() = "DFS spanning trees of bounded height: solvers, oracles, and "
            "instance generators";

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, std::vector<std::pair<int, int>>>(), py::arg("n"),
           py::arg("edges") = std::vector<std::pair<int, int>>{})
      .def_property_readonly("n", &Graph::vertex_count)
      .def_property_readonly("m", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("neighbors", &Graph::neighbors, py::arg("v"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", m=" + std::to_string(g.edge_count()) + ")";
      });

  // Solvers. Certificates are (parent, root) tuples or None.
  m.def(
      "solve_minhlt",
      [](const Graph& g, int k) {
        auto res = fpt::solve_minhlt(g, k);
        return py::make_tuple(res.yes, tree_to(res.certificate));
      },
      py::arg("g"), py::arg("k"),
      "Decide whether g has a DFS spanning tree of height at most k; "
      "returns (yes, certificate).");
  m.def(
      "dual_minhlt_chordal",
      [](const Graph& g, int k) {
        auto res = chordal::dual_minhlt_chordal(g, k);
        return py::make_tuple(res.yes, tree_to(res.certificate));
      },
      py::arg("g"), py::arg("k"),
      "Decide MinHLT(g) <= n - k on a connected chordal graph; returns "
      "(yes, certificate).");

  // Verification and tree measures.
  m.def(
      "verify_dfs_tree",
      [](const Graph& g, const std::vector<int>& parent, int root) {
        RootedTree t;
        t.parent = parent;
        t.root = root;
        auto res = verify_dfs_tree(g, t);
        return py::make_tuple(res.ok(), res.message);
      },
      py::arg("g"), py::arg("parent"), py::arg("root"),
      "Check the DFS-tree conditions; returns (ok, message).");
  m.def(
      "tree_height",
      [](const std::vector<int>& parent, int root) {
        return tree_height(tree_from(parent, root));
      },
      py::arg("parent"), py::arg("root"));
  m.def(
      "run_dfs",
      [](const Graph& g, int root) {
        auto t = run_dfs(g, root);
        return py::make_tuple(t.parent, t.root);
      },
      py::arg("g"), py::arg("root"));

  // Chordality.
  m.def(
      "recognize_chordal",
      [](const Graph& g) {
        auto res = chordal::recognize_chordal(g);
        return py::make_tuple(res.chordal, res.chordal ? res.peo : res.hole);
      },
      py::arg("g"),
      "Returns (True, peo) for chordal inputs and (False, hole) otherwise.");

  // Brute-force oracles (small n).
  m.def("brute_minhlt", &oracle::brute_minhlt, py::arg("g"),
        py::arg("force") = false);
  m.def("brute_treedepth", &oracle::brute_treedepth, py::arg("g"),
        py::arg("force") = false);

  // Generators.
  m.def("random_chordal", &gen::random_chordal, py::arg("n"),
        py::arg("density"), py::arg("seed"));
  m.def("random_tree_plus_chords", &gen::random_tree_plus_chords,
        py::arg("n"), py::arg("chords"), py::arg("seed"));
  m.def(
      "traceable_graph",
      [](const std::string& kind, int mm) {
        gen::TraceableKind tk;
        if (kind == "km")
          tk = gen::TraceableKind::kKm;
        else if (kind == "cm")
          tk = gen::TraceableKind::kCm;
        else if (kind == "kmm")
          tk = gen::TraceableKind::kKmm;
        else
          throw std::invalid_argument("kind must be 'km', 'cm', or 'kmm'");
        return gen::traceable_graph(tk, mm);
      },
      py::arg("kind"), py::arg("m"));
  m.def(
      "blowup",
      [](int n, const std::vector<std::pair<int, int>>& edges,
         const std::vector<long long>& weights, long long mult) {
        auto b = gen::blowup(weighted_tree_from(n, edges, weights), mult);
        return py::make_tuple(b.graph, b.origin);
      },
      py::arg("n"), py::arg("edges"), py::arg("weights"), py::arg("m"),
      "Blown-up weighted tree; returns (graph, origin) where origin maps "
      "each vertex to its tree vertex.");
}
