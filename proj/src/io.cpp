#include "minhlt/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace minhlt {
namespace io {

namespace {

[[noreturn]] void fail(const std::string& what) {
  throw std::runtime_error("parse error: " + what);
}

/// Reads the next non-comment, non-blank line; false at end of input.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line[i] == 'c') continue;
    if (i > 0 || line.back() == '\r') {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
        line.pop_back();
      line.erase(0, i);
    }
    return true;
  }
  return false;
}

std::vector<long long> numbers_after(const std::string& line,
                                     const std::string& prefix) {
  std::istringstream ss(line.substr(prefix.size()));
  std::vector<long long> out;
  long long x;
  while (ss >> x) out.push_back(x);
  std::string rest;
  if (ss.clear(), ss >> rest) fail("trailing tokens in '" + line + "'");
  return out;
}

int vertex_id(long long x, int n, const char* what) {
  if (x < 1 || x > n) fail(std::string(what) + " id out of range");
  return static_cast<int>(x - 1);
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  if (!next_line(in, line) || line.rfind("p tdp ", 0) != 0)
    fail("expected 'p tdp <n> <m>' header");
  auto head = numbers_after(line, "p tdp ");
  if (head.size() != 2 || head[0] < 0 || head[1] < 0) fail("bad graph header");
  int n = static_cast<int>(head[0]);
  std::vector<std::pair<int, int>> edges;
  while (next_line(in, line)) {
    std::istringstream ss(line);
    long long u, v;
    std::string rest;
    if (!(ss >> u >> v) || (ss >> rest)) fail("bad edge line '" + line + "'");
    edges.emplace_back(vertex_id(u, n, "vertex"), vertex_id(v, n, "vertex"));
  }
  if (static_cast<long long>(edges.size()) != head[1])
    fail("edge count does not match header");
  return Graph(n, std::move(edges));
}

void write_graph(std::ostream& out, const Graph& g,
                 const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "c " << c << "\n";
  out << "p tdp " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << u + 1 << " " << v + 1 << "\n";
}

TreeDecomposition read_decomposition(std::istream& in) {
  std::string line;
  if (!next_line(in, line) || line.rfind("s td ", 0) != 0)
    fail("expected 's td <#bags> <width+1> <n>' header");
  auto head = numbers_after(line, "s td ");
  if (head.size() != 3 || head[0] < 0 || head[1] < 0 || head[2] < 0)
    fail("bad decomposition header");
  int bags = static_cast<int>(head[0]);
  int n = static_cast<int>(head[2]);
  TreeDecomposition td;
  td.bags.assign(bags, {});
  std::vector<char> seen(bags, 0);
  while (next_line(in, line)) {
    if (line.rfind("b ", 0) == 0) {
      auto nums = numbers_after(line, "b ");
      if (nums.empty()) fail("bag line without id");
      int id = vertex_id(nums[0], bags, "bag");
      if (seen[id]) fail("duplicate bag id");
      seen[id] = 1;
      for (std::size_t i = 1; i < nums.size(); ++i)
        td.bags[id].push_back(vertex_id(nums[i], n, "vertex"));
      std::sort(td.bags[id].begin(), td.bags[id].end());
    } else {
      std::istringstream ss(line);
      long long a, b;
      std::string rest;
      if (!(ss >> a >> b) || (ss >> rest))
        fail("bad decomposition edge line '" + line + "'");
      td.edges.emplace_back(vertex_id(a, bags, "bag"),
                            vertex_id(b, bags, "bag"));
    }
  }
  for (int i = 0; i < bags; ++i)
    if (!seen[i]) fail("missing bag " + std::to_string(i + 1));
  if (td.width() + 1 != static_cast<int>(head[1]))
    fail("width does not match header");
  return td;
}

void write_decomposition(std::ostream& out, const TreeDecomposition& td,
                         int n) {
  out << "s td " << td.node_count() << " " << td.width() + 1 << " " << n
      << "\n";
  for (int i = 0; i < td.node_count(); ++i) {
    out << "b " << i + 1;
    for (int v : td.bags[i]) out << " " << v + 1;
    out << "\n";
  }
  for (auto [a, b] : td.edges) out << a + 1 << " " << b + 1 << "\n";
}

RootedTree read_tree(std::istream& in) {
  std::string line;
  if (!next_line(in, line) || line.rfind("root ", 0) != 0)
    fail("expected 'root <r>' header");
  auto head = numbers_after(line, "root ");
  if (head.size() != 1 || head[0] < 1) fail("bad root line");
  std::vector<std::pair<long long, long long>> rel;
  long long max_id = head[0];
  while (next_line(in, line)) {
    if (line.rfind("parent ", 0) != 0)
      fail("expected 'parent <v> <p>' line, got '" + line + "'");
    auto nums = numbers_after(line, "parent ");
    if (nums.size() != 2 || nums[0] < 1 || nums[1] < 1)
      fail("bad parent line");
    rel.emplace_back(nums[0], nums[1]);
    max_id = std::max({max_id, nums[0], nums[1]});
  }
  int n = static_cast<int>(max_id);
  RootedTree t;
  t.parent.assign(n, -2);
  t.root = static_cast<int>(head[0] - 1);
  t.parent[t.root] = -1;
  for (auto [v, p] : rel) {
    int vi = vertex_id(v, n, "vertex");
    if (t.parent[vi] != -2) fail("vertex listed twice");
    t.parent[vi] = vertex_id(p, n, "vertex");
  }
  for (int v = 0; v < n; ++v)
    if (t.parent[v] == -2) fail("vertex " + std::to_string(v + 1) + " missing");
  check_rooted_tree(t);
  return t;
}

void write_tree(std::ostream& out, const RootedTree& t) {
  out << "root " << t.root + 1 << "\n";
  for (int v = 0; v < t.size(); ++v)
    if (v != t.root) out << "parent " << v + 1 << " " << t.parent[v] + 1 << "\n";
}

WeightedTree read_weighted_tree(std::istream& in) {
  std::string line;
  if (!next_line(in, line) || line.rfind("p wt ", 0) != 0)
    fail("expected 'p wt <n>' header");
  auto head = numbers_after(line, "p wt ");
  if (head.size() != 1 || head[0] < 1) fail("bad weighted tree header");
  int n = static_cast<int>(head[0]);
  WeightedTree t;
  t.weights.assign(n, 0);
  std::vector<std::pair<int, int>> edges;
  while (next_line(in, line)) {
    if (line.rfind("w ", 0) == 0) {
      auto nums = numbers_after(line, "w ");
      if (nums.size() != 2 || nums[1] < 1) fail("bad weight line");
      t.weights[vertex_id(nums[0], n, "vertex")] = nums[1];
    } else if (line.rfind("e ", 0) == 0) {
      auto nums = numbers_after(line, "e ");
      if (nums.size() != 2) fail("bad tree edge line");
      edges.emplace_back(vertex_id(nums[0], n, "vertex"),
                         vertex_id(nums[1], n, "vertex"));
    } else {
      fail("unexpected line '" + line + "'");
    }
  }
  for (int v = 0; v < n; ++v)
    if (t.weights[v] < 1) fail("vertex " + std::to_string(v + 1) + " unweighted");
  t.tree = Graph(n, std::move(edges));
  check_weighted_tree(t);
  return t;
}

void write_weighted_tree(std::ostream& out, const WeightedTree& t) {
  out << "p wt " << t.tree.vertex_count() << "\n";
  for (int v = 0; v < t.tree.vertex_count(); ++v)
    out << "w " << v + 1 << " " << t.weights[v] << "\n";
  for (auto [u, v] : t.tree.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
}

namespace {

template <typename F>
auto read_file(const std::string& path, F reader) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return reader(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

template <typename F>
void write_file(const std::string& path, F writer) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  writer(out);
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace

Graph read_graph_file(const std::string& path) {
  return read_file(path, [](std::istream& in) { return read_graph(in); });
}
void write_graph_file(const std::string& path, const Graph& g,
                      const std::vector<std::string>& comments) {
  write_file(path, [&](std::ostream& o) { write_graph(o, g, comments); });
}
TreeDecomposition read_decomposition_file(const std::string& path) {
  return read_file(path,
                   [](std::istream& in) { return read_decomposition(in); });
}
void write_decomposition_file(const std::string& path,
                              const TreeDecomposition& td, int n) {
  write_file(path, [&](std::ostream& o) { write_decomposition(o, td, n); });
}
RootedTree read_tree_file(const std::string& path) {
  return read_file(path, [](std::istream& in) { return read_tree(in); });
}
void write_tree_file(const std::string& path, const RootedTree& t) {
  write_file(path, [&](std::ostream& o) { write_tree(o, t); });
}
WeightedTree read_weighted_tree_file(const std::string& path) {
  return read_file(path,
                   [](std::istream& in) { return read_weighted_tree(in); });
}
void write_weighted_tree_file(const std::string& path, const WeightedTree& t) {
  write_file(path, [&](std::ostream& o) { write_weighted_tree(o, t); });
}

}  // namespace io
}  // namespace minhlt
