#include "prymlab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "prymlab/errors.hpp"

namespace prymlab {

DecoratedGraph::DecoratedGraph(std::vector<int> genera, std::vector<std::pair<int, int>> edges)
    : genus_(std::move(genera)) {
  for (int g : genus_)
    if (g < 0) throw InvalidDataError("negative genus");
  for (auto [u, v] : edges) add_edge(u, v);
}

int DecoratedGraph::add_vertex(int genus) {
  if (genus < 0) throw InvalidDataError("negative genus");
  genus_.push_back(genus);
  return num_vertices() - 1;
}

int DecoratedGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  edges_.emplace_back(u, v);
  return num_edges() - 1;
}

void DecoratedGraph::check_vertex(int v) const {
  if (v < 0 || v >= num_vertices()) throw PreconditionError("vertex " + std::to_string(v) + " not in graph");
}

int DecoratedGraph::genus(int v) const {
  check_vertex(v);
  return genus_[static_cast<std::size_t>(v)];
}

std::pair<int, int> DecoratedGraph::edge(int e) const {
  if (e < 0 || e >= num_edges()) throw PreconditionError("edge " + std::to_string(e) + " not in graph");
  return edges_[static_cast<std::size_t>(e)];
}

int DecoratedGraph::vertex_of(int half_edge) const {
  auto [u, v] = edge(edge_of(half_edge));
  return (half_edge & 1) ? v : u;
}

bool DecoratedGraph::is_loop(int e) const {
  auto [u, v] = edge(e);
  return u == v;
}

std::vector<int> DecoratedGraph::half_edges_at(int v) const {
  check_vertex(v);
  std::vector<int> out;
  for (int h = 0; h < num_half_edges(); ++h)
    if (vertex_of(h) == v) out.push_back(h);
  return out;
}

int DecoratedGraph::valence(int v) const { return static_cast<int>(half_edges_at(v).size()); }

std::vector<int> DecoratedGraph::component_labels() const {
  std::vector<int> parent(genus_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (auto [u, v] : edges_) {
    int a = find(u), b = find(v);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
  std::vector<int> root(genus_.size());
  for (int v = 0; v < num_vertices(); ++v) root[static_cast<std::size_t>(v)] = find(v);
  std::vector<int> label(genus_.size(), -1), seen;
  for (int v = 0; v < num_vertices(); ++v) {
    int r = root[static_cast<std::size_t>(v)];
    auto it = std::find(seen.begin(), seen.end(), r);
    if (it == seen.end()) {
      seen.push_back(r);
      it = seen.end() - 1;
    }
    label[static_cast<std::size_t>(v)] = static_cast<int>(it - seen.begin());
  }
  return label;
}

int DecoratedGraph::num_components() const {
  auto lab = component_labels();
  return lab.empty() ? 0 : *std::max_element(lab.begin(), lab.end()) + 1;
}

bool DecoratedGraph::is_connected() const { return num_components() <= 1; }

int DecoratedGraph::total_genus() const { return std::accumulate(genus_.begin(), genus_.end(), 0); }

int DecoratedGraph::first_betti() const { return num_edges() - num_vertices() + num_components(); }

DecoratedGraph DecoratedGraph::induced(const std::vector<int>& vertices) const {
  std::vector<int> pos(genus_.size(), -1);
  DecoratedGraph sub;
  for (int v : vertices) {
    check_vertex(v);
    pos[static_cast<std::size_t>(v)] = sub.add_vertex(genus(v));
  }
  for (auto [u, v] : edges_) {
    int a = pos[static_cast<std::size_t>(u)], b = pos[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0) sub.add_edge(a, b);
  }
  return sub;
}

int arithmetic_genus(const DecoratedGraph& g) {
  if (!g.is_connected()) throw PreconditionError("arithmetic genus of a disconnected graph; use the euler variant");
  return arithmetic_genus_euler(g);
}

int arithmetic_genus_euler(const DecoratedGraph& g) {
  return g.total_genus() - g.num_vertices() + g.num_edges() + 1;
}

bool is_stable(const DecoratedGraph& g) {
  for (int v = 0; v < g.num_vertices(); ++v) {
    int val = g.valence(v);
    if (g.genus(v) == 0 && val < 3) return false;
    if (g.genus(v) == 1 && val < 1) return false;
  }
  return true;
}

DecoratedGraph disjoint_union(const DecoratedGraph& a, const DecoratedGraph& b) {
  DecoratedGraph u = a;
  int shift = a.num_vertices();
  for (int g : b.genera()) u.add_vertex(g);
  for (auto [x, y] : b.edges()) u.add_edge(x + shift, y + shift);
  return u;
}

DecoratedGraph relabel(const DecoratedGraph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.num_vertices()) throw PreconditionError("permutation has wrong size");
  std::vector<int> genera(perm.size());
  for (std::size_t v = 0; v < perm.size(); ++v) genera[static_cast<std::size_t>(perm[v])] = g.genera()[v];
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) {
    int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(v)];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  return DecoratedGraph(genera, edges);
}

std::string to_dot(const DecoratedGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v = 0; v < g.num_vertices(); ++v) os << "  v" << v << " [label=\"g=" << g.genus(v) << "\"];\n";
  for (auto [u, v] : g.edges()) os << "  v" << u << " -- v" << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace prymlab
