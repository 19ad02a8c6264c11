#pragma once

#include <string>
#include <utility>
#include <vector>

namespace prymlab {

/// Dual graph of a nodal curve. Vertices are components (with geometric
/// genus), edges are nodes. Edge e owns half-edges 2e (first end) and 2e+1
/// (second end); a self-loop has both half-edges on one vertex.
class DecoratedGraph {
 public:
  DecoratedGraph() = default;
  explicit DecoratedGraph(std::vector<int> genera, std::vector<std::pair<int, int>> edges = {});

  int add_vertex(int genus);
  int add_edge(int u, int v);

  int num_vertices() const { return static_cast<int>(genus_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_half_edges() const { return 2 * num_edges(); }

  int genus(int v) const;
  const std::vector<int>& genera() const { return genus_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::pair<int, int> edge(int e) const;

  static int edge_of(int half_edge) { return half_edge / 2; }
  static int partner(int half_edge) { return half_edge ^ 1; }
  int vertex_of(int half_edge) const;
  bool is_loop(int e) const;

  /// Half-edges incident to v, ascending.
  std::vector<int> half_edges_at(int v) const;
  int valence(int v) const;

  /// Component index for every vertex (components numbered by smallest vertex).
  std::vector<int> component_labels() const;
  int num_components() const;
  bool is_connected() const;

  /// Sum of genera.
  int total_genus() const;
  /// delta - s + (number of components).
  int first_betti() const;

  /// Induced subgraph on a vertex set; vertex order follows `vertices`.
  DecoratedGraph induced(const std::vector<int>& vertices) const;

  friend bool operator==(const DecoratedGraph&, const DecoratedGraph&) = default;

 private:
  void check_vertex(int v) const;

  std::vector<int> genus_;
  std::vector<std::pair<int, int>> edges_;
};

/// sum g - s + delta + 1; requires a connected graph.
int arithmetic_genus(const DecoratedGraph& g);
/// 1 - chi(O) for any graph: sum g - s + delta + 1. Equals arithmetic_genus
/// on connected graphs and is additive minus one on disjoint unions.
int arithmetic_genus_euler(const DecoratedGraph& g);

/// Genus-0 vertices need valence >= 3, genus-1 vertices valence >= 1.
bool is_stable(const DecoratedGraph& g);

/// Disjoint union, second graph's vertices shifted after the first's.
DecoratedGraph disjoint_union(const DecoratedGraph& a, const DecoratedGraph& b);

/// Relabels vertices by perm (new id of old vertex v is perm[v]); edges are
/// reordered deterministically.
DecoratedGraph relabel(const DecoratedGraph& g, const std::vector<int>& perm);

/// DOT rendering: vertices "g=<genus>", unlabeled edges, ordered by id.
std::string to_dot(const DecoratedGraph& g, const std::string& name = "G");

}  // namespace prymlab
