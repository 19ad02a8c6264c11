#pragma once

#include <vector>

#include "prymlab/graph.hpp"

namespace prymlab {

/// Vertex-colored digraph with labeled arcs, the common encoding used for
/// isomorphism tests of graphs, actions and covers.
struct ColoredDigraph {
  struct Arc {
    int from;
    int to;
    int label;
  };
  std::vector<long> color;
  std::vector<Arc> arcs;

  int add_node(long c) {
    color.push_back(c);
    return static_cast<int>(color.size()) - 1;
  }
  void add_arc(int from, int to, int label) { arcs.push_back({from, to, label}); }
  int size() const { return static_cast<int>(color.size()); }
};

/// Canonical certificate: equal iff the digraphs are isomorphic.
using Certificate = std::vector<long>;

struct CanonResult {
  Certificate certificate;
  /// labeling[v] = canonical position of node v.
  std::vector<int> labeling;
  /// All automorphisms (as node permutations), when requested.
  std::vector<std::vector<int>> automorphisms;
};

/// Individualization-refinement search; explores the whole tree, which is
/// fine for the small graphs handled here.
CanonResult canonical_form(const ColoredDigraph& d, bool want_automorphisms = false);

/// Encoding of a decorated graph: a node per vertex (colored by genus) and per
/// half-edge, with incidence and partner arcs. Nodes 0..s-1 are the vertices,
/// node s+h is half-edge h.
ColoredDigraph encode_graph(const DecoratedGraph& g);

Certificate graph_certificate(const DecoratedGraph& g);
bool isomorphic(const DecoratedGraph& a, const DecoratedGraph& b);

/// Automorphisms of a decorated graph as permutations of vertices and
/// half-edges.
struct GraphAutomorphism {
  std::vector<int> vertex;
  std::vector<int> half_edge;
  friend bool operator==(const GraphAutomorphism&, const GraphAutomorphism&) = default;
  friend auto operator<=>(const GraphAutomorphism&, const GraphAutomorphism&) = default;
};
std::vector<GraphAutomorphism> graph_automorphisms(const DecoratedGraph& g);

}  // namespace prymlab
