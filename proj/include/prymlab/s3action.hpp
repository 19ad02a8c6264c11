#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "prymlab/canon.hpp"
#include "prymlab/graph.hpp"
#include "prymlab/s3group.hpp"

namespace prymlab {

/// Generator data for an action: images under sigma and tau of vertices,
/// half-edges and marked smooth points, plus the subgroup acting trivially on
/// each vertex (empty = all trivial).
struct ActionGenerators {
  std::vector<int> sigma_vertex, tau_vertex;
  std::vector<int> sigma_half, tau_half;
  std::vector<int> point_vertex;  ///< smooth points with nontrivial stabilizer
  std::vector<int> sigma_point, tau_point;
  std::vector<Subgroup> kernels;
};

enum class ObjectKind { Vertex, Edge, HalfEdge, Point };

struct ObjectRef {
  ObjectKind kind;
  int id;
};

enum class NodeType { T1 = 1, T2 = 2, T3 = 3, T4 = 4, T5 = 5 };
std::string to_string(NodeType t);

/// S3 acting on a decorated graph. Branch behavior at a node is carried by the
/// half-edge permutation: g swaps the branches of e iff it sends 2e to 2e+1.
class S3Action {
 public:
  S3Action() = default;
  S3Action(DecoratedGraph graph, const ActionGenerators& gens);

  /// Action with every element acting trivially on the graph.
  static S3Action trivial(DecoratedGraph graph, std::vector<Subgroup> kernels = {});

  const DecoratedGraph& graph() const { return graph_; }
  int num_points() const { return static_cast<int>(point_vertex_.size()); }
  int point_vertex(int p) const { return point_vertex_.at(static_cast<std::size_t>(p)); }

  int vertex_image(GroupElement g, int v) const;
  int half_edge_image(GroupElement g, int h) const;
  int edge_image(GroupElement g, int e) const;
  int point_image(GroupElement g, int p) const;
  int image(GroupElement g, ObjectRef x) const;

  Subgroup kernel(int v) const { return kernel_.at(static_cast<std::size_t>(v)); }
  const std::vector<Subgroup>& kernels() const { return kernel_; }

  Subgroup stabilizer(ObjectRef x) const;
  /// Sorted orbit of x.
  std::vector<int> orbit(ObjectRef x) const;
  /// All orbits of a kind, each sorted, ordered by smallest member.
  std::vector<std::vector<int>> orbits(ObjectKind kind) const;

  bool swaps_branches(GroupElement g, int edge) const;
  NodeType classify_node(int edge) const;

  bool is_transitive() const;
  /// Every component has trivial kernel.
  bool is_faithful() const;
  bool acts_trivially_on_vertices() const;

  ActionGenerators generators() const;

  friend bool operator==(const S3Action&, const S3Action&) = default;

 private:
  void check(ObjectRef x) const;
  void validate() const;

  DecoratedGraph graph_;
  std::array<std::vector<int>, 6> vimg_, himg_, pimg_;
  std::vector<int> point_vertex_;
  std::vector<Subgroup> kernel_;
};

/// The counts of nodes by type, components by stabilizer order and special
/// smooth points, all as orbit counts except r2, r3 which count points.
struct InvariantVector {
  std::array<int, 6> n{};  ///< n[1]..n[5]
  int c1 = 0, c2 = 0, c3 = 0, c6 = 0;
  int r2 = 0, r3 = 0;
  int s = 0, delta = 0;
  /// False when some component has a nontrivial kernel (infinitely many fixed points).
  bool finite_r = true;

  friend bool operator==(const InvariantVector&, const InvariantVector&) = default;
  std::string to_string() const;
};
std::ostream& operator<<(std::ostream& os, const InvariantVector& v);

InvariantVector invariant_vector(const S3Action& a);

/// Action on a graph without loops or multiple edges, determined by vertex
/// permutations; throws InvalidDataError if the graph does not allow it.
S3Action action_from_vertex_permutations(const DecoratedGraph& g, const std::vector<int>& sigma,
                                         const std::vector<int>& tau);

/// Encoding for equivariant isomorphism: graph encoding plus sigma/tau arcs,
/// kernel colors and marked points.
ColoredDigraph encode_action(const S3Action& a);
Certificate action_certificate(const S3Action& a);
bool equivalent(const S3Action& a, const S3Action& b);

struct ActionConstraints {
  bool transitive = false;
  bool faithful = false;
  bool nontrivial_on_vertices = false;
  /// Also enumerate normal kernels per vertex orbit (otherwise all trivial).
  bool enumerate_kernels = false;
};

/// All actions on g up to equivariant isomorphism, filtered by constraints.
/// Marked points are not generated.
std::vector<S3Action> enumerate_actions(const DecoratedGraph& g, const ActionConstraints& constraints = {});

}  // namespace prymlab
