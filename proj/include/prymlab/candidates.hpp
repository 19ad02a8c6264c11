#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prymlab/covers.hpp"

namespace prymlab {

/// Extra structure on the components over a base vertex, beyond the nodes
/// lying over base nodes.
enum class SpecialKind {
  None,
  PointsOrder2,  ///< orbit of 3 smooth points with stabilizer an involution group
  PointsOrder3,  ///< orbit of 2 smooth points with stabilizer <sigma>
  NodesType4,    ///< orbit of 3 nodes, each exchanged by an involution swapping branches
  NodeType5,     ///< one node fixed by S3, involutions swapping branches
};

struct VertexChoice {
  Subgroup stabilizer = subgroups::full;  ///< of the component on the identity coset
  Subgroup kernel = subgroups::trivial;
  SpecialKind special = SpecialKind::None;
  Subgroup special_group = subgroups::trivial;  ///< P for points, <t> for type-4 nodes
};

struct NodeChoice {
  Subgroup stabilizer = subgroups::trivial;  ///< R, stabilizer of the representative node
  int second_coset = 0;                      ///< index into left_cosets(H of the second end)
};

/// Base-level description of an S3-cover: components over base vertex j are
/// the cosets of H_j; nodes over base edge k are the cosets of R_k, node gR
/// joining g H_{j1} to g c_k.
struct Blueprint {
  std::vector<VertexChoice> vertices;
  std::vector<NodeChoice> nodes;
};

/// Branch data of one component orbit, seen from the base component.
struct ComponentProfile {
  int group_order = 1;   ///< |H/K|
  bool cyclic = true;    ///< H/K cyclic
  int base_genus = 0;
  int cover_genus = 0;
  int involution_points = 0;  ///< branch points of index 2 on the base component
  int rotation_points = 0;    ///< branch points of index 3
  friend bool operator==(const ComponentProfile&, const ComponentProfile&) = default;
};

struct BuildResult {
  std::optional<CoverDatum> cover;
  std::string rejection;  ///< empty when built
  std::vector<ComponentProfile> profiles;  ///< one per base vertex when built
};

/// Builds the cover of `base` described by `bp`. Invalid blueprints throw
/// PreconditionError; blueprints failing Hurwitz integrality, the genus bound
/// or connectivity return a rejection reason instead.
BuildResult build_candidate(const DecoratedGraph& base, const Blueprint& bp, int max_genus = 7);

/// Whether a node choice is compatible with the vertex choices at its ends.
bool node_choice_valid(const DecoratedGraph& base, const Blueprint& bp, int edge, const NodeChoice& n);
bool vertex_choice_valid(const VertexChoice& v);

struct CandidateSpace {
  bool kernels = false;   ///< allow nontrivial kernels
  bool specials = false;  ///< allow one special orbit per candidate
};

/// All blueprints over base (the first vertex's stabilizer up to conjugacy).
std::vector<Blueprint> enumerate_blueprints(const DecoratedGraph& base, const CandidateSpace& space);

}  // namespace prymlab
