#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "prymlab/cycpoly.hpp"
#include "prymlab/s3action.hpp"

namespace prymlab {

/// Quotient of the acted graph by a subgroup. Genera come from Hurwitz on each
/// component; an edge orbit containing a branch exchange becomes a smooth point
/// and is dropped.
struct QuotientGraph {
  DecoratedGraph graph;
  std::vector<int> vertex_map;     ///< total vertex -> quotient vertex
  std::vector<int> edge_map;       ///< total edge -> quotient edge, -1 if it becomes smooth
  std::vector<int> half_edge_map;  ///< total half-edge -> quotient half-edge, -1 likewise
};

QuotientGraph quotient_by(const S3Action& a, Subgroup h);

/// Combinatorial shadow of h: Z -> X = Z/S3.
class CoverDatum {
 public:
  CoverDatum() = default;
  /// Base and quotient maps are computed from the action.
  explicit CoverDatum(S3Action action);

  const S3Action& action() const { return action_; }
  const DecoratedGraph& total() const { return action_.graph(); }
  const DecoratedGraph& base() const { return quotient_.graph; }
  int vertex_to_base(int v) const { return quotient_.vertex_map.at(static_cast<std::size_t>(v)); }
  int edge_to_base(int e) const { return quotient_.edge_map.at(static_cast<std::size_t>(e)); }
  int half_edge_to_base(int h) const { return quotient_.half_edge_map.at(static_cast<std::size_t>(h)); }
  const QuotientGraph& quotient() const { return quotient_; }

  /// |Stab(branch)| / |kernel| for every half-edge of Z.
  const std::vector<int>& ramification() const { return ramification_; }

  /// Fiber size over a base edge (its Z-edge orbit).
  int fiber_size(int base_edge) const;
  /// Common ramification index over a base edge.
  int index_over(int base_edge) const;

 private:
  S3Action action_;
  QuotientGraph quotient_;
  std::vector<int> ramification_;
};

struct Verdict {
  bool ok = true;
  std::vector<std::string> violations;
};

Verdict check_admissible(const CoverDatum& c);
/// Admissible and every node of type 3.
bool check_star(const CoverDatum& c);

/// Local rotation data: sigma acts on the tangent line at each of its fixed
/// half-edges and smooth points by zeta^rho, rho in {1, 2}. Looks for an
/// assignment that is S3-equivariant (involutions invert rho), balanced at
/// every node (rho + rho' = 0 mod 3) and sums to 0 mod 3 on each component
/// where sigma acts faithfully. Not part of check_admissible.
struct RotationAudit {
  int orbits = 0;         ///< number of free binary choices
  bool balanced = false;  ///< some assignment satisfies every constraint
  std::vector<int> rho;   ///< per half-edge, 0 where sigma does not fix it (first witness)
};
RotationAudit rotation_audit(const S3Action& a);

/// The three clauses of condition (**) evaluated from the definitions.
struct DoubleStarClauses {
  bool faithful_on_components = false;
  int pa_total = 0;
  int pa_base = 0;
  bool genus_condition = false;  ///< pa_total == 6 pa_base - 5
  int betti_y = 0;               ///< toric rank of Y = Z/<tau>
  int betti_base = 0;            ///< toric rank of X
  bool toric_condition = false;
  bool holds() const { return faithful_on_components && genus_condition && toric_condition; }
};
DoubleStarClauses doublestar_clauses(const CoverDatum& c);
bool check_doublestar(const CoverDatum& c);

/// r2 = r3 = n4 = n5 = 0 and 2 n1 + n2 = 2 c1 + c2 on a faithful action.
bool count_conditions(const InvariantVector& v);

struct EquivalenceCheck {
  bool definition_side = false;
  bool count_side = false;
  bool agree() const { return definition_side == count_side; }
};
EquivalenceCheck doublestar_equivalence(const CoverDatum& c);
bool doublestar_equivalence_check(const CoverDatum& c);

struct TowerReport {
  DecoratedGraph y;  ///< Z / <tau>
  DecoratedGraph d;  ///< Z / <sigma>
  /// deg p: Z->Y, q: Z->D, f: Y->X, g: D->X, h: Z->X
  std::array<int, 5> degrees{2, 3, 3, 2, 6};
  /// Component genera of Y from 3 p_g(X_i) - 2 + r_i (when Y and X have equally many components).
  std::vector<int> y_genera_from_base;
  bool route_b_applicable = false;
  bool routes_agree = false;
  int pa_y = 0;
  int pa_d = 0;
  /// pa(Z) + 2 pa(X) == pa(D) + 2 pa(Y), from the isotypic decomposition.
  bool isotypic_identity = false;
};
/// Requires an admissible datum satisfying (*).
TowerReport quotient_tower(const CoverDatum& c);

/// Gluing data (gamma, m, n) at a node of Y; gamma is kept symbolic.
struct NodeGluing {
  CycPoly gamma;
  int m = 0;
  int n = 0;
  NodeType type = NodeType::T1;
};
struct NormGluingDatum {
  std::map<int, NodeGluing> nodes;
};
/// (gamma, m, n) for types 1 and 2, (gamma^3, m, n) for type 3.
NodeGluing norm_pushforward(const NormGluingDatum& d, int node);
/// "identity" or "cube".
std::string pushforward_rule(NodeType t);

}  // namespace prymlab
