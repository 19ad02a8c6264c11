#include "prymlab/facts.hpp"

#include <algorithm>

#include "prymlab/errors.hpp"

namespace prymlab {

ExistenceFactTable::ExistenceFactTable() {
  auto structural = [&](std::string id, std::string statement, std::string citation) {
    entries_.push_back({std::move(id), FactKind::Structural, std::move(statement), std::move(citation), ""});
  };
  auto axiom = [&](std::string id, std::string statement, std::string citation, std::string audit) {
    entries_.push_back({std::move(id), FactKind::Axiom, std::move(statement), std::move(citation), std::move(audit)});
  };
  structural("c2-parity", "a connected double cover has an even number of branch points",
             "Riemann existence: product of the local monodromies lies in the commutator subgroup, trivial for Z/2");
  structural("c2-rational", "a rational curve has no connected unramified double cover",
             "Riemann existence: the fundamental group of P^1 is trivial");
  structural("c3-single", "a connected cyclic triple cover is never branched over exactly one point",
             "Riemann existence for Z/3; special case: no genus 2 curve with an order 3 automorphism has elliptic quotient");
  structural("c3-rational", "a rational curve has no connected unramified triple cover",
             "Riemann existence: the fundamental group of P^1 is trivial");
  structural("s3-parity", "an S3-cover has an even number of index 2 branch points",
             "Riemann existence: the sign of the product of local monodromies is +1");
  structural("s3-rational",
             "an S3-cover of a rational curve needs at least two index 2 and at least three branch points",
             "Riemann existence: rotations alone generate a proper subgroup; two involutions with product 1 coincide");
  structural("s3-elliptic", "an elliptic curve has no connected unramified S3-cover",
             "the fundamental group of an elliptic curve is abelian and S3 is not; equivalently no elliptic curve "
             "carries a free S3-action");
  axiom("sep-six",
        "over a base with two components meeting in one point, at most three components lie over each side",
        "source classification, bound on the number of components over each side",
        "for base IV the excluded candidates also fail s3-elliptic; for base V the excluded candidates admit no "
        "balanced rotation data at their type 3 nodes");
  axiom("iv-three-three", "over base IV, three components over each side does not occur",
        "source classification, case s1 = s2 = 3 over two elliptic curves",
        "not confirmed: the candidate is an unramified S3-cover with type 1 nodes, passes every combinatorial "
        "check including the toric rank equality, and needs no rotation balancing");
  axiom("vii-two-two", "over base VII, two components over each side does not occur",
        "source classification, case s1 = s2 = 2 over two rational curves meeting in three points",
        "confirmed: no balanced rotation data exists at the type 3 nodes");
}

const FactEntry& ExistenceFactTable::entry(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return e;
  throw PreconditionError("unknown fact entry '" + id + "'");
}

const FactEntry* ExistenceFactTable::component_obstruction(const ComponentProfile& p) const {
  int a = p.involution_points, b = p.rotation_points, g = p.base_genus;
  switch (p.group_order) {
    case 1:
      return nullptr;
    case 2:
      if (a % 2 != 0) return &entry("c2-parity");
      if (g == 0 && a == 0) return &entry("c2-rational");
      return nullptr;
    case 3:
      if (b == 1) return &entry("c3-single");
      if (g == 0 && b == 0) return &entry("c3-rational");
      return nullptr;
    case 6:
      if (a % 2 != 0) return &entry("s3-parity");
      if (g == 0 && (a < 2 || a + b < 3)) return &entry("s3-rational");
      if (g == 1 && a == 0 && b == 0) return &entry("s3-elliptic");
      return nullptr;
    default:
      throw PreconditionError("group order must divide 6");
  }
}

FactVerdict ExistenceFactTable::check(const std::string& base_label, const std::vector<ComponentProfile>& profiles,
                                      const std::vector<int>& orbit_counts) const {
  for (std::size_t j = 0; j < profiles.size(); ++j)
    if (const FactEntry* e = component_obstruction(profiles[j])) return {e, static_cast<int>(j)};
  bool separating = base_label == "IV" || base_label == "V" || base_label == "VI";
  if (separating)
    for (std::size_t j = 0; j < orbit_counts.size(); ++j)
      if (orbit_counts[j] > 3) return {&entry("sep-six"), static_cast<int>(j)};
  auto both = [&](int n) { return orbit_counts.size() == 2 && orbit_counts[0] == n && orbit_counts[1] == n; };
  if (base_label == "IV" && both(3)) return {&entry("iv-three-three"), -1};
  if (base_label == "VII" && both(2)) return {&entry("vii-two-two"), -1};
  return {};
}

const ExistenceFactTable& existence_facts() {
  static const ExistenceFactTable table;
  return table;
}

}  // namespace prymlab
