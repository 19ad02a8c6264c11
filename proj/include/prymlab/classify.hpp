#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "prymlab/candidates.hpp"
#include "prymlab/catalog.hpp"
#include "prymlab/facts.hpp"
#include "prymlab/prym.hpp"

namespace prymlab {

/// Components over one base vertex.
struct OrbitGenus {
  int base_vertex = 0;
  int components = 0;  ///< orbit size s_j
  int genus = 0;       ///< geometric genus of each component
  int stabilizer_order = 0;
  friend auto operator<=>(const OrbitGenus&, const OrbitGenus&) = default;
};

/// Nodes over one base node.
struct NodeOrbit {
  int base_edge = 0;
  int index = 0;  ///< ramification index r
  int fiber = 0;  ///< delta = 6 / r
  friend auto operator<=>(const NodeOrbit&, const NodeOrbit&) = default;
};

struct CoverVariant {
  CoverDatum datum;
  Certificate certificate;
  bool rotation_balanced = false;
};

struct FamilyRecord {
  std::string base;
  std::string label;
  CoverDatum datum;          ///< representative
  int moduli_dimension = -1;  ///< -1 when the label has no recorded dimension
  std::vector<OrbitGenus> genera_profile;
  std::vector<NodeOrbit> nodes;
  std::optional<PrymReport> prym;  ///< empty when (*) fails or the base has no stratum
  std::vector<CoverVariant> variants;  ///< inequivalent covers with the same numerical data
  int representative = 0;              ///< index into variants

  int total_components() const;
  int total_nodes() const;
};

struct RejectionRecord {
  std::string reason;
  std::string fact;  ///< fact entry id, empty for combinatorial rejections
  int count = 0;
};

struct BaseEnumeration {
  std::string base;
  int blueprints = 0;
  int built = 0;
  int doublestar = 0;   ///< built candidates satisfying (**)
  int equivalence_disagreements = 0;
  int distinct = 0;     ///< surviving covers up to equivalence
  std::vector<FamilyRecord> families;
  std::vector<RejectionRecord> rejections;  ///< sorted by reason
};

struct EnumerationOptions {
  CandidateSpace space{};   ///< classification space by default
  bool apply_axioms = true;  ///< use the axiom entries of the fact table
};

BaseEnumeration enumerate_covers(const BaseType& b, const EnumerationOptions& opts = {});

/// Recorded moduli dimension for a family label; throws PreconditionError for unknown labels.
int family_dimension(const std::string& label);
int family_dimension(const FamilyRecord& f);

struct ClassificationReport {
  std::vector<BaseEnumeration> bases;  ///< catalog order
  int singular_family_count = 0;
  std::map<Stratum, int> strata_dimensions;
  std::vector<std::string> closure_facts;
  bool closure_consistent = false;  ///< closure strata map into E2 and E2 strata are exactly the S-strata
};

ClassificationReport classification_report(const EnumerationOptions& opts = {});

nlohmann::ordered_json to_json(const FamilyRecord& f, bool with_datum = true);
nlohmann::ordered_json to_json(const BaseEnumeration& e, bool with_datum = true);
nlohmann::ordered_json to_json(const ClassificationReport& r);
std::string to_text(const BaseEnumeration& e);
std::string to_text(const ClassificationReport& r);

}  // namespace prymlab
