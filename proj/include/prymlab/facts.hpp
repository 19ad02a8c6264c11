#pragma once

#include <string>
#include <vector>

#include "prymlab/candidates.hpp"

namespace prymlab {

enum class FactKind {
  Structural,  ///< consequence of Riemann existence; checked by brute-force monodromy in the tests
  Axiom,       ///< taken from the source classification as stated
};

struct FactEntry {
  std::string id;
  FactKind kind = FactKind::Structural;
  std::string statement;
  std::string citation;
  std::string audit;  ///< what the independent checks in this library say about it (axioms only)
};

/// Result of testing a candidate against the table. `entry` is null when no
/// entry applies.
struct FactVerdict {
  const FactEntry* entry = nullptr;
  int base_vertex = -1;  ///< offending base component, -1 for whole-cover entries
  explicit operator bool() const { return entry != nullptr; }
};

class ExistenceFactTable {
 public:
  ExistenceFactTable();

  const std::vector<FactEntry>& entries() const { return entries_; }
  const FactEntry& entry(const std::string& id) const;

  /// Whether a connected Galois cover with group H/K of the given order and
  /// branch data exists over a smooth curve of genus base_genus. Returns the
  /// entry ruling it out, or null.
  const FactEntry* component_obstruction(const ComponentProfile& p) const;

  /// First entry that rules out the candidate, structural entries first.
  /// `orbit_counts` is the number of components over each base vertex.
  FactVerdict check(const std::string& base_label, const std::vector<ComponentProfile>& profiles,
                    const std::vector<int>& orbit_counts) const;

 private:
  std::vector<FactEntry> entries_;
};

const ExistenceFactTable& existence_facts();

}  // namespace prymlab
