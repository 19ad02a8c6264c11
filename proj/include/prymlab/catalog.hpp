#pragma once

#include <optional>
#include <string>
#include <vector>

#include "prymlab/graph.hpp"

namespace prymlab {

/// A topological type of stable genus-2 curve.
struct BaseType {
  std::string label;  ///< SMOOTH, II, ..., VII
  DecoratedGraph graph;
};

/// The seven stable genus-2 types, in the order SMOOTH, II, ..., VII.
const std::vector<BaseType>& stable_genus2_catalog();

/// Lookup by label (case-insensitive for "smooth"); throws PreconditionError.
const BaseType& base_type(const std::string& label);

/// Label of the catalog entry isomorphic to g, if any.
std::optional<std::string> identify_base(const DecoratedGraph& g);

}  // namespace prymlab
