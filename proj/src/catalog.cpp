#include "prymlab/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "prymlab/canon.hpp"
#include "prymlab/errors.hpp"

namespace prymlab {

const std::vector<BaseType>& stable_genus2_catalog() {
  static const std::vector<BaseType> catalog{
      {"SMOOTH", DecoratedGraph({2})},
      {"II", DecoratedGraph({1}, {{0, 0}})},
      {"III", DecoratedGraph({0}, {{0, 0}, {0, 0}})},
      {"IV", DecoratedGraph({1, 1}, {{0, 1}})},
      {"V", DecoratedGraph({0, 1}, {{0, 0}, {0, 1}})},
      {"VI", DecoratedGraph({0, 0}, {{0, 0}, {1, 1}, {0, 1}})},
      {"VII", DecoratedGraph({0, 0}, {{0, 1}, {0, 1}, {0, 1}})},
  };
  return catalog;
}

const BaseType& base_type(const std::string& label) {
  std::string up = label;
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (const auto& b : stable_genus2_catalog())
    if (b.label == up) return b;
  throw PreconditionError("unknown base type '" + label + "'");
}

std::optional<std::string> identify_base(const DecoratedGraph& g) {
  auto cert = graph_certificate(g);
  for (const auto& b : stable_genus2_catalog())
    if (graph_certificate(b.graph) == cert) return b.label;
  return std::nullopt;
}

}  // namespace prymlab
