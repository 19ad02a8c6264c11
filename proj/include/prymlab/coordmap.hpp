#pragma once

#include <map>
#include <string>
#include <vector>

#include "prymlab/cycpoly.hpp"

namespace prymlab {

/// Coordinate substitution: each source variable is sent to a Laurent
/// element (polynomial numerator over a monomial) in the target variables.
class CoordMap {
 public:
  CoordMap() = default;
  /// images[i] is the image of sources[i]; all images share one variable list.
  CoordMap(std::vector<std::string> sources, std::vector<CycPoly> images);

  static CoordMap identity(const std::vector<std::string>& vars);

  const std::vector<std::string>& sources() const { return sources_; }
  const std::vector<std::string>& targets() const { return targets_; }
  const std::vector<CycPoly>& images() const { return images_; }
  /// Image of a source variable; throws if absent.
  const CycPoly& image_of(const std::string& var) const;

  friend bool operator==(const CoordMap&, const CoordMap&) = default;

  std::string to_string() const;

 private:
  std::vector<std::string> sources_;
  std::vector<std::string> targets_;
  std::vector<CycPoly> images_;
};

struct Substitution {
  CycPoly numerator;    ///< polynomial, = image * clearing
  Exponents clearing;   ///< exponents of the clearing monomial over the map's targets
  friend bool operator==(const Substitution&, const Substitution&) = default;
};

/// p with each variable replaced by its image, kept as a Laurent element.
CycPoly apply_map(const CycPoly& p, const CoordMap& m);

/// p with each variable replaced by its image, denominators cleared by the
/// least monomial making the result polynomial.
Substitution substitute(const CycPoly& p, const CoordMap& m);

/// (first then second): substitute(substitute(p, first), second) agrees with
/// substitute(p, compose(first, second)) up to monomial clearing.
CoordMap compose(const CoordMap& first, const CoordMap& second);

/// Smallest k in [1, max_order] with m^k acting on every variable as a
/// scalar multiple of itself; 0 if none.
int projective_order(const CoordMap& m, int max_order = 12);

/// Smallest k in [1, max_order] with m^k the identity; 0 if none.
int exact_order(const CoordMap& m, int max_order = 12);

}  // namespace prymlab
