#pragma once

#include <string>
#include <utility>

#include "json.hpp"
#include "prymlab/covers.hpp"

namespace prymlab {

enum class StructureKind {
  ExtensionOfNormalizedPrym,
  ExtensionOfJacobianProduct,
  ProductOfEllipticPryms,
  ExtensionOfEllipticProduct,
};
std::string to_string(StructureKind k);

enum class Stratum { Smooth, R1, R2, S0, S1, S2 };
std::string to_string(Stratum s);
Stratum stratum_from_string(const std::string& s);

enum class ImageClass { J2u, J2r, E2 };
std::string to_string(ImageClass c);

struct StructureDescriptor {
  StructureKind kind = StructureKind::ExtensionOfNormalizedPrym;
  int finite_kernel_exponent = 0;  ///< P is an extension by (Z/3)^e
};

struct PrymReport {
  int dimP = 0;
  int dimT_tilde = 0;
  int dimT = 0;
  int toric_kernel_exponent = 0;
  int polarization_kernel_exponent = 0;  ///< |Ker rho| = 3^e
  bool is_3x_principal = false;
  StructureDescriptor structure;
  Stratum stratum = Stratum::Smooth;
};

/// (dim T~, dim T) from the invariant vector; throws InvalidDataError on a negative value.
std::pair<int, int> toric_ranks(const CoverDatum& c);

/// pa(Y) - pa(X); requires condition (*).
int prym_dimension(const CoverDatum& c);

/// Sum of p_g(X_i) == s - n3 + 1, checked against dim P == pa(X). Throws
/// VerificationError if the two criteria disagree. Requires (*).
bool principality_check(const CoverDatum& c);

/// (n3 - s + 1, 2 pa(X)) on the base; requires (*).
std::pair<int, int> kernel_orders(const CoverDatum& c);

/// Requires (**); keyed by the base type. Base VII has no stratum.
Stratum stratum(const CoverDatum& c);
ImageClass prym_image_class(Stratum s);
int stratum_dimension(Stratum s);

StructureDescriptor structure_descriptor(const CoverDatum& c);
PrymReport prym_report(const CoverDatum& c);

nlohmann::ordered_json to_json(const PrymReport& r);

}  // namespace prymlab
