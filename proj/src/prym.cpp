#include "prymlab/prym.hpp"

#include "prymlab/catalog.hpp"
#include "prymlab/errors.hpp"

namespace prymlab {

std::string to_string(StructureKind k) {
  switch (k) {
    case StructureKind::ExtensionOfNormalizedPrym: return "EXTENSION_OF_NORMALIZED_PRYM";
    case StructureKind::ExtensionOfJacobianProduct: return "EXTENSION_OF_JACOBIAN_PRODUCT";
    case StructureKind::ProductOfEllipticPryms: return "PRODUCT_OF_ELLIPTIC_PRYMS";
    case StructureKind::ExtensionOfEllipticProduct: return "EXTENSION_OF_ELLIPTIC_PRODUCT";
  }
  return "?";
}

std::string to_string(Stratum s) {
  switch (s) {
    case Stratum::Smooth: return "SMOOTH";
    case Stratum::R1: return "R1";
    case Stratum::R2: return "R2";
    case Stratum::S0: return "S0";
    case Stratum::S1: return "S1";
    case Stratum::S2: return "S2";
  }
  return "?";
}

Stratum stratum_from_string(const std::string& s) {
  for (Stratum t : {Stratum::Smooth, Stratum::R1, Stratum::R2, Stratum::S0, Stratum::S1, Stratum::S2})
    if (to_string(t) == s) return t;
  throw PreconditionError("unknown stratum '" + s + "'");
}

std::string to_string(ImageClass c) {
  switch (c) {
    case ImageClass::J2u: return "J2_u";
    case ImageClass::J2r: return "J2_r";
    case ImageClass::E2: return "E2";
  }
  return "?";
}

namespace {

void require_star(const CoverDatum& c) {
  if (!check_star(c)) throw PreconditionError("needs an admissible cover with all nodes of type 3");
}

std::string base_label(const CoverDatum& c) {
  auto label = identify_base(c.base());
  if (!label) throw PreconditionError("base is not a stable genus 2 curve");
  return *label;
}

}  // namespace

std::pair<int, int> toric_ranks(const CoverDatum& c) {
  auto v = invariant_vector(c.action());
  int tt = 3 * v.n[1] + 2 * v.n[2] + v.n[3] - 3 * v.c1 - 2 * v.c2 - v.c3 - v.c6 + 1;
  int t = v.n[1] + v.n[2] + v.n[3] - v.c1 - v.c2 - v.c3 - v.c6 + 1;
  if (tt < 0 || t < 0)
    throw InvalidDataError("negative toric rank (" + std::to_string(tt) + ", " + std::to_string(t) + ")");
  return {tt, t};
}

int prym_dimension(const CoverDatum& c) {
  require_star(c);
  auto tower = quotient_tower(c);
  return tower.pa_y - arithmetic_genus_euler(c.base());
}

bool principality_check(const CoverDatum& c) {
  require_star(c);
  const auto& x = c.base();
  int sum_pg = 0;
  for (int g : x.genera()) sum_pg += g;
  int n3 = invariant_vector(c.action()).n[3];
  bool by_components = sum_pg == x.num_vertices() - n3 + 1;
  bool by_dimension = prym_dimension(c) == arithmetic_genus_euler(x);
  if (by_components != by_dimension)
    throw VerificationError("principality criteria disagree: component sum says " + std::to_string(by_components) +
                            ", dimension says " + std::to_string(by_dimension));
  return by_components;
}

std::pair<int, int> kernel_orders(const CoverDatum& c) {
  require_star(c);
  const auto& x = c.base();
  int toric = invariant_vector(c.action()).n[3] - x.num_vertices() + 1;
  int pol = 2 * arithmetic_genus_euler(x);
  if (toric < 0 || pol < 0) throw InvalidDataError("negative kernel exponent");
  return {toric, pol};
}

Stratum stratum(const CoverDatum& c) {
  if (!check_doublestar(c)) throw PreconditionError("stratum is defined for covers satisfying (**)");
  std::string b = base_label(c);
  if (b == "SMOOTH") return Stratum::Smooth;
  if (b == "II") return Stratum::R2;
  if (b == "III") return Stratum::R1;
  if (b == "IV") return Stratum::S2;
  if (b == "V") return Stratum::S1;
  if (b == "VI") return Stratum::S0;
  throw PreconditionError("base " + b + " carries no cover satisfying (**)");
}

ImageClass prym_image_class(Stratum s) {
  switch (s) {
    case Stratum::Smooth: return ImageClass::J2u;
    case Stratum::R1:
    case Stratum::R2: return ImageClass::J2r;
    default: return ImageClass::E2;
  }
}

int stratum_dimension(Stratum s) {
  switch (s) {
    case Stratum::Smooth: return 3;
    case Stratum::R2:
    case Stratum::S2: return 2;
    case Stratum::R1:
    case Stratum::S1: return 1;
    case Stratum::S0: return 0;
  }
  return -1;
}

StructureDescriptor structure_descriptor(const CoverDatum& c) {
  StructureDescriptor d;
  d.finite_kernel_exponent = kernel_orders(c).first;
  std::string b = base_label(c);
  if (b == "IV")
    d.kind = StructureKind::ProductOfEllipticPryms;
  else if (b == "V")
    d.kind = StructureKind::ExtensionOfJacobianProduct;
  else if (b == "VI")
    d.kind = StructureKind::ExtensionOfEllipticProduct;
  else
    d.kind = StructureKind::ExtensionOfNormalizedPrym;
  bool product = d.kind == StructureKind::ProductOfEllipticPryms;
  if (product != (d.finite_kernel_exponent == 0) && b != "SMOOTH")
    throw VerificationError("structure " + to_string(d.kind) + " inconsistent with kernel exponent " +
                            std::to_string(d.finite_kernel_exponent));
  return d;
}

PrymReport prym_report(const CoverDatum& c) {
  PrymReport r;
  std::tie(r.dimT_tilde, r.dimT) = toric_ranks(c);
  r.dimP = prym_dimension(c);
  std::tie(r.toric_kernel_exponent, r.polarization_kernel_exponent) = kernel_orders(c);
  r.is_3x_principal = principality_check(c);
  r.structure = structure_descriptor(c);
  r.stratum = stratum(c);
  return r;
}

nlohmann::ordered_json to_json(const PrymReport& r) {
  nlohmann::ordered_json j;
  j["dimP"] = r.dimP;
  j["dimT_tilde"] = r.dimT_tilde;
  j["dimT"] = r.dimT;
  j["toric_kernel_exponent"] = r.toric_kernel_exponent;
  j["polarization_kernel_exponent"] = r.polarization_kernel_exponent;
  j["is_3x_principal"] = r.is_3x_principal;
  j["structure"] = {{"kind", to_string(r.structure.kind)},
                    {"finite_kernel_exponent", r.structure.finite_kernel_exponent}};
  j["stratum"] = to_string(r.stratum);
  j["image_class"] = to_string(prym_image_class(r.stratum));
  return j;
}

}  // namespace prymlab
