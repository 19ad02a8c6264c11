#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "prymlab/coordmap.hpp"
#include "prymlab/cycpoly.hpp"

namespace prymlab {

enum class FamilyName { QuarticG3, HyperellipticG3, Genus2Order3 };
std::string to_string(FamilyName f);
FamilyName family_from_string(const std::string& s);  ///< QUARTIC_G3, HYPERELLIPTIC_G3, GENUS2_ORDER3

enum class Ambient { ProjectivePlane, AffineHyperelliptic };

struct Sample {
  Rational a;
  Rational b;  ///< used by the quartic only
};

/// Exponent k in tau: y -> -a^2 x^k y that makes the hyperelliptic genus 3
/// family invariant (certified by certify_tau_exponent).
inline constexpr int kHyperellipticTauExponent = -4;
/// Exponent as printed in the source.
inline constexpr int kPrintedTauExponent = 4;
/// Number of fixed points of tau on the quartic as printed in the source.
inline constexpr int kPrintedQuarticTauFixedPoints = 8;

struct CurveFamily {
  FamilyName name = FamilyName::QuarticG3;
  Ambient ambient = Ambient::ProjectivePlane;
  Sample sample;
  int genus = 0;
  std::vector<std::string> coordinates;
  CycPoly equation;   ///< specialized at the sample
  CycPoly branch;     ///< f(x) with y^2 = f(x) (hyperelliptic models only)
  CoordMap sigma;
  std::optional<CoordMap> tau;
};

/// The defining equation with the parameters a (and b) kept as variables.
CycPoly parametric_equation(FamilyName f);

bool sample_legal(FamilyName f, const Sample& s);
/// Throws PreconditionError on an excluded parameter value.
CurveFamily make_family(FamilyName f, const Sample& s, int tau_exponent = kHyperellipticTauExponent);

struct RelationCheck {
  std::string relation;  ///< "sigma^3", "tau^2", "(tau*sigma)^2"
  bool holds = false;
};
/// sigma^3, tau^2, (tau sigma)^2 are the identity: up to a common scalar on
/// the projective plane, exactly on the affine model.
std::vector<RelationCheck> verify_group_relations(const CurveFamily& c);

struct InvarianceCertificate {
  std::string map;
  bool invariant = false;
  Exponents clearing;  ///< monomial clearing the denominators of F(g)
  Exponents monomial;  ///< F(g) = scalar * x^monomial * F as Laurent polynomials
  CycNum scalar;
  std::string clearing_text;
  std::string monomial_text;
};
InvarianceCertificate verify_invariance(const CurveFamily& c, const CoordMap& g, const std::string& name);

struct TauExponentSearch {
  std::vector<int> passing;  ///< candidates k in [-4, 4] passing invariance
  bool printed_passes = false;
};
TauExponentSearch certify_tau_exponent(const Sample& s);

struct FixedPointCount {
  int count = 0;                     ///< over the algebraic closure, with multiplicity
  std::vector<std::string> witnesses;  ///< the fixed points with rational (or Q(zeta)) coordinates
};
/// Requires g to leave the curve invariant; throws VerificationError otherwise
/// and PreconditionError on a degenerate sample or an unsupported map shape.
FixedPointCount fixed_point_count(const CurveFamily& c, const CoordMap& g);

/// g' with 2g - 2 = order (2g' - 2) + f (order - 1); throws InvalidDataError
/// if g' is not a non-negative integer.
int hurwitz_quotient_genus(int genus, int order, int fixed_points);

using Triple = std::array<int, 3>;
struct DegreeCount {
  int subsets = 0;
  int classes = 0;
  std::vector<std::pair<Triple, Triple>> pairs;  ///< (triple containing w1, complement)
};
/// Pairs each 3-subset of the 6 Weierstrass points (labels 1..6) with its complement.
DegreeCount prym_degree_count(const std::array<int, 6>& labels = {1, 2, 3, 4, 5, 6});

struct WeierstrassModel {
  std::vector<std::string> w;           ///< 6 points of the genus 2 curve
  std::vector<std::string> q;           ///< 8 points of the genus 3 curve
  std::vector<std::string> p;           ///< 4 branch points on the elliptic quotient
  std::map<std::string, std::string> image;  ///< q_i -> p_j
};
WeierstrassModel standard_weierstrass_model();

/// All multisets of `parts` sizes from `allowed` summing to `points`, sorted descending.
std::vector<std::vector<int>> fiber_compositions(int points, int parts, const std::vector<int>& allowed);
/// Fiber sizes of the assignment, sorted descending; throws InvalidDataError
/// unless it is the unique feasible profile {3,3,1,1}.
std::vector<int> weierstrass_fiber_profile(const WeierstrassModel& m);
/// Pairs of points within the two fibers of size 3.
std::vector<std::pair<std::string, std::string>> sigma_weierstrass_points(const WeierstrassModel& m);

/// Full check of one family over samples, as JSON certificates. Sets ok to
/// false on any relation, invariance or Hurwitz failure.
nlohmann::ordered_json family_report(FamilyName f, const std::vector<Sample>& samples, bool& ok);

}  // namespace prymlab
