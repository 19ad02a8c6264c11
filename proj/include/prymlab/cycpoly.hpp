#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "prymlab/cycnum.hpp"

namespace prymlab {

using Exponents = std::vector<int>;

/// Multivariate (Laurent) polynomial over Q(zeta).
///
/// Exponents may be negative; such an element is a polynomial numerator over
/// a single monomial denominator. `is_polynomial()` tells whether it is an
/// honest polynomial. Zero coefficients are never stored.
class CycPoly {
 public:
  CycPoly() = default;
  explicit CycPoly(std::vector<std::string> variables);

  static CycPoly constant(std::vector<std::string> variables, const CycNum& c);
  static CycPoly variable(std::vector<std::string> variables, const std::string& name);
  static CycPoly monomial(std::vector<std::string> variables, Exponents exps, const CycNum& c);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponents, CycNum>& terms() const { return terms_; }
  std::size_t nvars() const { return vars_.size(); }
  /// Index of a variable name, or -1.
  int index_of(const std::string& name) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const;
  bool has_rational_coefficients() const;
  std::size_t term_count() const { return terms_.size(); }
  /// Maximum total degree (polynomials) over all terms.
  int total_degree() const;
  /// Componentwise minimum of exponents over all terms (zeros for the zero poly).
  Exponents min_exponents() const;
  CycNum coefficient(const Exponents& e) const;

  /// Multiply by the Laurent monomial x^shift.
  CycPoly shifted(const Exponents& shift) const;
  CycPoly pow(int exponent) const;
  /// Inverse of a single-term element; throws otherwise.
  CycPoly monomial_inverse() const;

  /// Evaluates at a point; variables with negative exponent need nonzero values.
  CycNum evaluate(const std::vector<CycNum>& point) const;
  /// Substitutes values for some variables (by name), keeping the others.
  CycPoly specialize(const std::map<std::string, CycNum>& values) const;
  /// Re-expresses this element over a superset of its variables.
  CycPoly embed(const std::vector<std::string>& variables) const;

  CycPoly& operator+=(const CycPoly& o);
  CycPoly& operator-=(const CycPoly& o);
  CycPoly& operator*=(const CycPoly& o);
  CycPoly& operator*=(const CycNum& c);

  friend CycPoly operator+(CycPoly p, const CycPoly& q) { return p += q; }
  friend CycPoly operator-(CycPoly p, const CycPoly& q) { return p -= q; }
  friend CycPoly operator*(CycPoly p, const CycPoly& q) { return p *= q; }
  friend CycPoly operator*(CycPoly p, const CycNum& c) { return p *= c; }
  friend CycPoly operator*(const CycNum& c, CycPoly p) { return p *= c; }
  CycPoly operator-() const;

  friend bool operator==(const CycPoly& p, const CycPoly& q) = default;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const CycNum& c);
  void require_same_vars(const CycPoly& o) const;

  std::vector<std::string> vars_;
  std::map<Exponents, CycNum> terms_;
};

std::ostream& operator<<(std::ostream& os, const CycPoly& p);

/// Returns lambda with p = lambda * q, if such a scalar exists. 0 = 1 * 0.
std::optional<CycNum> is_scalar_multiple(const CycPoly& p, const CycPoly& q);

struct RationalRoot {
  Rational value;
  int multiplicity = 0;
  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

struct RootReport {
  std::vector<RationalRoot> roots;  ///< sorted ascending
  int degree = 0;                   ///< root count with multiplicity over the closure
};

/// Rational roots of a univariate polynomial with rational coefficients,
/// by divisor search over the trailing and leading coefficients.
RootReport univariate_roots_in_Q(const CycPoly& p);

}  // namespace prymlab
