#pragma once

#include <ostream>
#include <string>

#include "prymlab/rational.hpp"

namespace prymlab {

/// Element a + b*zeta of Q(zeta), zeta a primitive third root of unity
/// (zeta^2 = -1 - zeta).
class CycNum {
 public:
  CycNum() = default;
  CycNum(Rational a) : a_(std::move(a)) {}  // NOLINT: rationals embed
  CycNum(long a) : a_(a) {}                 // NOLINT
  CycNum(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static CycNum zeta() { return CycNum(Rational(0), Rational(1)); }
  /// zeta^k for any integer k.
  static CycNum zeta_pow(int k);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  /// Galois conjugate a + b*zeta^2.
  CycNum conj() const;
  /// a^2 - ab + b^2.
  Rational norm() const;
  CycNum inverse() const;
  CycNum pow(int exponent) const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);

  friend CycNum operator+(CycNum x, const CycNum& y) { return x += y; }
  friend CycNum operator-(CycNum x, const CycNum& y) { return x -= y; }
  friend CycNum operator*(CycNum x, const CycNum& y) { return x *= y; }
  friend CycNum operator/(CycNum x, const CycNum& y) { return x /= y; }
  CycNum operator-() const { return CycNum(-a_, -b_); }

  friend bool operator==(const CycNum& x, const CycNum& y) = default;

  /// Human-readable form, e.g. "2", "-zeta", "1/2 + 3*zeta".
  std::string to_string() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

std::ostream& operator<<(std::ostream& os, const CycNum& c);

}  // namespace prymlab
