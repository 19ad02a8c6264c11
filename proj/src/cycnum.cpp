#include "prymlab/cycnum.hpp"

#include "prymlab/errors.hpp"

namespace prymlab {

CycNum CycNum::zeta_pow(int k) {
  switch (((k % 3) + 3) % 3) {
    case 0:
      return CycNum(1);
    case 1:
      return zeta();
    default:
      return CycNum(Rational(-1), Rational(-1));
  }
}

CycNum CycNum::conj() const { return CycNum(a_ - b_, -b_); }

Rational CycNum::norm() const { return a_ * a_ - a_ * b_ + b_ * b_; }

CycNum CycNum::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero in Q(zeta)");
  Rational n = norm();
  CycNum c = conj();
  return CycNum(c.a_ / n, c.b_ / n);
}

CycNum CycNum::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CycNum result(1);
  CycNum base = *this;
  unsigned e = static_cast<unsigned>(exponent);
  while (e) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

// (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2,  z^2 = -1 - z
CycNum& CycNum::operator*=(const CycNum& o) {
  Rational bd = b_ * o.b_;
  Rational na = a_ * o.a_ - bd;
  Rational nb = a_ * o.b_ + b_ * o.a_ - bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

CycNum& CycNum::operator/=(const CycNum& o) { return *this *= o.inverse(); }

std::string CycNum::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::string zeta_part;
  if (b_ == Rational(1)) {
    zeta_part = "zeta";
  } else if (b_ == Rational(-1)) {
    zeta_part = "-zeta";
  } else {
    zeta_part = b_.to_string() + "*zeta";
  }
  if (a_.is_zero()) return zeta_part;
  if (zeta_part.front() == '-') return a_.to_string() + " - " + zeta_part.substr(1);
  return a_.to_string() + " + " + zeta_part;
}

std::ostream& operator<<(std::ostream& os, const CycNum& c) { return os << c.to_string(); }

}  // namespace prymlab
