#include "prymlab/rational.hpp"

#include "prymlab/errors.hpp"

namespace prymlab {

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InvalidDataError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s), mpz_class(1));
    return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw InvalidDataError("not a rational number: '" + s + "'");
  }
}

Rational Rational::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero rational");
  return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Rational result(1);
  Rational base = *this;
  unsigned e = static_cast<unsigned>(exponent);
  while (e) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PreconditionError("division by zero rational");
  value_ /= o.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace prymlab
