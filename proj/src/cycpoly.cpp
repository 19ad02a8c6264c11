#include "prymlab/cycpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "prymlab/errors.hpp"

namespace prymlab {

CycPoly::CycPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

CycPoly CycPoly::constant(std::vector<std::string> variables, const CycNum& c) {
  CycPoly p(std::move(variables));
  p.add_term(Exponents(p.nvars(), 0), c);
  return p;
}

CycPoly CycPoly::variable(std::vector<std::string> variables, const std::string& name) {
  CycPoly p(std::move(variables));
  int i = p.index_of(name);
  if (i < 0) throw PreconditionError("unknown variable '" + name + "'");
  Exponents e(p.nvars(), 0);
  e[static_cast<std::size_t>(i)] = 1;
  p.add_term(e, CycNum(1));
  return p;
}

CycPoly CycPoly::monomial(std::vector<std::string> variables, Exponents exps, const CycNum& c) {
  CycPoly p(std::move(variables));
  if (exps.size() != p.nvars()) throw PreconditionError("exponent vector has wrong length");
  p.add_term(exps, c);
  return p;
}

int CycPoly::index_of(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  return it == vars_.end() ? -1 : static_cast<int>(it - vars_.begin());
}

bool CycPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) return false;
  return true;
}

bool CycPoly::has_rational_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_rational(); });
}

int CycPoly::total_degree() const {
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

Exponents CycPoly::min_exponents() const {
  Exponents m(nvars(), 0);
  bool first = true;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

CycNum CycPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CycNum(0) : it->second;
}

void CycPoly::add_term(const Exponents& e, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void CycPoly::require_same_vars(const CycPoly& o) const {
  if (vars_ != o.vars_) throw PreconditionError("polynomials over different variable lists");
}

CycPoly CycPoly::shifted(const Exponents& shift) const {
  if (shift.size() != nvars()) throw PreconditionError("shift has wrong length");
  CycPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += shift[i];
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

CycPoly CycPoly::monomial_inverse() const {
  if (terms_.size() != 1) throw PreconditionError("only single-term elements can be inverted");
  const auto& [e, c] = *terms_.begin();
  Exponents f = e;
  for (int& x : f) x = -x;
  return monomial(vars_, f, c.inverse());
}

CycPoly CycPoly::pow(int exponent) const {
  if (exponent < 0) return monomial_inverse().pow(-exponent);
  CycPoly result = constant(vars_, CycNum(1));
  CycPoly base = *this;
  unsigned e = static_cast<unsigned>(exponent);
  while (e) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return result;
}

CycNum CycPoly::evaluate(const std::vector<CycNum>& point) const {
  if (point.size() != nvars()) throw PreconditionError("evaluation point has wrong length");
  CycNum total(0);
  for (const auto& [e, c] : terms_) {
    CycNum t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= point[i].pow(e[i]);
    total += t;
  }
  return total;
}

CycPoly CycPoly::specialize(const std::map<std::string, CycNum>& values) const {
  std::vector<std::string> keep;
  std::vector<int> keep_idx;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!values.count(vars_[i])) {
      keep.push_back(vars_[i]);
      keep_idx.push_back(static_cast<int>(i));
    }
  }
  CycPoly r(keep);
  for (const auto& [e, c] : terms_) {
    CycNum t = c;
    Exponents f;
    f.reserve(keep.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto it = values.find(vars_[i]);
      if (it != values.end()) {
        if (e[i] != 0) t *= it->second.pow(e[i]);
      }
    }
    for (int k : keep_idx) f.push_back(e[static_cast<std::size_t>(k)]);
    r.add_term(f, t);
  }
  return r;
}

CycPoly CycPoly::embed(const std::vector<std::string>& variables) const {
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(variables.begin(), variables.end(), vars_[i]);
    if (it == variables.end())
      throw PreconditionError("variable '" + vars_[i] + "' missing from target list");
    pos[i] = static_cast<std::size_t>(it - variables.begin());
  }
  CycPoly r(variables);
  for (const auto& [e, c] : terms_) {
    Exponents f(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[pos[i]] = e[i];
    r.add_term(f, c);
  }
  return r;
}

CycPoly& CycPoly::operator+=(const CycPoly& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CycPoly& CycPoly::operator-=(const CycPoly& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CycPoly& CycPoly::operator*=(const CycPoly& o) {
  require_same_vars(o);
  CycPoly r(vars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exponents f = e1;
      for (std::size_t i = 0; i < f.size(); ++i) f[i] += e2[i];
      r.add_term(f, c1 * c2);
    }
  }
  terms_ = std::move(r.terms_);
  return *this;
}

CycPoly& CycPoly::operator*=(const CycNum& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

CycPoly CycPoly::operator-() const {
  CycPoly r = *this;
  return r *= CycNum(-1);
}

namespace {

std::string monomial_string(const std::vector<std::string>& vars, const Exponents& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

// Terms are printed by descending total degree, then descending exponent vector.
std::string CycPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, CycNum>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    int dx = std::accumulate(x.first.begin(), x.first.end(), 0);
    int dy = std::accumulate(y.first.begin(), y.first.end(), 0);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : ordered) {
    std::string mono = monomial_string(vars_, e);
    std::string coef;
    bool negative = false;
    if (c.is_rational()) {
      negative = c.a().sign() < 0;
      Rational mag = negative ? -c.a() : c.a();
      if (!(mag == Rational(1) && !mono.empty())) coef = mag.to_string();
    } else {
      coef = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    os << coef;
    if (!coef.empty() && !mono.empty()) os << "*";
    os << mono;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycPoly& p) { return os << p.to_string(); }

std::optional<CycNum> is_scalar_multiple(const CycPoly& p, const CycPoly& q) {
  if (p.is_zero() && q.is_zero()) return CycNum(1);
  if (p.is_zero() || q.is_zero()) return std::nullopt;
  if (p.term_count() != q.term_count()) return std::nullopt;
  const auto& [e0, c0] = *q.terms().begin();
  auto it = p.terms().find(e0);
  if (it == p.terms().end()) return std::nullopt;
  CycNum lambda = it->second / c0;
  for (const auto& [e, c] : q.terms()) {
    auto jt = p.terms().find(e);
    if (jt == p.terms().end() || !(jt->second == lambda * c)) return std::nullopt;
  }
  return lambda;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Dense coefficients, index = exponent.
Rational horner(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Rational> synthetic_divide(const std::vector<Rational>& coeffs, const Rational& r) {
  std::vector<Rational> out(coeffs.size() - 1);
  Rational carry(0);
  for (std::size_t i = coeffs.size() - 1; i > 0; --i) {
    carry = coeffs[i] + carry * r;
    out[i - 1] = carry;
  }
  return out;
}

}  // namespace

RootReport univariate_roots_in_Q(const CycPoly& p) {
  if (p.is_zero()) throw PreconditionError("roots of the zero polynomial");
  if (p.nvars() > 1) throw PreconditionError("root search needs a univariate polynomial");
  if (!p.has_rational_coefficients()) throw PreconditionError("root search needs rational coefficients");
  if (!p.is_polynomial()) throw PreconditionError("root search needs a polynomial");

  RootReport report;
  if (p.nvars() == 0) return report;

  int deg = 0;
  for (const auto& [e, c] : p.terms()) deg = std::max(deg, e[0]);
  std::vector<Rational> coeffs(static_cast<std::size_t>(deg) + 1, Rational(0));
  for (const auto& [e, c] : p.terms()) coeffs[static_cast<std::size_t>(e[0])] = c.a();
  report.degree = deg;

  int zero_mult = 0;
  while (coeffs.front().is_zero()) {
    coeffs.erase(coeffs.begin());
    ++zero_mult;
  }

  // scale to integer coefficients
  mpz_class lcm_den = 1;
  for (const auto& c : coeffs) lcm_den = lcm(lcm_den, c.denominator());
  for (auto& c : coeffs) c *= Rational(lcm_den, mpz_class(1));

  if (coeffs.size() > 1) {
    std::vector<Rational> work = coeffs;
    auto nums = positive_divisors(coeffs.front().numerator());
    auto dens = positive_divisors(coeffs.back().numerator());
    std::vector<Rational> candidates;
    for (const auto& d : nums)
      for (const auto& e : dens) {
        candidates.emplace_back(d, e);
        candidates.emplace_back(-d, e);
      }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
      int mult = 0;
      while (work.size() > 1 && horner(work, r).is_zero()) {
        work = synthetic_divide(work, r);
        ++mult;
      }
      if (mult > 0) report.roots.push_back({r, mult});
    }
  }
  if (zero_mult > 0) report.roots.push_back({Rational(0), zero_mult});
  std::sort(report.roots.begin(), report.roots.end(),
            [](const RationalRoot& x, const RationalRoot& y) { return x.value < y.value; });
  return report;
}

}  // namespace prymlab
