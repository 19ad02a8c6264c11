#include "prymlab/families.hpp"

#include <algorithm>
#include <set>

#include "prymlab/errors.hpp"

namespace prymlab {

std::string to_string(FamilyName f) {
  switch (f) {
    case FamilyName::QuarticG3: return "QUARTIC_G3";
    case FamilyName::HyperellipticG3: return "HYPERELLIPTIC_G3";
    case FamilyName::Genus2Order3: return "GENUS2_ORDER3";
  }
  return "?";
}

FamilyName family_from_string(const std::string& s) {
  for (auto f : {FamilyName::QuarticG3, FamilyName::HyperellipticG3, FamilyName::Genus2Order3})
    if (to_string(f) == s) return f;
  throw PreconditionError("unknown family '" + s + "'");
}

namespace {

using Vars = std::vector<std::string>;

const Vars kPlane = {"z0", "z1", "z2"};
const Vars kAffine = {"x", "y"};

CycPoly var(const Vars& vs, const std::string& n) { return CycPoly::variable(vs, n); }
CycPoly cst(const Vars& vs, const CycNum& c) { return CycPoly::constant(vs, c); }

// x^k as a Laurent monomial over vs
CycPoly power_of(const Vars& vs, const std::string& n, int k, const CycNum& c = CycNum(1)) {
  Exponents e(vs.size(), 0);
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i] == n) e[i] = k;
  return CycPoly::monomial(vs, e, c);
}

CycPoly branch_polynomial(FamilyName f, const Vars& vs) {
  auto x = var(vs, "x");
  auto a = var(vs, "a");
  auto one = cst(vs, 1);
  if (f == FamilyName::HyperellipticG3) return x * (x.pow(3) - one) * (x.pow(3) - a.pow(3));
  return (x.pow(3) - a.pow(3)) * (x.pow(3) - power_of(vs, "a", -3));
}

std::map<std::string, CycNum> values(const Sample& s, bool with_b) {
  std::map<std::string, CycNum> m{{"a", CycNum(s.a)}};
  if (with_b) m["b"] = CycNum(s.b);
  return m;
}

std::string exps_text(const Vars& vs, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vs[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

// images equal lambda * variable for one common lambda (projective) or lambda = 1 (affine)
bool acts_as_identity(const CoordMap& m, bool projective) {
  std::optional<CycNum> common;
  for (std::size_t i = 0; i < m.sources().size(); ++i) {
    auto v = CycPoly::variable(m.targets(), m.sources()[i]);
    auto l = is_scalar_multiple(m.images()[i], v);
    if (!l || l->is_zero()) return false;
    if (common && *common != *l) return false;
    common = *l;
  }
  return common && (projective || *common == CycNum(1));
}

}  // namespace

CycPoly parametric_equation(FamilyName f) {
  if (f == FamilyName::QuarticG3) {
    Vars vs = {"z0", "z1", "z2", "a", "b"};
    auto z0 = var(vs, "z0"), z1 = var(vs, "z1"), z2 = var(vs, "z2");
    return z0.pow(3) * z2 + z1.pow(3) * z2 + z0.pow(2) * z1.pow(2) + var(vs, "a") * z0 * z1 * z2.pow(2) +
           var(vs, "b") * z2.pow(4);
  }
  Vars vs = {"x", "y", "a"};
  return var(vs, "y").pow(2) - branch_polynomial(f, vs);
}

bool sample_legal(FamilyName f, const Sample& s) {
  switch (f) {
    case FamilyName::QuarticG3: return !s.b.is_zero();  // b = 0 puts a singular point at (0:0:1)
    case FamilyName::HyperellipticG3: return !s.a.is_zero() && s.a != Rational(1);
    case FamilyName::Genus2Order3: return !s.a.is_zero() && s.a != Rational(1) && s.a != Rational(-1);
  }
  return false;
}

CurveFamily make_family(FamilyName f, const Sample& s, int tau_exponent) {
  if (!sample_legal(f, s))
    throw PreconditionError("excluded parameter value for " + to_string(f) + ": a=" + s.a.to_string() +
                            ", b=" + s.b.to_string());
  CurveFamily c;
  c.name = f;
  c.sample = s;
  const CycNum z = CycNum::zeta();
  if (f == FamilyName::QuarticG3) {
    c.ambient = Ambient::ProjectivePlane;
    c.genus = 3;
    c.coordinates = kPlane;
    c.equation = parametric_equation(f).specialize(values(s, true));
    c.sigma = CoordMap(kPlane, {z * var(kPlane, "z0"), z.pow(2) * var(kPlane, "z1"), var(kPlane, "z2")});
    c.tau = CoordMap(kPlane, {var(kPlane, "z1"), var(kPlane, "z0"), var(kPlane, "z2")});
    return c;
  }
  c.ambient = Ambient::AffineHyperelliptic;
  c.coordinates = kAffine;
  c.equation = parametric_equation(f).specialize(values(s, false));
  c.branch = branch_polynomial(f, {"x", "y", "a"}).specialize(values(s, false));
  auto x = var(kAffine, "x"), y = var(kAffine, "y");
  if (f == FamilyName::HyperellipticG3) {
    c.genus = 3;
    c.sigma = CoordMap(kAffine, {z * x, z.pow(2) * y});
    CycNum a(s.a);
    c.tau = CoordMap(kAffine, {power_of(kAffine, "x", -1, a), -(a * a) * power_of(kAffine, "x", tau_exponent) * y});
  } else {
    c.genus = 2;
    c.sigma = CoordMap(kAffine, {z * x, y});
  }
  return c;
}

std::vector<RelationCheck> verify_group_relations(const CurveFamily& c) {
  bool proj = c.ambient == Ambient::ProjectivePlane;
  std::vector<RelationCheck> out;
  const auto& s = c.sigma;
  out.push_back({"sigma^3", acts_as_identity(compose(s, compose(s, s)), proj)});
  if (c.tau) {
    const auto& t = *c.tau;
    out.push_back({"tau^2", acts_as_identity(compose(t, t), proj)});
    auto ts = compose(t, s);
    out.push_back({"(tau*sigma)^2", acts_as_identity(compose(ts, ts), proj)});
  }
  return out;
}

InvarianceCertificate verify_invariance(const CurveFamily& c, const CoordMap& g, const std::string& name) {
  InvarianceCertificate cert;
  cert.map = name;
  const auto& F = c.equation;
  auto sub = substitute(F, g);
  cert.clearing = sub.clearing;
  cert.clearing_text = exps_text(g.targets(), sub.clearing);
  auto G = apply_map(F, g).embed(c.coordinates);
  if (G.is_zero()) return cert;
  Exponents shift = G.min_exponents();
  Exponents base = F.min_exponents();
  for (std::size_t i = 0; i < shift.size(); ++i) shift[i] -= base[i];
  Exponents back = shift;
  for (int& v : back) v = -v;
  auto l = is_scalar_multiple(G.shifted(back), F);
  if (!l || l->is_zero()) return cert;
  // the plane model must be preserved up to a scalar, with no monomial factor
  if (c.ambient == Ambient::ProjectivePlane && std::any_of(shift.begin(), shift.end(), [](int v) { return v != 0; }))
    return cert;
  cert.invariant = true;
  cert.monomial = shift;
  cert.monomial_text = exps_text(c.coordinates, shift);
  cert.scalar = *l;
  return cert;
}

TauExponentSearch certify_tau_exponent(const Sample& s) {
  TauExponentSearch r;
  for (int k = -4; k <= 4; ++k) {
    auto c = make_family(FamilyName::HyperellipticG3, s, k);
    if (verify_invariance(c, *c.tau, "tau").invariant) {
      r.passing.push_back(k);
      if (k == kPrintedTauExponent) r.printed_passes = true;
    }
  }
  return r;
}

namespace {

using Vec3 = std::array<CycNum, 3>;
using Mat3 = std::array<Vec3, 3>;

// row i holds the image of z_i, so the point map is p -> M p
Mat3 linear_matrix(const CoordMap& g) {
  Mat3 m{};
  if (g.sources().size() != 3) throw PreconditionError("plane map needs three coordinates");
  for (int i = 0; i < 3; ++i) {
    for (const auto& [e, coef] : g.images()[i].terms()) {
      int j = -1, deg = 0;
      for (int t = 0; t < 3; ++t) {
        deg += e[t];
        if (e[t] == 1) j = t;
        if (e[t] < 0) deg = 99;
      }
      if (deg != 1 || j < 0) throw PreconditionError("plane map is not linear");
      m[i][j] = coef;
    }
  }
  return m;
}

std::vector<Vec3> null_space(Mat3 a) {
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < 3 && row < 3; ++col) {
    int p = -1;
    for (int r = row; r < 3; ++r)
      if (!a[r][col].is_zero()) { p = r; break; }
    if (p < 0) continue;
    std::swap(a[row], a[p]);
    CycNum inv = a[row][col].inverse();
    for (auto& v : a[row]) v *= inv;
    for (int r = 0; r < 3; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      CycNum f = a[r][col];
      for (int t = 0; t < 3; ++t) a[r][t] -= f * a[row][t];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<Vec3> basis;
  for (int free = 0; free < 3; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    Vec3 v{};
    v[free] = CycNum(1);
    for (std::size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free];
    basis.push_back(v);
  }
  return basis;
}

std::string point_text(Vec3 v) {
  for (const auto& c : v)
    if (!c.is_zero()) {
      CycNum inv = c.inverse();
      for (auto& t : v) t *= inv;
      break;
    }
  return "(" + v[0].to_string() + ":" + v[1].to_string() + ":" + v[2].to_string() + ")";
}

FixedPointCount plane_fixed_points(const CurveFamily& c, const CoordMap& g) {
  Mat3 m = linear_matrix(g);
  int order = projective_order(g);
  if (order == 0) throw PreconditionError("plane map has no finite projective order");
  // the eigenvalues of m are roots of unity when m^order = id; otherwise give up
  Mat3 p{};
  for (int i = 0; i < 3; ++i) p[i][i] = CycNum(1);
  for (int k = 0; k < order; ++k) {
    Mat3 q{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int t = 0; t < 3; ++t) q[i][j] += m[i][t] * p[t][j];
    p = q;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (p[i][j] != CycNum(i == j ? 1 : 0))
        throw PreconditionError("plane map must satisfy m^n = 1 for its projective order n");

  FixedPointCount out;
  const auto& F = c.equation;
  for (int k = 0; k < 6; ++k) {
    CycNum lambda = CycNum::zeta_pow(k % 3) * CycNum(k < 3 ? 1 : -1);
    Mat3 a = m;
    for (int i = 0; i < 3; ++i) a[i][i] -= lambda;
    auto basis = null_space(a);
    if (basis.empty()) continue;
    if (basis.size() == 3) throw PreconditionError("map acts trivially on the plane");
    if (basis.size() == 1) {
      if (F.evaluate({basis[0][0], basis[0][1], basis[0][2]}).is_zero()) {
        ++out.count;
        out.witnesses.push_back(point_text(basis[0]));
      }
      continue;
    }
    // eigenline s*v1 + t*v2
    Vars st = {"s", "t"};
    std::vector<CycPoly> img;
    for (int i = 0; i < 3; ++i)
      img.push_back(var(st, "s") * basis[0][i] + var(st, "t") * basis[1][i]);
    auto restricted = apply_map(F, CoordMap(c.coordinates, img));
    if (restricted.is_zero()) throw PreconditionError("degenerate sample: curve contains a fixed line");
    int deg = restricted.total_degree();
    out.count += deg;
    if (!restricted.has_rational_coefficients()) continue;
    auto affine = restricted.specialize({{"t", CycNum(1)}});
    auto roots = univariate_roots_in_Q(affine);
    for (const auto& r : roots.roots) {
      Vec3 v;
      for (int i = 0; i < 3; ++i) v[i] = CycNum(r.value) * basis[0][i] + basis[1][i];
      std::string w = point_text(v);
      if (r.multiplicity > 1) w += " x" + std::to_string(r.multiplicity);
      out.witnesses.push_back(w);
    }
    int at_t0 = deg - roots.degree;  // roots of the binary form at t = 0
    if (at_t0 > 0) out.witnesses.push_back(point_text(basis[0]) + (at_t0 > 1 ? " x" + std::to_string(at_t0) : ""));
  }
  return out;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  mpz_class n = q.numerator(), d = q.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn = sqrt(n), rd = sqrt(d);
  return Rational(rn, rd);
}

// single-term image c * x^ex * y^ey
struct MonomialImage {
  CycNum c;
  int ex = 0;
  int ey = 0;
};

MonomialImage monomial_image(const CycPoly& p) {
  if (p.term_count() != 1) throw PreconditionError("hyperelliptic map images must be monomials");
  const auto& [e, c] = *p.terms().begin();
  return {c, e[0], e[1]};
}

std::vector<std::string> pair_witness(const std::string& prefix, const Rational& square, const std::string& suffix) {
  auto r = rational_sqrt(square);
  if (!r) return {prefix + "+sqrt(" + square.to_string() + ")" + suffix, prefix + "-sqrt(" + square.to_string() + ")" + suffix};
  return {prefix + r->to_string() + suffix, prefix + (-*r).to_string() + suffix};
}

FixedPointCount hyperelliptic_fixed_points(const CurveFamily& c, const CoordMap& g) {
  auto xi = monomial_image(g.image_of("x"));
  auto yi = monomial_image(g.image_of("y"));
  if (xi.ey != 0 || yi.ey != 1 || (xi.ex != 1 && xi.ex != -1))
    throw PreconditionError("unsupported map shape on a hyperelliptic model");
  Vars xv = {"x"};
  auto f = c.branch.embed({"x", "y"}).specialize({{"y", CycNum(0)}});
  if (!f.has_rational_coefficients()) throw PreconditionError("branch polynomial must be rational");
  int d = f.total_degree();
  int g_genus = (d - 1) / 2;
  auto coef = [&](int k) { return f.coefficient({k}).a(); };
  CycNum one(1);
  FixedPointCount out;
  auto add = [&](std::vector<std::string> w) {
    out.count += static_cast<int>(w.size());
    for (auto& s : w) out.witnesses.push_back(std::move(s));
  };

  if (xi.ex == 1 && xi.c == one) {
    // x fixed pointwise: y -> c y
    if (yi.ex != 0) throw PreconditionError("unsupported map shape on a hyperelliptic model");
    if (yi.c == one) throw PreconditionError("map acts trivially on the curve");
    if (yi.c != CycNum(-1)) throw VerificationError("map does not preserve the curve");
    out.count = 2 * g_genus + 2;
    auto roots = univariate_roots_in_Q(f);
    for (const auto& r : roots.roots) out.witnesses.push_back("(" + r.value.to_string() + ",0)");
    if (d % 2 == 1) out.witnesses.push_back("infinity");
    return out;
  }

  if (xi.ex == 1) {
    // x -> alpha x with alpha != 1: fixed fibers over 0 and infinity
    if (coef(0).is_zero()) {
      add({"(0,0)"});
    } else {
      if (yi.ex != 0) throw PreconditionError("unsupported y-image over x = 0");
      if (yi.c == one) add(pair_witness("(0,", coef(0), ")"));
    }
    if (d % 2 == 1) {
      add({"infinity"});
    } else {
      if (yi.ex != 0) throw PreconditionError("unsupported y-image at infinity");
      // chart u = 1/x, v = y/x^(g+1): v -> c alpha^-(g+1) v
      if (yi.c * xi.c.pow(-(g_genus + 1)) == one) add(pair_witness("(u,v)=(0,", coef(d), ")"));
    }
    return out;
  }

  // x -> alpha / x: fixed x with x^2 = alpha; 0 and infinity are swapped
  if (!xi.c.is_rational()) throw PreconditionError("unsupported x-image on a hyperelliptic model");
  if (yi.ex % 2 != 0) throw PreconditionError("odd y-image exponent is not supported");
  Rational alpha = xi.c.a();
  auto root = rational_sqrt(alpha);
  // y-multiplier c * x0^k with x0^2 = alpha
  CycNum mult = yi.c * CycNum(alpha.pow(yi.ex / 2));
  auto handle = [&](const std::optional<Rational>& x0, bool branch_zero, const std::string& label) {
    if (branch_zero) {
      add({"(" + label + ",0)"});
    } else if (mult == one) {
      Rational fx = x0 ? f.evaluate({CycNum(*x0)}).a() : Rational(0);
      if (x0)
        add(pair_witness("(" + label + ",", fx, ")"));
      else
        add({"(" + label + ",+)", "(" + label + ",-)"});
    }
  };
  if (root) {
    for (Rational x0 : {*root, -*root}) handle(x0, f.evaluate({CycNum(x0)}).is_zero(), x0.to_string());
  } else {
    // f(x0) = 0 at a conjugate pair iff x^2 - alpha divides f
    Rational even, odd;
    for (const auto& [e, cf] : f.terms()) {
      Rational t = cf.a() * alpha.pow(e[0] / 2);
      if (e[0] % 2 == 0) even += t; else odd += t;
    }
    bool zero = even.is_zero() && odd.is_zero();
    handle(std::nullopt, zero, "+sqrt(" + alpha.to_string() + ")");
    handle(std::nullopt, zero, "-sqrt(" + alpha.to_string() + ")");
  }
  return out;
}

}  // namespace

FixedPointCount fixed_point_count(const CurveFamily& c, const CoordMap& g) {
  if (!verify_invariance(c, g, "g").invariant) throw VerificationError("map does not preserve the curve");
  if (c.ambient == Ambient::ProjectivePlane) return plane_fixed_points(c, g);
  return hyperelliptic_fixed_points(c, g);
}

int hurwitz_quotient_genus(int genus, int order, int fixed_points) {
  if (order < 2 || genus < 0 || fixed_points < 0) throw InvalidDataError("bad Hurwitz input");
  int rest = 2 * genus - 2 - fixed_points * (order - 1);
  if (rest % order != 0 || (rest / order) % 2 != 0)
    throw InvalidDataError("Hurwitz formula gives no integral quotient genus");
  int gq = (rest / order + 2) / 2;
  if (gq < 0) throw InvalidDataError("Hurwitz formula gives negative quotient genus");
  return gq;
}

DegreeCount prym_degree_count(const std::array<int, 6>& labels) {
  DegreeCount out;
  std::set<std::pair<Triple, Triple>> classes;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        ++out.subsets;
        Triple t{labels[i], labels[j], labels[k]}, rest{};
        int n = 0;
        for (int m = 0; m < 6; ++m)
          if (m != i && m != j && m != k) rest[n++] = labels[m];
        std::sort(t.begin(), t.end());
        std::sort(rest.begin(), rest.end());
        // representative: the triple holding the first label
        if (std::find(rest.begin(), rest.end(), labels[0]) != rest.end()) std::swap(t, rest);
        classes.insert({t, rest});
      }
  out.pairs.assign(classes.begin(), classes.end());
  out.classes = static_cast<int>(out.pairs.size());
  return out;
}

WeierstrassModel standard_weierstrass_model() {
  WeierstrassModel m;
  for (int i = 1; i <= 6; ++i) m.w.push_back("w" + std::to_string(i));
  for (int i = 1; i <= 8; ++i) m.q.push_back("q" + std::to_string(i));
  for (int i = 1; i <= 4; ++i) m.p.push_back("p" + std::to_string(i));
  const char* img[] = {"p1", "p1", "p1", "p2", "p2", "p2", "p3", "p4"};
  for (int i = 0; i < 8; ++i) m.image[m.q[i]] = img[i];
  return m;
}

std::vector<std::vector<int>> fiber_compositions(int points, int parts, const std::vector<int>& allowed) {
  std::vector<int> sizes = allowed;
  std::sort(sizes.rbegin(), sizes.rend());
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, std::size_t from) -> void {
    if (static_cast<int>(cur.size()) == parts) {
      if (left == 0) out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < sizes.size(); ++i) {
      if (sizes[i] > left) continue;
      cur.push_back(sizes[i]);
      self(self, left - sizes[i], i);
      cur.pop_back();
    }
  };
  rec(rec, points, 0);
  return out;
}

namespace {

std::map<std::string, std::vector<std::string>> fibers(const WeierstrassModel& m) {
  if (m.w.size() != 6 || m.q.size() != 8 || m.p.size() != 4)
    throw InvalidDataError("Weierstrass model needs 6, 8 and 4 labeled points");
  std::map<std::string, std::vector<std::string>> fib;
  for (const auto& p : m.p) fib[p];
  for (const auto& q : m.q) {
    auto it = m.image.find(q);
    if (it == m.image.end()) throw InvalidDataError("point " + q + " has no image");
    if (!fib.count(it->second)) throw InvalidDataError("unknown branch point " + it->second);
    fib[it->second].push_back(q);
  }
  return fib;
}

}  // namespace

std::vector<int> weierstrass_fiber_profile(const WeierstrassModel& m) {
  auto feasible = fiber_compositions(8, 4, {1, 3});
  if (feasible.size() != 1) throw InvalidDataError("fiber profile is not unique");
  std::vector<int> profile;
  for (const auto& [p, qs] : fibers(m)) {
    int n = static_cast<int>(qs.size());
    if (n != 1 && n != 3) throw InvalidDataError("fiber over " + p + " has size " + std::to_string(n));
    profile.push_back(n);
  }
  std::sort(profile.rbegin(), profile.rend());
  if (profile != feasible.front()) throw InvalidDataError("infeasible fiber assignment");
  return profile;
}

std::vector<std::pair<std::string, std::string>> sigma_weierstrass_points(const WeierstrassModel& m) {
  weierstrass_fiber_profile(m);
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& p : m.p) {
    auto qs = fibers(m).at(p);
    if (qs.size() != 3) continue;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) out.emplace_back(qs[i], qs[j]);
  }
  return out;
}

namespace {

nlohmann::ordered_json to_json(const InvarianceCertificate& c) {
  nlohmann::ordered_json j;
  j["map"] = c.map;
  j["invariant"] = c.invariant;
  j["clearing_monomial"] = c.clearing_text;
  if (c.invariant) {
    j["monomial"] = c.monomial_text;
    j["scalar"] = c.scalar.to_string();
  }
  return j;
}

nlohmann::ordered_json to_json(const FixedPointCount& f) {
  return {{"count", f.count}, {"witnesses", f.witnesses}};
}

}  // namespace

nlohmann::ordered_json family_report(FamilyName f, const std::vector<Sample>& samples, bool& ok) {
  ok = true;
  nlohmann::ordered_json out;
  out["family"] = to_string(f);
  out["samples"] = nlohmann::ordered_json::array();
  std::optional<int> sigma_count;
  bool sample_independent = true;
  for (const auto& s : samples) {
    nlohmann::ordered_json js;
    js["a"] = s.a.to_string();
    if (f == FamilyName::QuarticG3) js["b"] = s.b.to_string();
    if (!sample_legal(f, s)) {
      js["skipped"] = "excluded parameter value";
      out["samples"].push_back(js);
      continue;
    }
    auto c = make_family(f, s);
    js["equation"] = c.equation.to_string();
    js["relations"] = nlohmann::ordered_json::array();
    for (const auto& r : verify_group_relations(c)) {
      js["relations"].push_back({{"relation", r.relation}, {"holds", r.holds}});
      ok = ok && r.holds;
    }
    auto inv_s = verify_invariance(c, c.sigma, "sigma");
    js["invariance"] = nlohmann::ordered_json::array({to_json(inv_s)});
    ok = ok && inv_s.invariant;
    if (c.tau) {
      auto inv_t = verify_invariance(c, *c.tau, "tau");
      js["invariance"].push_back(to_json(inv_t));
      ok = ok && inv_t.invariant;
    }
    if (f == FamilyName::HyperellipticG3) {
      auto search = certify_tau_exponent(s);
      js["tau_exponent"] = {{"candidates", "y -> -a^2 x^k y, k in [-4,4]"},
                            {"passing", search.passing},
                            {"used", kHyperellipticTauExponent},
                            {"printed", kPrintedTauExponent},
                            {"printed_passes", search.printed_passes}};
      ok = ok && search.passing == std::vector<int>{kHyperellipticTauExponent};
    }
    try {
      auto fs = fixed_point_count(c, c.sigma);
      js["sigma_fixed_points"] = to_json(fs);
      js["sigma_quotient_genus"] = hurwitz_quotient_genus(c.genus, 3, fs.count);
      if (sigma_count && *sigma_count != fs.count) sample_independent = false;
      sigma_count = fs.count;
      if (c.tau) {
        auto ft = fixed_point_count(c, *c.tau);
        js["tau_fixed_points"] = to_json(ft);
        js["tau_quotient_genus"] = hurwitz_quotient_genus(c.genus, 2, ft.count);
        if (f == FamilyName::QuarticG3) {
          js["tau_fixed_points"]["printed"] = kPrintedQuarticTauFixedPoints;
          js["tau_fixed_points"]["agrees_with_printed"] = ft.count == kPrintedQuarticTauFixedPoints;
        }
      }
    } catch (const Error& e) {
      js["error"] = e.what();
      ok = false;
    }
    out["samples"].push_back(js);
  }
  out["sigma_count_sample_independent"] = sample_independent;
  ok = ok && sample_independent;
  out["ok"] = ok;
  return out;
}

}  // namespace prymlab
