#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "prymlab/errors.hpp"
#include "prymlab/families.hpp"

using namespace prymlab;

namespace {

Rational f_hyp(const Rational& x, const Rational& a) {
  return x * (x.pow(3) - Rational(1)) * (x.pow(3) - a.pow(3));
}

// k passes iff (c x^k)^2 f(x) = f(a/x) at many rational x (c = -a^2)
bool tau_exponent_oracle(int k, const Rational& a) {
  for (long n = 2; n < 9; ++n) {
    Rational x(n, 3);
    Rational lhs = a.pow(4) * x.pow(2 * k) * f_hyp(x, a);
    if (lhs != f_hyp(a / x, a)) return false;
  }
  return true;
}

Rational quartic(const Rational& z0, const Rational& z1, const Rational& z2, const Sample& s) {
  return z0.pow(3) * z2 + z1.pow(3) * z2 + z0.pow(2) * z1.pow(2) + s.a * z0 * z1 * z2.pow(2) + s.b * z2.pow(4);
}

const std::vector<Sample> kSamples = {{2, 3}, {5, 7}, {-1, 2}};

}  // namespace

TEST_CASE("family construction and legality") {
  CHECK(family_from_string("HYPERELLIPTIC_G3") == FamilyName::HyperellipticG3);
  CHECK_THROWS_AS(family_from_string("QUINTIC"), PreconditionError);
  CHECK_FALSE(sample_legal(FamilyName::HyperellipticG3, {1, 0}));
  CHECK_FALSE(sample_legal(FamilyName::HyperellipticG3, {0, 0}));
  CHECK(sample_legal(FamilyName::HyperellipticG3, {-1, 0}));
  CHECK_FALSE(sample_legal(FamilyName::Genus2Order3, {-1, 0}));
  CHECK_THROWS_AS(make_family(FamilyName::Genus2Order3, {1, 0}), PreconditionError);
  auto c = make_family(FamilyName::QuarticG3, {2, 3});
  CHECK_FALSE(c.equation.is_zero());
  CHECK(c.equation.total_degree() == 4);
  CHECK(projective_order(c.sigma) == 3);
  CHECK(projective_order(*c.tau) == 2);
  auto h = make_family(FamilyName::Genus2Order3, {2, 0});
  CHECK(exact_order(h.sigma) == 3);
  CHECK_FALSE(h.tau.has_value());
}

TEST_CASE("group relations at all legal samples") {
  for (auto f : {FamilyName::QuarticG3, FamilyName::HyperellipticG3, FamilyName::Genus2Order3})
    for (const auto& s : kSamples) {
      if (!sample_legal(f, s)) continue;
      auto rel = verify_group_relations(make_family(f, s));
      CHECK(rel.size() == (f == FamilyName::Genus2Order3 ? 1u : 3u));
      for (const auto& r : rel) CHECK_MESSAGE(r.holds, to_string(f) << " " << r.relation);
    }
  // the printed exponent breaks tau^2 as an exact identity
  auto bad = make_family(FamilyName::HyperellipticG3, {2, 0}, kPrintedTauExponent);
  auto rel = verify_group_relations(bad);
  CHECK_FALSE(rel[1].holds);
}

TEST_CASE("invariance certificates") {
  auto q = make_family(FamilyName::QuarticG3, {2, 3});
  auto cs = verify_invariance(q, q.sigma, "sigma");
  CHECK(cs.invariant);
  CHECK(cs.scalar == CycNum(1));
  CHECK(cs.monomial_text == "1");
  auto g2 = make_family(FamilyName::Genus2Order3, {2, 0});
  auto cg = verify_invariance(g2, g2.sigma, "sigma");
  CHECK(cg.invariant);
  CHECK(cg.scalar == CycNum(1));
  CHECK(cg.monomial_text == "1");
  auto h = make_family(FamilyName::HyperellipticG3, {2, 0});
  auto ct = verify_invariance(h, *h.tau, "tau");
  CHECK(ct.invariant);
  CHECK(ct.clearing_text == "x^8");
  CHECK(ct.monomial_text == "x^-8");
  CHECK(ct.scalar == CycNum(16));
  // a map that does not preserve the quartic
  CoordMap swap02({"z0", "z1", "z2"}, {CycPoly::variable({"z0", "z1", "z2"}, "z2"),
                                      CycPoly::variable({"z0", "z1", "z2"}, "z1"),
                                      CycPoly::variable({"z0", "z1", "z2"}, "z0")});
  CHECK_FALSE(verify_invariance(q, swap02, "swap").invariant);
  CHECK_THROWS_AS(fixed_point_count(q, swap02), VerificationError);
}

TEST_CASE("tau exponent agrees with numeric oracle") {
  for (Rational a : {Rational(2), Rational(5), Rational(-1)}) {
    auto search = certify_tau_exponent({a, 0});
    std::vector<int> oracle;
    for (int k = -4; k <= 4; ++k)
      if (tau_exponent_oracle(k, a)) oracle.push_back(k);
    CHECK(search.passing == oracle);
    CHECK(search.passing == std::vector<int>{kHyperellipticTauExponent});
    CHECK_FALSE(search.printed_passes);
  }
}

TEST_CASE("sigma fixed points and quotient genera") {
  auto q = make_family(FamilyName::QuarticG3, {2, 3});
  auto fq = fixed_point_count(q, q.sigma);
  CHECK(fq.count == 2);
  CHECK(fq.witnesses == std::vector<std::string>{"(1:0:0)", "(0:1:0)"});
  // oracle: sigma's eigenpoints are the coordinate points
  CHECK(quartic(1, 0, 0, q.sample).is_zero());
  CHECK(quartic(0, 1, 0, q.sample).is_zero());
  CHECK_FALSE(quartic(0, 0, 1, q.sample).is_zero());

  auto h = make_family(FamilyName::HyperellipticG3, {2, 0});
  auto fh = fixed_point_count(h, h.sigma);
  CHECK(fh.count == 2);
  CHECK(fh.witnesses == std::vector<std::string>{"(0,0)", "infinity"});

  auto g2 = make_family(FamilyName::Genus2Order3, {2, 0});
  CHECK(fixed_point_count(g2, g2.sigma).count == 4);

  CHECK(hurwitz_quotient_genus(3, 3, fq.count) == 1);
  CHECK(hurwitz_quotient_genus(3, 3, fh.count) == 1);
  CHECK(hurwitz_quotient_genus(2, 3, 4) == 0);
  CHECK(hurwitz_quotient_genus(1, 2, 0) == 1);
  CHECK_THROWS_AS(hurwitz_quotient_genus(3, 3, 1), InvalidDataError);
  CHECK_THROWS_AS(hurwitz_quotient_genus(2, 3, 8), InvalidDataError);
}

TEST_CASE("fixed point counts do not depend on the sample") {
  const std::vector<Sample> more = {{2, 3}, {5, 7}, {-1, 2}, {3, 11}, {Rational(1, 2), 5}};
  for (auto f : {FamilyName::QuarticG3, FamilyName::HyperellipticG3, FamilyName::Genus2Order3}) {
    std::set<int> counts;
    int used = 0;
    for (const auto& s : more) {
      if (!sample_legal(f, s)) continue;
      auto c = make_family(f, s);
      counts.insert(fixed_point_count(c, c.sigma).count);
      ++used;
    }
    CHECK(used >= 3);
    CHECK(counts.size() == 1);
  }
}

TEST_CASE("tau on the quartic") {
  for (const auto& s : kSamples) {
    auto q = make_family(FamilyName::QuarticG3, s);
    auto ft = fixed_point_count(q, *q.tau);
    // oracle: eigenline z0 = z1 gives 2t^3u + t^4 + a t^2u^2 + b u^4, degree 4 in (t:u);
    // the isolated eigenpoint (1:-1:0) is off the curve
    CHECK_FALSE(quartic(1, -1, 0, s).is_zero());
    CHECK(ft.count == 4);
    CHECK(hurwitz_quotient_genus(3, 2, ft.count) == 1);
    for (const auto& w : ft.witnesses) CHECK(w.find(":") != std::string::npos);
  }
  auto q = make_family(FamilyName::QuarticG3, {-1, 2});
  auto ft = fixed_point_count(q, *q.tau);
  CHECK(std::find(ft.witnesses.begin(), ft.witnesses.end(), "(1:1:-1)") != ft.witnesses.end());
  CHECK(quartic(1, 1, -1, q.sample).is_zero());
}

TEST_CASE("hyperelliptic tau and involution") {
  auto h = make_family(FamilyName::HyperellipticG3, {2, 0});
  CHECK(fixed_point_count(h, *h.tau).count == 0);
  CoordMap iota({"x", "y"}, {CycPoly::variable({"x", "y"}, "x"), -CycPoly::variable({"x", "y"}, "y")});
  auto fi = fixed_point_count(h, iota);
  CHECK(fi.count == 8);
  CHECK(hurwitz_quotient_genus(3, 2, fi.count) == 0);
}

TEST_CASE("degree count") {
  auto d = prym_degree_count();
  CHECK(d.subsets == 20);
  CHECK(d.classes == 10);
  std::set<Triple> seen;
  for (const auto& [t, c] : d.pairs) {
    CHECK(t[0] == 1);
    seen.insert(t);
    seen.insert(c);
  }
  CHECK(seen.size() == 20);
  std::array<int, 6> labels{4, 6, 1, 3, 5, 2};
  do {
    CHECK(prym_degree_count(labels).classes == 10);
  } while (std::next_permutation(labels.begin(), labels.begin() + 3));
}

TEST_CASE("Weierstrass fibers") {
  auto comps = fiber_compositions(8, 4, {1, 3});
  REQUIRE(comps.size() == 1);
  CHECK(comps[0] == std::vector<int>{3, 3, 1, 1});
  auto two = fiber_compositions(8, 4, {1, 2});
  CHECK(two == std::vector<std::vector<int>>{{2, 2, 2, 2}});

  auto m = standard_weierstrass_model();
  CHECK(weierstrass_fiber_profile(m) == std::vector<int>{3, 3, 1, 1});
  auto pairs = sigma_weierstrass_points(m);
  std::vector<std::pair<std::string, std::string>> expected = {{"q1", "q2"}, {"q1", "q3"}, {"q2", "q3"},
                                                              {"q4", "q5"}, {"q4", "q6"}, {"q5", "q6"}};
  CHECK(pairs == expected);

  auto bad = m;
  bad.image["q3"] = "p3";  // fibers 2, 3, 2, 1
  CHECK_THROWS_AS(weierstrass_fiber_profile(bad), InvalidDataError);
  CHECK_THROWS_AS(sigma_weierstrass_points(bad), InvalidDataError);
  auto pairs_of_two = m;
  for (int i = 0; i < 8; ++i) pairs_of_two.image[m.q[i]] = m.p[i / 2];
  CHECK_THROWS_AS(weierstrass_fiber_profile(pairs_of_two), InvalidDataError);
  bad = m;
  bad.q.pop_back();
  CHECK_THROWS_AS(weierstrass_fiber_profile(bad), InvalidDataError);
}

TEST_CASE("Weierstrass pairs under relabeling") {
  auto m = standard_weierstrass_model();
  std::array<int, 3> a{0, 1, 2};
  do {
    std::array<int, 3> b{3, 4, 5};
    do {
      auto r = m;
      for (int i = 0; i < 3; ++i) {
        r.image[m.q[a[i]]] = "p1";
        r.image[m.q[b[i]]] = "p2";
      }
      auto pairs = sigma_weierstrass_points(r);
      CHECK(pairs.size() == 6);
      // two triangles: each point in exactly two pairs, none across fibers
      std::map<std::string, int> deg;
      for (const auto& [x, y] : pairs) {
        ++deg[x];
        ++deg[y];
        CHECK(r.image[x] == r.image[y]);
      }
      CHECK(deg.size() == 6);
      for (const auto& [_, n] : deg) CHECK(n == 2);
    } while (std::next_permutation(b.begin(), b.end()));
  } while (std::next_permutation(a.begin(), a.end()));
}

TEST_CASE("family report") {
  for (auto f : {FamilyName::QuarticG3, FamilyName::HyperellipticG3, FamilyName::Genus2Order3}) {
    bool ok = false;
    auto j = family_report(f, kSamples, ok);
    CHECK(ok);
    CHECK(j["family"] == to_string(f));
    CHECK(j["samples"].size() == 3);
  }
  bool ok = true;
  auto j = family_report(FamilyName::QuarticG3, {{2, 3}}, ok);
  CHECK(j["samples"][0]["tau_fixed_points"]["agrees_with_printed"] == false);
  CHECK(j["samples"][0]["sigma_quotient_genus"] == 1);
}
