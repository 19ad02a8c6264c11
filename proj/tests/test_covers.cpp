#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <map>

#include "prymlab/covers.hpp"
#include "prymlab/errors.hpp"
#include "support.hpp"

using namespace prymlab;
using testsupport::fixture;

namespace {

const std::vector<std::string> kFixtures = {"smooth", "ii-a", "ii-b", "iii", "iv", "v", "vi"};

bool has_node_type(const S3Action& a, NodeType t) {
  for (int e = 0; e < a.graph().num_edges(); ++e)
    if (a.classify_node(e) == t) return true;
  return false;
}

}  // namespace

TEST_CASE("admissibility") {
  auto a = fixture("ii-a");
  CHECK(check_admissible(a).ok);
  CHECK(a.total().genera() == std::vector<int>{5});
  CHECK(a.base().genera() == std::vector<int>{1});
  auto s = fixture("smooth");
  CHECK(check_admissible(s).ok);
  CHECK(s.total().num_edges() == 0);
  CHECK(s.total().genera() == std::vector<int>{7});

  // a special orbit of branch-exchanging nodes lands on smooth base points
  int t4 = 0;
  testsupport::for_each_candidate(testsupport::full_space(), [&](const std::string&, const CoverDatum& c, const auto&) {
    if (!has_node_type(c.action(), NodeType::T4)) return;
    ++t4;
    auto v = check_admissible(c);
    CHECK_FALSE(v.ok);
    bool found = false;
    for (const auto& m : v.violations) found = found || m.find("node maps to smooth point") != std::string::npos;
    CHECK(found);
  });
  CHECK(t4 > 0);
}

TEST_CASE("condition (*)") {
  CHECK(check_star(fixture("iii")));
  CHECK(check_star(fixture("smooth")));
  int t1 = 0;
  testsupport::for_each_candidate({}, [&](const std::string&, const CoverDatum& c, const auto&) {
    if (!has_node_type(c.action(), NodeType::T1)) return;
    ++t1;
    CHECK_FALSE(check_star(c));
  });
  CHECK(t1 > 0);
}

TEST_CASE("condition (**)") {
  for (const auto& n : kFixtures) CHECK_MESSAGE(check_doublestar(fixture(n)), n);
  auto b = doublestar_clauses(fixture("ii-b"));
  CHECK(b.pa_total == 7);
  CHECK(b.pa_base == 2);
  CHECK(b.betti_y == b.betti_base);

  ActionConstraints nontriv;
  nontriv.nontrivial_on_vertices = true;
  auto tri = enumerate_actions(DecoratedGraph({1, 1, 1}, {{0, 1}, {1, 2}, {2, 0}}), nontriv);
  REQUIRE_FALSE(tri.empty());
  int built = 0;
  for (const auto& a : tri) {
    try {
      CoverDatum c(a);
      ++built;
      CHECK_FALSE(check_doublestar(c));
    } catch (const InvalidDataError&) {
      // no genus-1 quotient components for this action
    }
  }
  CHECK(built > 0);
}

TEST_CASE("equivalence of the two sides") {
  auto a = doublestar_equivalence(fixture("ii-a"));
  CHECK(a.definition_side);
  CHECK(a.count_side);

  int injected = 0, total = 0, disagreements = 0;
  total = testsupport::for_each_candidate(testsupport::full_space(), [&](const std::string&, const CoverDatum& c, const auto&) {
    auto e = doublestar_equivalence(c);
    if (!e.agree()) ++disagreements;
    if (invariant_vector(c.action()).r2 > 0) {
      ++injected;
      CHECK_FALSE(e.definition_side);
      CHECK_FALSE(e.count_side);
    }
  });
  CHECK(total > 1000);
  CHECK(injected > 0);
  CHECK(disagreements == 0);
}

TEST_CASE("invariants over all built candidates") {
  std::map<Certificate, std::pair<std::string, CoverDatum>> violations;
  testsupport::for_each_candidate(testsupport::full_space(), [&](const std::string& label, const CoverDatum& c, const auto& profiles) {
    const auto& base = c.base();
    if (!check_admissible(c).ok) return;
    for (int e = 0; e < base.num_edges(); ++e) CHECK(c.index_over(e) * c.fiber_size(e) == 6);
    auto v = invariant_vector(c.action());
    if (v.finite_r) {
      int chain = 6 * arithmetic_genus_euler(base) - 5 + v.r2 / 2 + v.r3 + 3 * v.n[4] + 3 * v.n[5];
      CHECK(arithmetic_genus_euler(c.total()) == chain);
    }
    if (!testsupport::realizable(profiles)) return;
    if (check_doublestar(c) && !check_star(c)) violations.emplace(action_certificate(c.action()), std::pair{label, c});
    if (check_star(c)) {
      auto t = quotient_tower(c);
      CHECK(t.degrees[0] * t.degrees[2] == 6);
      CHECK(t.degrees[1] * t.degrees[3] == 6);
      CHECK(t.isotypic_identity);
    }
  });
  // Two realizable (**) covers with type-1 nodes, both outside the classification:
  // over IV, three elliptic components on each side (rotation data balances);
  // over V, six elliptic plus two rational components (no balanced rotation data).
  REQUIRE(violations.size() == 2);
  std::map<std::string, bool> balanced;
  for (const auto& [_, lc] : violations) balanced[lc.first] = rotation_audit(lc.second.action()).balanced;
  CHECK(balanced == std::map<std::string, bool>{{"IV", true}, {"V", false}});
}

TEST_CASE("quotient towers") {
  auto s = quotient_tower(fixture("smooth"));
  CHECK(s.y.num_vertices() == 1);
  CHECK(s.y.num_edges() == 0);
  CHECK(s.pa_y == 4);

  auto a = quotient_tower(fixture("ii-a"));
  CHECK(a.y.num_vertices() == 1);
  CHECK(a.y.num_edges() == 1);
  CHECK(a.y.genera() == std::vector<int>{3});
  CHECK(a.pa_y == 4);
  CHECK(a.pa_y - arithmetic_genus_euler(fixture("ii-a").base()) == 2);

  auto vi = quotient_tower(fixture("vi"));
  CHECK(vi.y.num_vertices() == 2);
  CHECK(vi.y.num_edges() == 3);
  CHECK(vi.y.genera() == std::vector<int>{1, 1});
  CHECK(vi.pa_y == 4);

  for (const auto& n : kFixtures) CHECK_MESSAGE(quotient_tower(fixture(n)).isotypic_identity, n);
  CoverDatum t1;
  testsupport::for_each_candidate({}, [&](const std::string&, const CoverDatum& c, const auto&) {
    if (has_node_type(c.action(), NodeType::T1)) t1 = c;
  });
  CHECK_THROWS_AS(quotient_tower(t1), PreconditionError);
}

TEST_CASE("norm pushforward") {
  auto gamma = CycPoly::variable({"gamma"}, "gamma");
  NormGluingDatum d;
  d.nodes[0] = {gamma, 1, 0, NodeType::T3};
  d.nodes[1] = {gamma, 2, 5, NodeType::T1};
  d.nodes[2] = {CycPoly::constant({"gamma"}, 1), 1, 1, NodeType::T3};
  auto r0 = norm_pushforward(d, 0);
  CHECK(r0.gamma == gamma.pow(3));
  CHECK(r0.m == 1);
  CHECK(r0.n == 0);
  auto r1 = norm_pushforward(d, 1);
  CHECK(r1.gamma == gamma);
  CHECK(r1.m == 2);
  CHECK(r1.n == 5);
  CHECK(norm_pushforward(d, 2).gamma == CycPoly::constant({"gamma"}, 1));
  CHECK(pushforward_rule(NodeType::T3) == "cube");
  CHECK(pushforward_rule(NodeType::T2) == "identity");
}

TEST_CASE("cover JSON round trip") {
  for (const auto& n : kFixtures) {
    std::ifstream in(std::string(PRYMLAB_FIXTURES) + "/" + n + ".json");
    auto j = Json::parse(in);
    auto c = cover_from_json(j);
    CHECK_MESSAGE(cover_to_json(c) == j, n);
    CHECK(cover_to_json(cover_from_json(cover_to_json(c))) == j);
  }
  auto j = cover_to_json(fixture("ii-a"));
  j.erase("action");
  try {
    cover_from_json(j);
    FAIL("missing field accepted");
  } catch (const InvalidDataError& e) {
    CHECK(std::string(e.what()).find("action") != std::string::npos);
  }
  j = cover_to_json(fixture("ii-a"));
  j["schema"] = "cover-v0";
  CHECK_THROWS_AS(cover_from_json(j), InvalidDataError);
}

TEST_CASE("rotation audit") {
  CHECK(rotation_audit(fixture("smooth").action()).balanced);
  CHECK(rotation_audit(fixture("ii-a").action()).balanced);
  CHECK_FALSE(rotation_audit(fixture("ii-b").action()).balanced);
  CHECK_FALSE(rotation_audit(fixture("iii").action()).balanced);
  CHECK(rotation_audit(fixture("iv").action()).balanced);
}
