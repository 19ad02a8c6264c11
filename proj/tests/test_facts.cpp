#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <set>

#include "prymlab/errors.hpp"
#include "prymlab/facts.hpp"

using namespace prymlab;

namespace {

// S3 as permutations of {0,1,2}, independent of the library's group code.
using Perm = std::array<int, 3>;

Perm mul(const Perm& p, const Perm& q) { return {p[q[0]], p[q[1]], p[q[2]]}; }
Perm inv(const Perm& p) {
  Perm r{};
  for (int i = 0; i < 3; ++i) r[p[i]] = i;
  return r;
}
int order(const Perm& p) {
  Perm id{0, 1, 2}, x = p;
  for (int k = 1; k <= 6; ++k, x = mul(x, p))
    if (x == id) return k;
  return 0;
}

std::set<Perm> closure(std::set<Perm> s) {
  s.insert({0, 1, 2});
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& a : std::set<Perm>(s))
      for (const auto& b : std::set<Perm>(s))
        grew = s.insert(mul(a, b)).second || grew;
  }
  return s;
}

// Riemann existence: a connected G-cover of a genus-g curve branched at a points
// of index 2 and b points of index 3 exists iff some tuple
// (x1,y1,...,xg,yg, c1..ca, d1..db) with prod [xi,yi] * prod c * prod d = 1,
// ord c = 2, ord d = 3, generates G.
bool exists_cover(const std::set<Perm>& group, int g, int a, int b) {
  using State = std::pair<Perm, std::set<Perm>>;
  std::set<State> states{{Perm{0, 1, 2}, {Perm{0, 1, 2}}}};
  auto step = [&](auto&& extend) {
    std::set<State> next;
    for (const auto& [prod, gen] : states) extend(prod, gen, next);
    states = std::move(next);
  };
  for (int i = 0; i < g; ++i)
    step([&](const Perm& prod, const std::set<Perm>& gen, std::set<State>& next) {
      for (const auto& x : group)
        for (const auto& y : group) {
          auto g2 = gen;
          g2.insert(x);
          g2.insert(y);
          next.insert({mul(prod, mul(mul(x, y), mul(inv(x), inv(y)))), closure(g2)});
        }
    });
  auto points = [&](int count, int ord) {
    for (int i = 0; i < count; ++i)
      step([&](const Perm& prod, const std::set<Perm>& gen, std::set<State>& next) {
        for (const auto& c : group) {
          if (order(c) != ord) continue;
          auto g2 = gen;
          g2.insert(c);
          next.insert({mul(prod, c), closure(g2)});
        }
      });
  };
  points(a, 2);
  points(b, 3);
  for (const auto& [prod, gen] : states)
    if (prod == Perm{0, 1, 2} && gen == group) return true;
  return false;
}

int hurwitz_genus(int n, int g, int a, int b) {
  int twice = n * (2 * g - 2) + a * (n - n / 2) + b * (n - n / 3);
  return twice / 2 + 1;
}

}  // namespace

TEST_CASE("structural entries match a monodromy search") {
  const std::set<Perm> z2 = closure({Perm{1, 0, 2}});
  const std::set<Perm> z3 = closure({Perm{1, 2, 0}});
  const std::set<Perm> s3 = closure({Perm{1, 0, 2}, Perm{1, 2, 0}});
  REQUIRE(s3.size() == 6);
  const auto& table = existence_facts();
  int checked = 0;
  for (int g = 0; g <= 2; ++g)
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b) {
        std::vector<std::pair<int, const std::set<Perm>*>> groups;
        if (b == 0) groups.push_back({2, &z2});
        if (a == 0) groups.push_back({3, &z3});
        groups.push_back({6, &s3});
        for (auto [n, grp] : groups) {
          ComponentProfile p;
          p.group_order = n;
          p.cyclic = n != 6;
          p.base_genus = g;
          p.involution_points = a;
          p.rotation_points = b;
          p.cover_genus = hurwitz_genus(n, g, a, b);
          bool oracle = exists_cover(*grp, g, a, b);
          bool table_says = table.component_obstruction(p) == nullptr;
          CHECK_MESSAGE(oracle == table_says, "order " << n << " g " << g << " a " << a << " b " << b);
          ++checked;
        }
      }
  CHECK(checked == 75 + 15 + 15);
}

TEST_CASE("fact table contents") {
  const auto& t = existence_facts();
  std::set<std::string> structural, axioms;
  for (const auto& e : t.entries()) {
    CHECK_FALSE(e.statement.empty());
    CHECK_FALSE(e.citation.empty());
    (e.kind == FactKind::Structural ? structural : axioms).insert(e.id);
    if (e.kind == FactKind::Axiom) CHECK_FALSE(e.audit.empty());
  }
  CHECK(structural == std::set<std::string>{"c2-parity", "c2-rational", "c3-single", "c3-rational", "s3-parity",
                                            "s3-rational", "s3-elliptic"});
  CHECK(axioms == std::set<std::string>{"sep-six", "iv-three-three", "vii-two-two"});
  CHECK_THROWS_AS(t.entry("nope"), PreconditionError);
  ComponentProfile bad;
  bad.group_order = 4;
  CHECK_THROWS_AS(t.component_obstruction(bad), PreconditionError);
}

TEST_CASE("candidate checks") {
  const auto& t = existence_facts();
  ComponentProfile free_s3;  // unramified S3 over an elliptic curve
  free_s3.group_order = 6;
  free_s3.cyclic = false;
  free_s3.base_genus = 1;
  free_s3.cover_genus = 1;
  auto v = t.check("IV", {free_s3, free_s3}, {1, 1});
  REQUIRE(v);
  CHECK(v.entry->id == "s3-elliptic");
  CHECK(v.base_vertex == 0);

  ComponentProfile trivial;
  trivial.base_genus = 1;
  trivial.cover_genus = 1;
  ComponentProfile c2;
  c2.group_order = 2;
  c2.base_genus = 1;
  c2.cover_genus = 1;
  CHECK_FALSE(t.check("IV", {c2, c2}, {3, 3}).entry == nullptr);
  CHECK(t.check("IV", {c2, c2}, {3, 3}).entry->id == "iv-three-three");
  CHECK(t.check("V", {trivial, trivial}, {6, 1}).entry->id == "sep-six");
  CHECK(t.check("VII", {c2, c2}, {2, 2}).entry->id == "vii-two-two");
  CHECK_FALSE(t.check("II", {trivial}, {6}));
}
