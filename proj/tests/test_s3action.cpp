#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "prymlab/errors.hpp"
#include "prymlab/s3action.hpp"

using namespace prymlab;

namespace {

DecoratedGraph hexagon() {
  return DecoratedGraph({2, 2, 2, 2, 2, 2}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
}

// sigma = (Z1 Z3 Z5)(Z2 Z4 Z6), tau = (Z1 Z2)(Z3 Z6)(Z4 Z5), zero-based.
S3Action hexagon_action() {
  return action_from_vertex_permutations(hexagon(), {2, 3, 4, 5, 0, 1}, {1, 0, 5, 4, 3, 2});
}

// One vertex with two loops; sigma rotates each loop's branches trivially.
S3Action prop51a_action() {
  DecoratedGraph g({5}, {{0, 0}, {0, 0}});
  ActionGenerators gens;
  gens.sigma_vertex = {0};
  gens.tau_vertex = {0};
  gens.sigma_half = {0, 1, 2, 3};
  gens.tau_half = {2, 3, 0, 1};
  return S3Action(g, gens);
}

void check_orbit_stabilizer(const S3Action& a) {
  const auto& g = a.graph();
  for (int v = 0; v < g.num_vertices(); ++v)
    CHECK(a.orbit({ObjectKind::Vertex, v}).size() * subgroup_order(a.stabilizer({ObjectKind::Vertex, v})) == 6);
  for (int e = 0; e < g.num_edges(); ++e)
    CHECK(a.orbit({ObjectKind::Edge, e}).size() * subgroup_order(a.stabilizer({ObjectKind::Edge, e})) == 6);
  for (int h = 0; h < g.num_half_edges(); ++h)
    CHECK(a.orbit({ObjectKind::HalfEdge, h}).size() * subgroup_order(a.stabilizer({ObjectKind::HalfEdge, h})) == 6);
}

}  // namespace

TEST_CASE("group presentation") {
  auto s = GroupElement::sigma(), t = GroupElement::tau(), e = GroupElement::identity();
  CHECK(s * s * s == e);
  CHECK(t * t == e);
  CHECK(t * s * t * s == e);
  CHECK(s.permutation() == std::array<int, 3>{1, 2, 0});
  CHECK(t.permutation() == std::array<int, 3>{1, 0, 2});
  std::set<int> all;
  for (auto a : s3_elements())
    for (auto b : s3_elements()) {
      all.insert((a * b).index());
      // table agrees with composing permutations
      auto pa = a.permutation(), pb = b.permutation(), pab = (a * b).permutation();
      for (int x = 0; x < 3; ++x) CHECK(pab[static_cast<std::size_t>(x)] == pa[static_cast<std::size_t>(pb[static_cast<std::size_t>(x)])]);
      CHECK(a * a.inverse() == e);
    }
  CHECK(all.size() == 6);
  CHECK(all_subgroups().size() == 6);
  CHECK(is_normal_in(subgroups::rotations, subgroups::full));
  CHECK_FALSE(is_normal_in(subgroups::tau, subgroups::full));
  CHECK(generated_by({s, t}) == subgroups::full);
  CHECK(generated_by({s * t}) == subgroups::sigma_tau);
  CHECK(left_cosets(subgroups::tau).size() == 3);
}

TEST_CASE("orbits and node types") {
  auto a = prop51a_action();
  CHECK(a.orbit({ObjectKind::Edge, 0}).size() == 2);
  CHECK(a.classify_node(0) == NodeType::T3);
  auto hex = hexagon_action();
  CHECK(hex.orbit({ObjectKind::Vertex, 0}).size() == 6);
  for (int e = 0; e < 6; ++e) CHECK(hex.classify_node(e) == NodeType::T4);
  // free orbit of nodes: 6 isolated pairs glued in a hexagon with a free action
  check_orbit_stabilizer(a);
  check_orbit_stabilizer(hex);
  // full stabilizer fixing the node: one vertex with one loop, everything trivial
  auto bad = S3Action::trivial(DecoratedGraph({3}, {{0, 0}}));
  CHECK(bad.orbit({ObjectKind::Edge, 0}).size() == 1);
  CHECK_THROWS_AS(bad.classify_node(0), MalformedActionError);
}

TEST_CASE("invariant vectors") {
  auto iv = invariant_vector(prop51a_action());
  InvariantVector expect;
  expect.n[3] = 1;
  expect.c6 = 1;
  expect.s = 1;
  expect.delta = 2;
  CHECK(iv == expect);
  auto hv = invariant_vector(hexagon_action());
  CHECK(hv.c1 == 1);
  CHECK(hv.n[4] == 2);
  CHECK(hv.n[1] == 0);
  CHECK(hv.s == 6);
  CHECK(hv.delta == 6);
}

TEST_CASE("invalid generator data") {
  DecoratedGraph g({1, 1}, {{0, 1}});
  ActionGenerators gens;
  gens.sigma_vertex = {1, 0};  // order 2, violates sigma^3 = 1
  gens.tau_vertex = {0, 1};
  gens.sigma_half = {1, 0};
  gens.tau_half = {0, 1};
  CHECK_THROWS_AS(S3Action(g, gens), InvalidDataError);
  gens.sigma_vertex = {0, 1};
  gens.sigma_half = {0, 1};
  gens.tau_vertex = {0, 1};
  gens.tau_half = {1, 0};  // swaps branches without swapping vertices
  CHECK_THROWS_AS(S3Action(g, gens), InvalidDataError);
  // kernel tau is not normal in S3
  CHECK_THROWS_AS(S3Action::trivial(DecoratedGraph({2}), {subgroups::tau}), InvalidDataError);
}

TEST_CASE("enumerate actions") {
  ActionConstraints transitive;
  transitive.transitive = true;
  auto hex = enumerate_actions(hexagon(), transitive);
  REQUIRE(hex.size() == 1);
  CHECK(equivalent(hex[0], hexagon_action()));

  ActionConstraints nontriv;
  nontriv.nontrivial_on_vertices = true;
  auto pts = enumerate_actions(DecoratedGraph({0, 0, 0}), nontriv);
  CHECK(pts.size() == 2);
  bool has_cycle = false, has_fixed_sigma = false;
  for (const auto& a : pts) {
    if (a.orbit({ObjectKind::Vertex, 0}).size() == 3) has_cycle = true;
    if (a.vertex_image(GroupElement::sigma(), 0) == 0 && a.vertex_image(GroupElement::sigma(), 1) == 1) {
      has_fixed_sigma = true;
      // tau fixes one point and exchanges the other two
      int fixed = 0;
      for (int v = 0; v < 3; ++v) fixed += a.vertex_image(GroupElement::tau(), v) == v;
      CHECK(fixed == 1);
    }
  }
  CHECK(has_cycle);
  CHECK(has_fixed_sigma);

  ActionConstraints kern;
  kern.enumerate_kernels = true;
  CHECK(enumerate_actions(DecoratedGraph({2}), kern).size() == 3);
  kern.faithful = true;
  CHECK(enumerate_actions(DecoratedGraph({2}), kern).size() == 1);

  auto tri = enumerate_actions(DecoratedGraph({1, 1, 1}, {{0, 1}, {1, 2}, {2, 0}}), nontriv);
  CHECK_FALSE(tri.empty());
  for (const auto& a : tri) {
    bool bad = false;
    for (int e = 0; e < 3; ++e) {
      auto t = a.classify_node(e);
      bad = bad || t == NodeType::T4 || t == NodeType::T5;
    }
    CHECK(bad);
    check_orbit_stabilizer(a);
    for (const auto& orb : a.orbits(ObjectKind::Edge))
      for (int e : orb) CHECK(a.classify_node(e) == a.classify_node(orb.front()));
  }
  std::set<Certificate> certs;
  for (const auto& a : tri) certs.insert(action_certificate(a));
  CHECK(certs.size() == tri.size());
}
