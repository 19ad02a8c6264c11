#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "prymlab/classify.hpp"
#include "prymlab/errors.hpp"
#include "support.hpp"

using namespace prymlab;
using testsupport::fixture;

namespace {

const FamilyRecord& family(const BaseEnumeration& e, const std::string& label) {
  for (const auto& f : e.families)
    if (f.label == label) return f;
  FAIL("missing family " << label);
  throw PreconditionError(label);
}

bool has_rejection(const BaseEnumeration& e, const std::string& text, const std::string& fact = "") {
  return std::any_of(e.rejections.begin(), e.rejections.end(), [&](const RejectionRecord& r) {
    return r.reason.find(text) != std::string::npos && (fact.empty() || r.fact == fact);
  });
}

}  // namespace

TEST_CASE("family counts per base") {
  std::vector<int> counts;
  for (const auto& label : {"II", "III", "IV", "V", "VI", "VII"})
    counts.push_back(static_cast<int>(enumerate_covers(base_type(label)).families.size()));
  CHECK(counts == std::vector<int>{2, 1, 1, 1, 1, 0});
  CHECK(enumerate_covers(base_type("SMOOTH")).families.size() == 1);
}

TEST_CASE("numerical data of the families") {
  auto ii = enumerate_covers(base_type("II"));
  const auto& a = family(ii, "II-a");
  CHECK(a.total_components() == 1);
  CHECK(a.genera_profile == std::vector<OrbitGenus>{{0, 1, 5, 6}});
  CHECK(a.nodes == std::vector<NodeOrbit>{{0, 3, 2}});
  const auto& b = family(ii, "II-b");
  CHECK(b.total_components() == 2);
  CHECK(b.genera_profile == std::vector<OrbitGenus>{{0, 2, 3, 3}});
  CHECK(b.nodes == std::vector<NodeOrbit>{{0, 3, 2}});

  auto iii = enumerate_covers(base_type("III"));
  CHECK(iii.families[0].total_components() == 2);
  CHECK(iii.families[0].total_nodes() == 4);
  for (const auto& n : iii.families[0].nodes) CHECK(n.index == 3);

  auto iv = enumerate_covers(base_type("IV"));
  CHECK(iv.families[0].genera_profile == std::vector<OrbitGenus>{{0, 1, 3, 6}, {1, 1, 3, 6}});

  auto v = enumerate_covers(base_type("V"));
  CHECK(v.families[0].genera_profile == std::vector<OrbitGenus>{{0, 2, 1, 3}, {1, 1, 3, 6}});
  CHECK(v.families[0].total_nodes() == 4);

  auto vi = enumerate_covers(base_type("VI"));
  const auto& f = vi.families[0];
  CHECK(f.total_components() == 4);
  for (const auto& o : f.genera_profile) {
    CHECK(o.components == 2);
    CHECK(o.genus == 1);
  }
  for (const auto& n : f.nodes) CHECK(n.index == 3);
  CHECK(f.total_nodes() == 6);

  CHECK(enumerate_covers(base_type("VII")).families.empty());
}

TEST_CASE("Prym data of every family") {
  std::map<std::string, int> toric;
  for (const auto& b : stable_genus2_catalog())
    for (const auto& f : enumerate_covers(b).families) {
      REQUIRE(f.prym.has_value());
      CHECK(f.prym->dimP == 2);
      CHECK(f.prym->polarization_kernel_exponent == 4);
      toric[f.label] = f.prym->toric_kernel_exponent;
      for (const auto& v : f.variants) CHECK(check_star(v.datum));
    }
  CHECK(toric == std::map<std::string, int>{{"SMOOTH", 0}, {"II-a", 1}, {"II-b", 1}, {"III", 2},
                                            {"IV", 0}, {"V", 1}, {"VI", 2}});
}

TEST_CASE("rejection log") {
  auto iv = enumerate_covers(base_type("IV"));
  CHECK(has_rejection(iv, "no connected graph with 4 vertices and 2 edges"));
  CHECK(has_rejection(iv, "", "c3-single"));
  CHECK(has_rejection(iv, "", "iv-three-three"));
  auto vii = enumerate_covers(base_type("VII"));
  CHECK(has_rejection(vii, "", "vii-two-two"));
  CHECK(has_rejection(vii, "fails (**)"));
  for (const auto& r : iv.rejections) CHECK(r.count > 0);
}

TEST_CASE("representatives are the drawn shapes") {
  for (const auto& [label, name] : std::vector<std::pair<std::string, std::string>>{
           {"SMOOTH", "smooth"}, {"II", "ii-a"}, {"II", "ii-b"}, {"III", "iii"}, {"IV", "iv"}, {"V", "v"}, {"VI", "vi"}}) {
    auto e = enumerate_covers(base_type(label));
    auto want = action_certificate(fixture(name).action());
    bool found = false;
    for (const auto& f : e.families) found = found || action_certificate(f.datum.action()) == want;
    CHECK_MESSAGE(found, name);
  }
  auto iii = enumerate_covers(base_type("III")).families[0];
  CHECK(iii.variants.size() == 2);
  // drawn shape: two genus-2 components, each with a loop, joined by two nodes
  const auto& z = iii.datum.total();
  CHECK(z.genera() == std::vector<int>{2, 2});
  int loops = 0;
  for (int e = 0; e < z.num_edges(); ++e) loops += z.edge(e).first == z.edge(e).second;
  CHECK(loops == 2);
}

TEST_CASE("family dimensions") {
  CHECK(family_dimension("II-a") == 2);
  CHECK(family_dimension("II-b") == 2);
  CHECK(family_dimension("III") == 1);
  CHECK(family_dimension("IV") == 2);
  CHECK(family_dimension("V") == 1);
  CHECK(family_dimension("VI") == 0);
  CHECK(family_dimension("SMOOTH") == 3);
  CHECK_THROWS_AS(family_dimension("VIII"), PreconditionError);
}

TEST_CASE("classification report") {
  auto r = classification_report();
  CHECK(r.bases.size() == 7);
  CHECK(r.singular_family_count == 6);
  CHECK(r.strata_dimensions == std::map<Stratum, int>{{Stratum::Smooth, 3}, {Stratum::R2, 2}, {Stratum::R1, 1},
                                                      {Stratum::S2, 2}, {Stratum::S1, 1}, {Stratum::S0, 0}});
  CHECK(r.closure_consistent);
  REQUIRE(r.closure_facts.size() == 1);
  CHECK(r.closure_facts[0].find("S1") != std::string::npos);
  CHECK(to_json(r).dump() == to_json(classification_report()).dump());
  CHECK(to_text(r) == to_text(classification_report()));
  CHECK(to_text(r).find("base VII: 0 families") != std::string::npos);
}

TEST_CASE("equivalence over the candidate space") {
  for (const auto& b : stable_genus2_catalog()) {
    EnumerationOptions opts;
    opts.space = testsupport::full_space();
    auto e = enumerate_covers(b, opts);
    CHECK_MESSAGE(e.equivalence_disagreements == 0, b.label);
    CHECK(e.built > 0);
  }
}

TEST_CASE("without the axiom entries") {
  EnumerationOptions opts;
  opts.apply_axioms = false;
  std::vector<std::string> extra;
  for (const auto& b : stable_genus2_catalog())
    for (const auto& f : enumerate_covers(b, opts).families)
      if (f.label.find("-x") != std::string::npos) {
        extra.push_back(f.label);
        CHECK(f.moduli_dimension == -1);
      }
  CHECK(extra == std::vector<std::string>{"IV-x1", "V-x1", "VII-x1"});
  auto iv = enumerate_covers(base_type("IV"), opts);
  const auto& x = family(iv, "IV-x1");
  CHECK(x.total_components() == 6);
  CHECK_FALSE(x.prym.has_value());
  CHECK(x.variants[0].rotation_balanced);
  auto v = enumerate_covers(base_type("V"), opts);
  CHECK_FALSE(family(v, "V-x1").variants[0].rotation_balanced);
}
