// Acceptance run: one PASS/FAIL line per criterion, then notes.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "prymlab/classify.hpp"
#include "prymlab/errors.hpp"
#include "prymlab/families.hpp"
#include "prymlab/parallel.hpp"

using namespace prymlab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<std::string> notes;

template <class F>
bool criterion(int id, const std::string& title, double limit_s, F&& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = limit_s <= 0 || s < limit_s;
  bool pass = o.pass && in_time;
  std::ostringstream line;
  line << (pass ? "PASS" : "FAIL") << "  " << id << ". " << title << ": " << o.detail << " [" << std::fixed
       << std::setprecision(2) << s << " s";
  if (limit_s > 0) line << " < " << limit_s << " s";
  line << "]";
  if (!in_time) line << " (over time limit)";
  std::cout << line.str() << std::endl;
  return pass;
}

std::string join(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

const std::vector<std::string> kSingularBases = {"II", "III", "IV", "V", "VI", "VII"};

Outcome classification_counts() {
  std::vector<int> counts;
  bool data_ok = true;
  std::map<std::string, BaseEnumeration> by_base;
  for (const auto& b : kSingularBases) {
    by_base[b] = enumerate_covers(base_type(b));
    counts.push_back(static_cast<int>(by_base[b].families.size()));
  }
  // (label, components, genera of the orbits, node fibers) as in the source
  struct Expect {
    std::string base, label;
    int components;
    std::vector<int> genera;
    std::vector<int> fibers;
  };
  std::vector<Expect> expect = {{"II", "II-a", 1, {5}, {2}},          {"II", "II-b", 2, {3}, {2}},
                                {"III", "III", 2, {2}, {2, 2}},       {"IV", "IV", 2, {3, 3}, {2}},
                                {"V", "V", 3, {1, 3}, {2, 2}},        {"VI", "VI", 4, {1, 1}, {2, 2, 2}}};
  for (const auto& e : expect) {
    const FamilyRecord* f = nullptr;
    for (const auto& r : by_base[e.base].families)
      if (r.label == e.label) f = &r;
    if (!f) {
      data_ok = false;
      continue;
    }
    std::vector<int> genera, fibers;
    for (const auto& o : f->genera_profile) genera.push_back(o.genus);
    bool r3 = true;
    for (const auto& n : f->nodes) {
      fibers.push_back(n.fiber);
      r3 = r3 && n.index == 3;
    }
    if (f->total_components() != e.components || genera != e.genera || fibers != e.fibers || !r3) data_ok = false;
  }
  bool ok = counts == std::vector<int>{2, 1, 1, 1, 1, 0} && data_ok;
  return {ok, "families over II..VII = " + join(counts) + (data_ok ? ", (s, r, delta, genera) match" : ", data mismatch")};
}

Outcome equivalence() {
  int built = 0, disagreements = 0, blueprints = 0;
  EnumerationOptions opts;
  opts.space = {true, true};
  for (const auto& b : stable_genus2_catalog()) {
    auto e = enumerate_covers(b, opts);
    built += e.built;
    blueprints += e.blueprints;
    disagreements += e.equivalence_disagreements;
  }
  return {disagreements == 0 && built >= 1000,
          std::to_string(built) + " built candidates (" + std::to_string(blueprints) + " blueprints), " +
              std::to_string(disagreements) + " disagreements"};
}

Outcome doublestar_implies_star() {
  int covers = 0, exceptions = 0;
  for (const auto& b : stable_genus2_catalog())
    for (const auto& f : enumerate_covers(b).families)
      for (const auto& v : f.variants) {
        ++covers;
        if (!check_doublestar(v.datum)) ++exceptions;  // should never happen
        if (!check_star(v.datum)) ++exceptions;
      }
  // raw candidates, for the record
  EnumerationOptions raw;
  raw.space = {true, true};
  raw.apply_axioms = false;
  std::vector<std::string> raw_exceptions;
  for (const auto& b : stable_genus2_catalog())
    for (const auto& f : enumerate_covers(b, raw).families)
      for (const auto& v : f.variants)
        if (!check_star(v.datum))
          raw_exceptions.push_back(f.label + " (" + std::to_string(f.total_components()) + " components, rotation data " +
                                   (v.rotation_balanced ? "balanced" : "unbalanced") + ")");
  if (!raw_exceptions.empty()) {
    std::string n = "criterion 3: without the axiom entries, (**) covers with non-type-3 nodes exist: ";
    for (std::size_t i = 0; i < raw_exceptions.size(); ++i) n += (i ? "; " : "") + raw_exceptions[i];
    n += ". The balanced one over IV is excluded only by the unconfirmed axiom iv-three-three.";
    notes.push_back(n);
  }
  return {exceptions == 0 && covers > 0,
          std::to_string(covers) + " enumerated (**) covers, " + std::to_string(exceptions) + " with a non-type-3 node"};
}

Outcome prym_invariants() {
  bool ok = true;
  std::vector<int> toric;
  int checked = 0;
  for (const auto& b : kSingularBases) {
    auto e = enumerate_covers(base_type(b));
    for (const auto& f : e.families) {
      for (const auto& v : f.variants) {
        auto r = prym_report(v.datum);
        ++checked;
        ok = ok && r.dimP == 2 && r.polarization_kernel_exponent == 4;
      }
      if (f.label != "II-b") toric.push_back(f.prym->toric_kernel_exponent);
      else ok = ok && f.prym->toric_kernel_exponent == 1;
    }
  }
  ok = ok && toric == std::vector<int>{1, 2, 0, 1, 2};
  return {ok, std::to_string(checked) + " covers with dimP = 2 and |ker| = 3^4 = 81; toric exponents II..VI " +
                  join(toric)};
}

Outcome degree_count() {
  auto d = prym_degree_count();
  return {d.subsets == 20 && d.classes == 10 && d.pairs.size() == 10,
          std::to_string(d.subsets) + " triples paired into " + std::to_string(d.classes) + " classes"};
}

Outcome hexagon() {
  DecoratedGraph g({2, 2, 2, 2, 2, 2}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  ActionConstraints c;
  c.transitive = true;
  auto actions = enumerate_actions(g, c);
  auto printed = action_from_vertex_permutations(g, {2, 3, 4, 5, 0, 1}, {1, 0, 5, 4, 3, 2});
  bool match = actions.size() == 1 && equivalent(actions[0], printed);
  return {match, std::to_string(actions.size()) + " transitive action(s), " +
                     (match ? "equivalent to sigma=(Z1 Z3 Z5)(Z2 Z4 Z6), tau=(Z1 Z2)(Z3 Z6)(Z4 Z5)" : "mismatch")};
}

Outcome triangle() {
  DecoratedGraph g({1, 1, 1}, {{0, 1}, {1, 2}, {2, 0}});
  int total = 0, obstructed = 0, malformed = 0;
  std::set<Certificate> seen;
  for (bool nontriv : {false, true}) {
    ActionConstraints c;
    c.nontrivial_on_vertices = nontriv;
    for (const auto& a : enumerate_actions(g, c)) {
      if (!seen.insert(action_certificate(a)).second) continue;
      bool bad = false;
      try {
        for (int e = 0; e < 3; ++e) {
          auto t = a.classify_node(e);
          bad = bad || t == NodeType::T4 || t == NodeType::T5;
        }
      } catch (const MalformedActionError&) {
        ++malformed;  // S3 fixes a node without exchanging its branches: no nodal curve has this
        continue;
      }
      ++total;
      obstructed += bad;
    }
  }
  return {total > 0 && obstructed == total,
          std::to_string(obstructed) + " of " + std::to_string(total) +
              " actions have a type-4 or type-5 node (" + std::to_string(malformed) + " malformed skipped)"};
}

Outcome symbolic_suite() {
  const std::vector<Sample> samples = {{2, 3}, {5, 7}, {-1, 2}};
  const std::vector<FamilyName> fams = {FamilyName::QuarticG3, FamilyName::HyperellipticG3, FamilyName::Genus2Order3};
  bool ok = true;
  std::vector<int> counts, genera;
  std::string tau_note;
  for (auto f : fams) {
    bool fam_ok = false;
    auto j = family_report(f, samples, fam_ok);
    ok = ok && fam_ok;
    std::set<int> c, g;
    for (const auto& s : j["samples"]) {
      if (s.contains("skipped")) continue;
      c.insert(s["sigma_fixed_points"]["count"].get<int>());
      g.insert(s["sigma_quotient_genus"].get<int>());
      if (f == FamilyName::QuarticG3) {
        int t = s["tau_fixed_points"]["count"].get<int>();
        int gq = s["tau_quotient_genus"].get<int>();
        ok = ok && t == 8 - 4 * gq;
        tau_note = "tau on QUARTIC_G3 fixes " + std::to_string(t) + " points (printed 8), quotient genus " +
                   std::to_string(gq);
      }
    }
    ok = ok && c.size() == 1 && g.size() == 1;
    counts.push_back(c.empty() ? -1 : *c.begin());
    genera.push_back(g.empty() ? -1 : *g.begin());
  }
  auto search = certify_tau_exponent({2, 0});
  ok = ok && counts == std::vector<int>{2, 2, 4} && genera == std::vector<int>{1, 1, 0};
  notes.push_back("criterion 8: " + tau_note + "; the count disagrees with the printed value and is consistent with Hurwitz.");
  notes.push_back("criterion 8: HYPERELLIPTIC_G3 tau uses y -> -a^2 x^" + std::to_string(kHyperellipticTauExponent) +
                  " y, the only invariant exponent in [-4,4]; the printed exponent " +
                  std::to_string(kPrintedTauExponent) + (search.printed_passes ? " also passes." : " fails."));
  notes.push_back("criterion 8: GENUS2_ORDER3 skips a = -1 (a 6th root of unity).");
  return {ok, "relations and invariance hold; sigma fixed points " + join(counts) + ", quotient genera " + join(genera)};
}

Outcome strata_report() {
  auto r = classification_report();
  std::vector<int> dims;
  std::vector<std::string> classes;
  for (auto s : {Stratum::Smooth, Stratum::R2, Stratum::R1, Stratum::S2, Stratum::S1, Stratum::S0}) {
    dims.push_back(r.strata_dimensions.count(s) ? r.strata_dimensions.at(s) : -1);
    classes.push_back(to_string(prym_image_class(s)));
  }
  bool closure = false;
  for (const auto& f : r.closure_facts) closure = closure || (f.find("S1") != std::string::npos && f.find("S0") != std::string::npos);
  bool ok = dims == std::vector<int>{3, 2, 1, 2, 1, 0} &&
            classes == std::vector<std::string>{"J2_u", "J2_r", "J2_r", "E2", "E2", "E2"} && closure &&
            r.closure_consistent;
  std::string cls;
  for (std::size_t i = 0; i < classes.size(); ++i) cls += (i ? "," : "") + classes[i];
  return {ok, "dimensions " + join(dims) + ", image classes (" + cls + "), closure facts asserted"};
}

}  // namespace

int main() {
  std::cout << "worker threads: " << worker_count() << "\n";
  int failed = 0;
  failed += !criterion(1, "classification counts", 10, classification_counts);
  failed += !criterion(2, "equivalence over the candidate space", 60, equivalence);
  failed += !criterion(3, "(**) implies (*)", 0, doublestar_implies_star);
  failed += !criterion(4, "Prym invariants", 0, prym_invariants);
  failed += !criterion(5, "degree count", 0, degree_count);
  failed += !criterion(6, "hexagon uniqueness", 0, hexagon);
  failed += !criterion(7, "triangle obstruction", 0, triangle);
  failed += !criterion(8, "symbolic suite", 5, symbolic_suite);
  failed += !criterion(9, "stratification report", 0, strata_report);
  notes.push_back(
      "criteria 1, 3: the classification uses three axiom entries taken from the source (sep-six, iv-three-three, "
      "vii-two-two). Rotation balancing confirms sep-six and vii-two-two; iv-three-three is unconfirmed.");
  notes.push_back(
      "criterion 1: rotation balancing fails for the II-b family and for the drawn III shape (the other III variant "
      "balances); families are counted as in the source.");
  std::cout << "\nnotes:\n";
  for (const auto& n : notes) std::cout << "  - " << n << "\n";
  std::cout << "\n" << (9 - failed) << "/9 criteria pass\n";
  return failed == 0 ? 0 : 1;
}
