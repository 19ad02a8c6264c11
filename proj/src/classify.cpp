#include "prymlab/classify.hpp"

#include <algorithm>
#include <sstream>

#include "prymlab/cover_io.hpp"
#include "prymlab/errors.hpp"
#include "prymlab/parallel.hpp"

namespace prymlab {

namespace {

struct KnownFamily {
  std::string base;
  int components;
  std::string label;
  int dimension;
};

const std::vector<KnownFamily>& known_families() {
  static const std::vector<KnownFamily> k{
      {"SMOOTH", 1, "SMOOTH", 3}, {"II", 1, "II-a", 2}, {"II", 2, "II-b", 2}, {"III", 2, "III", 1},
      {"IV", 2, "IV", 2},         {"V", 3, "V", 1},     {"VI", 4, "VI", 0},
  };
  return k;
}

// dual graphs drawn for three of the families
std::optional<DecoratedGraph> drawn_shape(const std::string& label) {
  if (label == "III") return DecoratedGraph({2, 2}, {{0, 0}, {1, 1}, {0, 1}, {0, 1}});
  if (label == "V") return DecoratedGraph({1, 1, 3}, {{0, 1}, {0, 1}, {0, 2}, {1, 2}});
  if (label == "VI") return DecoratedGraph({1, 1, 1, 1}, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {0, 2}, {1, 3}});
  return std::nullopt;
}

std::string failing_clause(const DoubleStarClauses& d) {
  if (!d.faithful_on_components) return "fails (**): a component has a nontrivial kernel";
  if (!d.genus_condition)
    return "fails (**): arithmetic genus " + std::to_string(d.pa_total) + " instead of " +
           std::to_string(6 * d.pa_base - 5);
  return "fails (**): toric ranks differ (b1(Y) = " + std::to_string(d.betti_y) +
         ", b1(X) = " + std::to_string(d.betti_base) + ")";
}

std::vector<OrbitGenus> genera_profile_of(const CoverDatum& c) {
  std::vector<OrbitGenus> out;
  for (int j = 0; j < c.base().num_vertices(); ++j) {
    OrbitGenus o;
    o.base_vertex = j;
    for (int v = 0; v < c.total().num_vertices(); ++v)
      if (c.vertex_to_base(v) == j) {
        o.genus = c.total().genus(v);
        ++o.components;
      }
    o.stabilizer_order = 6 / o.components;
    out.push_back(o);
  }
  return out;
}

std::vector<NodeOrbit> nodes_of(const CoverDatum& c) {
  std::vector<NodeOrbit> out;
  for (int k = 0; k < c.base().num_edges(); ++k) out.push_back({k, c.index_over(k), c.fiber_size(k)});
  return out;
}

std::string signature(const CoverDatum& c) {
  auto g = genera_profile_of(c);
  auto n = nodes_of(c);
  std::vector<std::array<int, 3>> gs;
  for (const auto& o : g) gs.push_back({o.components, o.genus, o.stabilizer_order});
  std::vector<std::array<int, 2>> ns;
  for (const auto& o : n) ns.push_back({o.index, o.fiber});
  std::sort(gs.begin(), gs.end());
  std::sort(ns.begin(), ns.end());
  std::ostringstream os;
  for (auto& x : gs) os << "v" << x[0] << "," << x[1] << "," << x[2] << ";";
  for (auto& x : ns) os << "e" << x[0] << "," << x[1] << ";";
  return os.str();
}

}  // namespace

int FamilyRecord::total_components() const { return datum.total().num_vertices(); }
int FamilyRecord::total_nodes() const { return datum.total().num_edges(); }

int family_dimension(const std::string& label) {
  for (const auto& k : known_families())
    if (k.label == label) return k.dimension;
  throw PreconditionError("no recorded moduli dimension for family '" + label + "'");
}

int family_dimension(const FamilyRecord& f) { return family_dimension(f.label); }

BaseEnumeration enumerate_covers(const BaseType& b, const EnumerationOptions& opts) {
  const auto& facts = existence_facts();
  BaseEnumeration out;
  out.base = b.label;
  std::map<std::pair<std::string, std::string>, int> log;
  std::map<Certificate, CoverDatum> survivors;

  auto blueprints = enumerate_blueprints(b.graph, opts.space);
  out.blueprints = static_cast<int>(blueprints.size());
  for (const auto& bp : blueprints) {
    auto built = build_candidate(b.graph, bp);
    if (!built.cover) {
      ++log[{built.rejection, ""}];
      continue;
    }
    ++out.built;
    const CoverDatum& c = *built.cover;
    if (!doublestar_equivalence(c).agree()) ++out.equivalence_disagreements;
    auto clauses = doublestar_clauses(c);
    if (!clauses.holds()) {
      ++log[{failing_clause(clauses), ""}];
      continue;
    }
    ++out.doublestar;
    std::vector<int> counts;
    for (const auto& v : bp.vertices) counts.push_back(6 / subgroup_order(v.stabilizer));
    FactVerdict verdict = facts.check(b.label, built.profiles, counts);
    if (verdict && (verdict.entry->kind == FactKind::Structural || opts.apply_axioms)) {
      std::string where = verdict.base_vertex >= 0 ? " (base component " + std::to_string(verdict.base_vertex) + ")" : "";
      ++log[{verdict.entry->statement + where, verdict.entry->id}];
      continue;
    }
    auto cert = action_certificate(c.action());
    if (survivors.count(cert)) {
      ++log[{"equivalent to an earlier candidate", ""}];
      continue;
    }
    survivors.emplace(std::move(cert), c);
  }
  out.distinct = static_cast<int>(survivors.size());
  for (const auto& [key, n] : log) out.rejections.push_back({key.first, key.second, n});

  // group by numerical data, keeping certificate order inside each group
  std::map<std::string, std::vector<const std::pair<const Certificate, CoverDatum>*>> groups;
  for (const auto& s : survivors) groups[signature(s.second)].push_back(&s);
  std::vector<FamilyRecord> fams;
  for (const auto& [sig, members] : groups) {
    FamilyRecord f;
    f.base = b.label;
    for (const auto* m : members)
      f.variants.push_back({m->second, m->first, rotation_audit(m->second.action()).balanced});
    f.datum = f.variants.front().datum;
    fams.push_back(std::move(f));
  }
  std::sort(fams.begin(), fams.end(), [](const FamilyRecord& x, const FamilyRecord& y) {
    return std::make_pair(x.total_components(), x.total_nodes()) < std::make_pair(y.total_components(), y.total_nodes());
  });
  int extra = 0;
  for (auto& f : fams) {
    for (const auto& k : known_families())
      if (k.base == b.label && k.components == f.total_components()) {
        f.label = k.label;
        f.moduli_dimension = k.dimension;
      }
    if (f.label.empty()) f.label = b.label + "-x" + std::to_string(++extra);
    if (auto shape = drawn_shape(f.label))
      for (std::size_t i = 0; i < f.variants.size(); ++i)
        if (isomorphic(f.variants[i].datum.total(), *shape)) {
          f.representative = static_cast<int>(i);
          break;
        }
    f.datum = f.variants[static_cast<std::size_t>(f.representative)].datum;
    f.genera_profile = genera_profile_of(f.datum);
    f.nodes = nodes_of(f.datum);
    if (check_star(f.datum) && b.label != "VII") f.prym = prym_report(f.datum);
  }
  out.families = std::move(fams);
  return out;
}

ClassificationReport classification_report(const EnumerationOptions& opts) {
  ClassificationReport r;
  const auto& cat = stable_genus2_catalog();
  r.bases = parallel_map<BaseEnumeration>(cat.size(), [&](std::size_t i) { return enumerate_covers(cat[i], opts); });
  for (const auto& e : r.bases) {
    if (e.base != "SMOOTH") r.singular_family_count += static_cast<int>(e.families.size());
    for (const auto& f : e.families) {
      if (!f.prym) continue;
      auto s = f.prym->stratum;
      if (f.moduli_dimension >= 0) {
        auto [it, fresh] = r.strata_dimensions.emplace(s, f.moduli_dimension);
        if (!fresh && it->second != f.moduli_dimension)
          throw VerificationError("families in stratum " + to_string(s) + " have different dimensions");
      }
    }
  }
  r.closure_facts = {"closure of R = R u S1 u S0"};
  bool ok = true;
  for (Stratum s : {Stratum::S1, Stratum::S0})
    if (prym_image_class(s) != ImageClass::E2) ok = false;
  for (Stratum s : {Stratum::Smooth, Stratum::R1, Stratum::R2, Stratum::S0, Stratum::S1, Stratum::S2}) {
    bool is_s = s == Stratum::S0 || s == Stratum::S1 || s == Stratum::S2;
    if ((prym_image_class(s) == ImageClass::E2) != is_s) ok = false;
  }
  r.closure_consistent = ok;
  return r;
}

nlohmann::ordered_json to_json(const FamilyRecord& f, bool with_datum) {
  nlohmann::ordered_json j;
  j["base"] = f.base;
  j["label"] = f.label;
  j["moduli_dimension"] = f.moduli_dimension;
  j["components"] = f.total_components();
  j["nodes"] = f.total_nodes();
  auto& gp = j["genera_profile"] = nlohmann::ordered_json::array();
  for (const auto& o : f.genera_profile)
    gp.push_back({{"base_vertex", o.base_vertex}, {"components", o.components}, {"genus", o.genus},
                  {"stabilizer_order", o.stabilizer_order}});
  auto& no = j["base_nodes"] = nlohmann::ordered_json::array();
  for (const auto& o : f.nodes) no.push_back({{"base_edge", o.base_edge}, {"index", o.index}, {"fiber", o.fiber}});
  if (f.prym) j["prym"] = to_json(*f.prym);
  auto& vs = j["variants"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < f.variants.size(); ++i)
    vs.push_back({{"representative", static_cast<int>(i) == f.representative},
                  {"rotation_balanced", f.variants[i].rotation_balanced},
                  {"dot", to_dot(f.variants[i].datum.total(), "Z")}});
  if (with_datum) j["cover"] = cover_to_json(f.datum);
  return j;
}

nlohmann::ordered_json to_json(const BaseEnumeration& e, bool with_datum) {
  nlohmann::ordered_json j;
  j["base"] = e.base;
  j["blueprints"] = e.blueprints;
  j["built"] = e.built;
  j["doublestar"] = e.doublestar;
  j["equivalence_disagreements"] = e.equivalence_disagreements;
  j["distinct"] = e.distinct;
  j["family_count"] = e.families.size();
  auto& fs = j["families"] = nlohmann::ordered_json::array();
  for (const auto& f : e.families) fs.push_back(to_json(f, with_datum));
  auto& rs = j["rejections"] = nlohmann::ordered_json::array();
  for (const auto& r : e.rejections) rs.push_back({{"reason", r.reason}, {"fact", r.fact}, {"count", r.count}});
  return j;
}

nlohmann::ordered_json to_json(const ClassificationReport& r) {
  nlohmann::ordered_json j;
  j["singular_family_count"] = r.singular_family_count;
  auto& sd = j["strata"] = nlohmann::ordered_json::array();
  for (const auto& [s, d] : r.strata_dimensions)
    sd.push_back({{"stratum", to_string(s)}, {"dimension", d}, {"image_class", to_string(prym_image_class(s))}});
  j["closure_facts"] = r.closure_facts;
  j["closure_consistent"] = r.closure_consistent;
  auto& bs = j["bases"] = nlohmann::ordered_json::array();
  for (const auto& e : r.bases) bs.push_back(to_json(e, false));
  return j;
}

std::string to_text(const BaseEnumeration& e) {
  std::ostringstream os;
  os << "base " << e.base << ": " << e.families.size() << (e.families.size() == 1 ? " family" : " families") << " ("
     << e.blueprints << " candidates, " << e.built << " built, " << e.doublestar << " satisfy (**), " << e.distinct
     << " after facts and equivalence)\n";
  for (const auto& f : e.families) {
    os << "  " << f.label << ": s=" << f.total_components() << " delta=" << f.total_nodes() << " dim="
       << f.moduli_dimension << "\n    components:";
    for (const auto& o : f.genera_profile)
      os << " [over X" << o.base_vertex << ": " << o.components << " x genus " << o.genus << ", stabilizer order "
         << o.stabilizer_order << "]";
    os << "\n    nodes:";
    for (const auto& o : f.nodes) os << " [over x" << o.base_edge << ": r=" << o.index << " delta=" << o.fiber << "]";
    os << "\n";
    if (f.prym)
      os << "    prym: dimP=" << f.prym->dimP << " kernel exponents (" << f.prym->toric_kernel_exponent << ","
         << f.prym->polarization_kernel_exponent << ") stratum " << to_string(f.prym->stratum) << " "
         << to_string(f.prym->structure.kind) << "\n";
    else
      os << "    prym: not reported (condition (*) fails or base has no stratum)\n";
    int balanced = 0;
    for (const auto& v : f.variants) balanced += v.rotation_balanced;
    os << "    variants: " << f.variants.size() << " (" << balanced << " with balanced rotation data; representative "
       << (f.variants[static_cast<std::size_t>(f.representative)].rotation_balanced ? "balanced" : "unbalanced")
       << ")\n";
  }
  os << "  rejections:\n";
  for (const auto& r : e.rejections)
    os << "    " << r.count << " x " << r.reason << (r.fact.empty() ? "" : " [" + r.fact + "]") << "\n";
  return os.str();
}

std::string to_text(const ClassificationReport& r) {
  std::ostringstream os;
  for (const auto& e : r.bases) os << to_text(e);
  os << "singular-base families: " << r.singular_family_count << "\nstrata:";
  for (const auto& [s, d] : r.strata_dimensions)
    os << " " << to_string(s) << "(dim " << d << ", " << to_string(prym_image_class(s)) << ")";
  os << "\nclosure:";
  for (const auto& c : r.closure_facts) os << " " << c << ";";
  os << (r.closure_consistent ? " consistent with image classes" : " INCONSISTENT") << "\n";
  return os.str();
}

}  // namespace prymlab
