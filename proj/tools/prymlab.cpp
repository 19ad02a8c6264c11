#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "prymlab/classify.hpp"
#include "prymlab/cover_io.hpp"
#include "prymlab/errors.hpp"
#include "prymlab/families.hpp"

using namespace prymlab;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw PreconditionError("cannot write " + p.string());
  out << text;
}

void write_family_files(const fs::path& dir, const BaseEnumeration& e) {
  fs::create_directories(dir);
  for (const auto& f : e.families) {
    write_file(dir / (lower(f.label) + ".json"), cover_to_json(f.datum).dump(2) + "\n");
    write_file(dir / (lower(f.label) + ".dot"), to_dot(f.datum.total(), "Z"));
  }
}

int run_catalog(bool dot) {
  for (const auto& b : stable_genus2_catalog()) {
    std::cout << b.label << ": genera [";
    const auto& g = b.graph;
    for (int v = 0; v < g.num_vertices(); ++v) std::cout << (v ? ", " : "") << g.genera()[v];
    std::cout << "], nodes [";
    for (int e = 0; e < g.num_edges(); ++e)
      std::cout << (e ? ", " : "") << g.edge(e).first << "-" << g.edge(e).second;
    std::cout << "], arithmetic genus " << arithmetic_genus_euler(g) << "\n";
    if (dot) std::cout << to_dot(g, b.label);
  }
  return kOk;
}

int run_classify(const std::string& base, bool json, bool dot, bool no_axioms, const std::string& out) {
  EnumerationOptions opts;
  opts.apply_axioms = !no_axioms;
  std::vector<BaseEnumeration> results;
  if (lower(base) == "all") {
    results = classification_report(opts).bases;
  } else {
    results.push_back(enumerate_covers(base_type(base), opts));
  }
  if (json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& e : results) j.push_back(to_json(e));
    std::cout << (results.size() == 1 ? j[0] : j).dump(2) << "\n";
  } else {
    for (const auto& e : results) {
      std::cout << to_text(e);
      if (dot)
        for (const auto& f : e.families) std::cout << to_dot(f.datum.total(), "Z");
    }
  }
  if (!out.empty())
    for (const auto& e : results) write_family_files(fs::path(out) / lower(e.base), e);
  return kOk;
}

int run_invariants(const std::string& path, bool json) {
  auto c = load_cover(path);
  auto base = identify_base(c.base());
  auto adm = check_admissible(c);
  bool star = adm.ok && check_star(c);
  bool dstar = adm.ok && check_doublestar(c);
  if (json) {
    nlohmann::ordered_json j;
    j["cover"] = path;
    j["base"] = base ? *base : "unknown";
    j["admissible"] = adm.ok;
    j["violations"] = adm.violations;
    j["star"] = star;
    j["doublestar"] = dstar;
    if (star && dstar) j["prym"] = to_json(prym_report(c));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "cover: " << path << "\n"
              << "base: " << (base ? *base : "unknown") << "\n"
              << "admissible: " << (adm.ok ? "yes" : "no") << ", (*): " << (star ? "yes" : "no")
              << ", (**): " << (dstar ? "yes" : "no") << "\n";
    for (const auto& v : adm.violations) std::cout << "  violation: " << v << "\n";
    if (star && dstar) {
      auto r = prym_report(c);
      std::cout << "dimP = " << r.dimP << "\n"
                << "dimT_tilde = " << r.dimT_tilde << ", dimT = " << r.dimT << "\n"
                << "kernel exponents (toric, polarization) = (" << r.toric_kernel_exponent << ","
                << r.polarization_kernel_exponent << ")\n"
                << "3x principal: " << (r.is_3x_principal ? "yes" : "no") << "\n"
                << "structure: " << to_string(r.structure.kind) << " (finite kernel exponent "
                << r.structure.finite_kernel_exponent << ")\n"
                << "stratum: " << to_string(r.stratum) << " (image class " << to_string(prym_image_class(r.stratum))
                << ")\n";
    }
  }
  if (!star) std::cerr << "cover does not satisfy (*); no Prym report\n";
  return star && dstar ? kOk : kFailed;
}

int run_verify_family(const std::string& name, const std::vector<std::string>& as, const std::string& b) {
  auto f = family_from_string(name);
  std::vector<Sample> samples;
  if (as.empty()) {
    samples = {{2, 3}, {5, 7}, {-1, 2}};
  } else {
    for (const auto& a : as) {
      Sample s{Rational::parse(a), Rational::parse(b)};
      if (!sample_legal(f, s)) throw PreconditionError("excluded parameter value a=" + a + ", b=" + b);
      samples.push_back(s);
    }
  }
  bool ok = false;
  auto j = family_report(f, samples, ok);
  std::cout << j.dump(2) << "\n";
  return ok ? kOk : kFailed;
}

int run_degree() {
  auto d = prym_degree_count();
  std::cout << d.classes << "\n";
  for (const auto& [t, c] : d.pairs)
    std::cout << "{w" << t[0] << ",w" << t[1] << ",w" << t[2] << "} ~ {w" << c[0] << ",w" << c[1] << ",w" << c[2]
              << "}\n";
  return d.classes == 10 ? kOk : kFailed;
}

int run_report(bool json, bool no_axioms, const std::string& out) {
  EnumerationOptions opts;
  opts.apply_axioms = !no_axioms;
  auto r = classification_report(opts);
  if (json)
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << to_text(r);
  if (!out.empty()) {
    fs::create_directories(out);
    write_file(fs::path(out) / "report.json", to_json(r).dump(2) + "\n");
    for (const auto& e : r.bases) write_family_files(fs::path(out) / lower(e.base), e);
  }
  return r.closure_consistent ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"S3-covers of stable genus 2 curves and their Prym data"};
  app.require_subcommand(1);

  bool dot = false, json = false, no_axioms = false;
  std::string base = "all", out, cover, name, b = "0";
  std::vector<std::string> as;

  auto* cat = app.add_subcommand("catalog", "list the stable genus 2 types");
  cat->add_flag("--dot", dot, "print dual graphs as DOT");

  auto* cls = app.add_subcommand("classify", "enumerate S3-covers satisfying (**) over a base type");
  cls->add_option("--base", base, "II..VII, smooth or all")->capture_default_str();
  cls->add_flag("--json", json, "JSON output");
  cls->add_flag("--dot", dot, "append DOT of each representative");
  cls->add_flag("--no-axioms", no_axioms, "ignore the axiom entries of the fact table");
  cls->add_option("--out", out, "directory for cover JSON and DOT files");

  auto* inv = app.add_subcommand("invariants", "Prym invariants of a cover");
  inv->add_option("--cover", cover, "cover JSON file")->required()->check(CLI::ExistingFile);
  inv->add_flag("--json", json, "JSON output");

  auto* ver = app.add_subcommand("verify-family", "symbolic checks of an explicit curve family");
  ver->add_option("--name", name, "QUARTIC_G3, HYPERELLIPTIC_G3 or GENUS2_ORDER3")->required();
  ver->add_option("--a", as, "parameter a (repeatable); default samples if omitted");
  ver->add_option("--b", b, "parameter b (quartic only)");

  app.add_subcommand("degree", "count of triples of Weierstrass points up to complement");

  auto* rep = app.add_subcommand("report", "full classification report");
  rep->add_flag("--json", json, "JSON output");
  rep->add_flag("--no-axioms", no_axioms, "ignore the axiom entries of the fact table");
  rep->add_option("--out", out, "directory for report and cover files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cat) return run_catalog(dot);
    if (*cls) return run_classify(base, json, dot, no_axioms, out);
    if (*inv) return run_invariants(cover, json);
    if (*ver) return run_verify_family(name, as, b);
    if (app.got_subcommand("degree")) return run_degree();
    if (*rep) return run_report(json, no_axioms, out);
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
