#include "prymlab/cover_io.hpp"

#include <fstream>
#include <map>

#include "prymlab/errors.hpp"

namespace prymlab {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& msg) {
  throw InvalidDataError("cover JSON field '" + field + "': " + msg);
}

const Json& need(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad(where + "." + key, "missing");
  return j.at(key);
}

std::vector<int> int_list(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) bad(where, "expected an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

Json swap_table(const S3Action& a) {
  Json out = Json::array();
  for (int e = 0; e < a.graph().num_edges(); ++e) {
    Subgroup stab = a.stabilizer({ObjectKind::Edge, e});
    if (stab == subgroups::trivial) continue;
    Json swapped = Json::array();
    for (const auto& g : s3_elements())
      if (contains(stab, g) && a.swaps_branches(g, e)) swapped.push_back(g.name());
    Json row;
    row["edge"] = e;
    row["stabilizer"] = subgroup_name(stab);
    row["swapped_by"] = swapped;
    out.push_back(row);
  }
  return out;
}

Json images(const S3Action& a, GroupElement g) {
  const auto& z = a.graph();
  Json j;
  Json v = Json::array(), e = Json::array(), h = Json::array();
  for (int i = 0; i < z.num_vertices(); ++i) v.push_back(a.vertex_image(g, i));
  for (int i = 0; i < z.num_edges(); ++i) e.push_back(a.edge_image(g, i));
  for (int i = 0; i < z.num_half_edges(); ++i) h.push_back(a.half_edge_image(g, i));
  j["vertices"] = v;
  j["edges"] = e;
  j["half_edges"] = h;
  return j;
}

}  // namespace

Json graph_to_json(const DecoratedGraph& g) {
  Json j;
  Json vs = Json::array(), es = Json::array();
  for (int v = 0; v < g.num_vertices(); ++v) {
    Json x;
    x["id"] = v;
    x["genus"] = g.genus(v);
    vs.push_back(x);
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    Json x;
    x["id"] = e;
    x["ends"] = Json::array({g.edge(e).first, g.edge(e).second});
    es.push_back(x);
  }
  j["vertices"] = vs;
  j["edges"] = es;
  return j;
}

DecoratedGraph graph_from_json(const Json& j, const std::string& where) {
  const auto& vs = need(j, "vertices", where);
  const auto& es = need(j, "edges", where);
  if (!vs.is_array() || !es.is_array()) bad(where, "vertices and edges must be arrays");
  std::vector<int> genera(vs.size(), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto& id = need(vs[i], "id", where + ".vertices");
    const auto& gen = need(vs[i], "genus", where + ".vertices");
    if (!id.is_number_integer() || id.get<int>() != static_cast<int>(i)) bad(where + ".vertices", "ids must be 0, 1, ... in order");
    if (!gen.is_number_integer() || gen.get<int>() < 0) bad(where + ".vertices", "genus must be a non-negative integer");
    genera[i] = gen.get<int>();
  }
  DecoratedGraph g(genera);
  for (std::size_t i = 0; i < es.size(); ++i) {
    const auto& id = need(es[i], "id", where + ".edges");
    if (!id.is_number_integer() || id.get<int>() != static_cast<int>(i)) bad(where + ".edges", "ids must be 0, 1, ... in order");
    auto ends = int_list(need(es[i], "ends", where + ".edges"), where + ".edges.ends");
    if (ends.size() != 2) bad(where + ".edges.ends", "an edge has exactly two ends");
    for (int x : ends)
      if (x < 0 || x >= g.num_vertices()) bad(where + ".edges.ends", "unknown vertex " + std::to_string(x));
    g.add_edge(ends[0], ends[1]);
  }
  return g;
}

Json cover_to_json(const CoverDatum& c) {
  const auto& a = c.action();
  const auto& z = c.total();
  Json j;
  j["schema"] = kCoverSchema;
  j["base"] = graph_to_json(c.base());
  j["total"] = graph_to_json(z);
  Json act;
  act["sigma"] = images(a, GroupElement::sigma());
  act["tau"] = images(a, GroupElement::tau());
  act["branch_swaps"] = swap_table(a);
  Json kernels = Json::array();
  for (Subgroup k : a.kernels()) kernels.push_back(subgroup_name(k));
  act["kernels"] = kernels;
  Json pts = Json::array();
  for (int p = 0; p < a.num_points(); ++p) {
    Json x;
    x["vertex"] = a.point_vertex(p);
    x["sigma"] = a.point_image(GroupElement::sigma(), p);
    x["tau"] = a.point_image(GroupElement::tau(), p);
    pts.push_back(x);
  }
  act["smooth_points"] = pts;
  j["action"] = act;
  Json quot;
  quot["vertices"] = c.quotient().vertex_map;
  Json em = Json::array();
  for (int e : c.quotient().edge_map) em.push_back(e < 0 ? Json(nullptr) : Json(e));
  quot["edges"] = em;
  j["quotient"] = quot;
  j["ramification"] = c.ramification();
  return j;
}

CoverDatum cover_from_json(const Json& j) {
  if (!j.is_object()) bad("<root>", "expected an object");
  const auto& schema = need(j, "schema", "<root>");
  if (!schema.is_string() || schema.get<std::string>() != kCoverSchema) bad("schema", "expected \"cover-v1\"");
  static const std::vector<std::string> known{"schema", "base", "total", "action", "quotient", "ramification"};
  for (const auto& [key, value] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end()) bad(key, "unknown field");

  DecoratedGraph z = graph_from_json(need(j, "total", "<root>"), "total");
  const auto& act = need(j, "action", "<root>");
  ActionGenerators gens;
  const auto& sg = need(act, "sigma", "action");
  const auto& tg = need(act, "tau", "action");
  gens.sigma_vertex = int_list(need(sg, "vertices", "action.sigma"), "action.sigma.vertices");
  gens.sigma_half = int_list(need(sg, "half_edges", "action.sigma"), "action.sigma.half_edges");
  gens.tau_vertex = int_list(need(tg, "vertices", "action.tau"), "action.tau.vertices");
  gens.tau_half = int_list(need(tg, "half_edges", "action.tau"), "action.tau.half_edges");
  if (act.contains("kernels")) {
    const auto& ks = act.at("kernels");
    if (!ks.is_array()) bad("action.kernels", "expected an array of subgroup names");
    for (const auto& k : ks) {
      if (!k.is_string()) bad("action.kernels", "expected an array of subgroup names");
      try {
        gens.kernels.push_back(subgroup_from_name(k.get<std::string>()));
      } catch (const InvalidDataError& e) {
        bad("action.kernels", e.what());
      }
    }
  }
  if (act.contains("smooth_points")) {
    const auto& ps = act.at("smooth_points");
    if (!ps.is_array()) bad("action.smooth_points", "expected an array");
    for (const auto& p : ps) {
      for (const char* key : {"vertex", "sigma", "tau"})
        if (!need(p, key, "action.smooth_points").is_number_integer()) bad("action.smooth_points", "integers expected");
      gens.point_vertex.push_back(p.at("vertex").get<int>());
      gens.sigma_point.push_back(p.at("sigma").get<int>());
      gens.tau_point.push_back(p.at("tau").get<int>());
    }
  }
  S3Action action;
  try {
    action = S3Action(z, gens);
  } catch (const InvalidDataError& e) {
    bad("action", e.what());
  }
  for (auto [name, g] : {std::pair<const char*, GroupElement>{"sigma", GroupElement::sigma()}, {"tau", GroupElement::tau()}}) {
    const auto& gj = act.at(name);
    if (gj.contains("edges")) {
      auto edges = int_list(gj.at("edges"), std::string("action.") + name + ".edges");
      if (static_cast<int>(edges.size()) != z.num_edges()) bad(std::string("action.") + name + ".edges", "wrong length");
      for (int e = 0; e < z.num_edges(); ++e)
        if (edges[static_cast<std::size_t>(e)] != action.edge_image(g, e))
          bad(std::string("action.") + name + ".edges", "inconsistent with half-edge images at edge " + std::to_string(e));
    }
  }
  if (act.contains("branch_swaps") && act.at("branch_swaps") != swap_table(action))
    bad("action.branch_swaps", "inconsistent with the half-edge images");

  CoverDatum c;
  try {
    c = CoverDatum(action);
  } catch (const InvalidDataError& e) {
    bad("action", e.what());
  }

  DecoratedGraph x = graph_from_json(need(j, "base", "<root>"), "base");
  if (x.num_vertices() != c.base().num_vertices() || x.num_edges() != c.base().num_edges())
    bad("base", "does not match the quotient of the total graph by the action");
  if (j.contains("quotient")) {
    const auto& q = j.at("quotient");
    auto vm = int_list(need(q, "vertices", "quotient"), "quotient.vertices");
    if (static_cast<int>(vm.size()) != z.num_vertices()) bad("quotient.vertices", "wrong length");
    std::map<int, int> fwd, back;
    for (int v = 0; v < z.num_vertices(); ++v) {
      int mine = c.vertex_to_base(v), theirs = vm[static_cast<std::size_t>(v)];
      if ((fwd.count(mine) && fwd[mine] != theirs) || (back.count(theirs) && back[theirs] != mine))
        bad("quotient.vertices", "not constant on orbits or not injective on orbits");
      fwd[mine] = theirs;
      back[theirs] = mine;
      if (theirs < 0 || theirs >= x.num_vertices() || x.genus(theirs) != c.base().genus(mine))
        bad("quotient.vertices", "vertex " + std::to_string(v) + " maps to a base vertex of the wrong genus");
    }
    const auto& em = need(q, "edges", "quotient");
    if (!em.is_array() || static_cast<int>(em.size()) != z.num_edges()) bad("quotient.edges", "wrong length");
    std::map<int, int> efwd;
    for (int e = 0; e < z.num_edges(); ++e) {
      int mine = c.edge_to_base(e);
      const auto& t = em[static_cast<std::size_t>(e)];
      if (mine < 0) {
        if (!t.is_null()) bad("quotient.edges", "edge " + std::to_string(e) + " maps to a smooth point; expected null");
        continue;
      }
      if (!t.is_number_integer()) bad("quotient.edges", "edge " + std::to_string(e) + " must map to a base edge");
      int theirs = t.get<int>();
      if (efwd.count(mine) && efwd[mine] != theirs) bad("quotient.edges", "not constant on orbits");
      efwd[mine] = theirs;
      if (theirs < 0 || theirs >= x.num_edges()) bad("quotient.edges", "unknown base edge");
      auto [u, w] = c.base().edge(mine);
      auto [tu, tw] = x.edge(theirs);
      bool same = (fwd[u] == tu && fwd[w] == tw) || (fwd[u] == tw && fwd[w] == tu);
      if (!same) bad("quotient.edges", "edge " + std::to_string(e) + " maps to a base edge with the wrong ends");
    }
  } else if (!isomorphic(x, c.base())) {
    bad("base", "does not match the quotient of the total graph by the action");
  }
  if (j.contains("ramification")) {
    auto r = int_list(j.at("ramification"), "ramification");
    if (r != c.ramification()) bad("ramification", "indices differ from |Stab(branch)|");
  }
  return c;
}

CoverDatum load_cover(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidDataError("cannot open cover file '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidDataError("cover file '" + path + "' is not valid JSON: " + e.what());
  }
  return cover_from_json(j);
}

void save_cover(const CoverDatum& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidDataError("cannot write '" + path + "'");
  out << cover_to_json(c).dump(2) << "\n";
}

}  // namespace prymlab
