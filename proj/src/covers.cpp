#include "prymlab/covers.hpp"

#include <algorithm>

#include "prymlab/errors.hpp"

namespace prymlab {

namespace {

std::vector<int> h_orbit(const S3Action& a, ObjectKind kind, int id, Subgroup h) {
  std::vector<int> o;
  for (const auto& g : s3_elements())
    if (contains(h, g)) o.push_back(a.image(g, {kind, id}));
  std::sort(o.begin(), o.end());
  o.erase(std::unique(o.begin(), o.end()), o.end());
  return o;
}

}  // namespace

QuotientGraph quotient_by(const S3Action& a, Subgroup h) {
  const auto& z = a.graph();
  QuotientGraph q;
  q.vertex_map.assign(static_cast<std::size_t>(z.num_vertices()), -1);
  q.edge_map.assign(static_cast<std::size_t>(z.num_edges()), -1);
  q.half_edge_map.assign(static_cast<std::size_t>(z.num_half_edges()), -1);

  for (int v = 0; v < z.num_vertices(); ++v) {
    if (q.vertex_map[static_cast<std::size_t>(v)] >= 0) continue;
    Subgroup hv = a.stabilizer({ObjectKind::Vertex, v}) & h;
    Subgroup kv = a.kernel(v) & h;
    int m = subgroup_order(hv) / subgroup_order(kv);
    int branch = 0;
    for (int he : z.half_edges_at(v))
      branch += subgroup_order(a.stabilizer({ObjectKind::HalfEdge, he}) & h) / subgroup_order(kv) - 1;
    for (int p = 0; p < a.num_points(); ++p)
      if (a.point_vertex(p) == v) branch += subgroup_order(a.stabilizer({ObjectKind::Point, p}) & h) / subgroup_order(kv) - 1;
    int lhs = 2 * z.genus(v) - 2 - branch;
    if (lhs % m != 0 || (lhs / m + 2) % 2 != 0 || lhs / m + 2 < 0)
      throw InvalidDataError("Hurwitz formula has no integral solution on component " + std::to_string(v) +
                             " for subgroup " + subgroup_name(h));
    int id = q.graph.add_vertex((lhs / m + 2) / 2);
    for (int w : h_orbit(a, ObjectKind::Vertex, v, h)) q.vertex_map[static_cast<std::size_t>(w)] = id;
  }

  for (int e = 0; e < z.num_edges(); ++e) {
    if (q.edge_map[static_cast<std::size_t>(e)] >= 0) continue;
    auto orb = h_orbit(a, ObjectKind::Edge, e, h);
    bool swapped = false;
    for (const auto& g : s3_elements())
      if (contains(h, g) && a.half_edge_image(g, 2 * e) == 2 * e + 1) swapped = true;
    if (swapped) continue;  // stays -1; handled as visited via the orbit below
    int u = q.vertex_map[static_cast<std::size_t>(z.vertex_of(2 * e))];
    int w = q.vertex_map[static_cast<std::size_t>(z.vertex_of(2 * e + 1))];
    int id = q.graph.add_edge(u, w);
    for (int f : orb) q.edge_map[static_cast<std::size_t>(f)] = id;
    for (int he : h_orbit(a, ObjectKind::HalfEdge, 2 * e, h)) q.half_edge_map[static_cast<std::size_t>(he)] = 2 * id;
    for (int he : h_orbit(a, ObjectKind::HalfEdge, 2 * e + 1, h)) q.half_edge_map[static_cast<std::size_t>(he)] = 2 * id + 1;
  }
  return q;
}

CoverDatum::CoverDatum(S3Action action) : action_(std::move(action)) {
  quotient_ = quotient_by(action_, subgroups::full);
  const auto& z = action_.graph();
  ramification_.resize(static_cast<std::size_t>(z.num_half_edges()));
  for (int h = 0; h < z.num_half_edges(); ++h)
    ramification_[static_cast<std::size_t>(h)] = subgroup_order(action_.stabilizer({ObjectKind::HalfEdge, h})) /
                                                 subgroup_order(action_.kernel(z.vertex_of(h)));
}

int CoverDatum::fiber_size(int base_edge) const {
  if (base_edge < 0 || base_edge >= base().num_edges()) throw PreconditionError("base edge not in graph");
  return static_cast<int>(std::count(quotient_.edge_map.begin(), quotient_.edge_map.end(), base_edge));
}

int CoverDatum::index_over(int base_edge) const {
  for (int e = 0; e < total().num_edges(); ++e)
    if (edge_to_base(e) == base_edge) return ramification_[static_cast<std::size_t>(2 * e)];
  throw PreconditionError("base edge not in graph");
}

Verdict check_admissible(const CoverDatum& c) {
  Verdict v;
  const auto& a = c.action();
  const auto& z = c.total();
  auto fail = [&](std::string msg) {
    v.ok = false;
    v.violations.push_back(std::move(msg));
  };
  for (const auto& orb : a.orbits(ObjectKind::Edge)) {
    int e = orb.front();
    NodeType t;
    try {
      t = a.classify_node(e);
    } catch (const MalformedActionError& err) {
      fail(std::string("malformed node: ") + err.what());
      continue;
    }
    if (t == NodeType::T4 || t == NodeType::T5) {
      fail("node " + std::to_string(e) + " is of type " + std::to_string(static_cast<int>(t)) +
           ": node maps to smooth point of the base");
      continue;
    }
    int stab = subgroup_order(a.stabilizer({ObjectKind::Edge, e}));
    int r1 = c.ramification()[static_cast<std::size_t>(2 * e)];
    int r2 = c.ramification()[static_cast<std::size_t>(2 * e + 1)];
    if (r1 != r2) fail("node " + std::to_string(e) + " has branches with different indices");
    if (r1 != stab) fail("node " + std::to_string(e) + " has index " + std::to_string(r1) + " but stabilizer order " + std::to_string(stab));
  }
  for (const auto& orb : a.orbits(ObjectKind::Vertex)) {
    int w = orb.front();
    if (a.kernel(w) != subgroups::trivial)
      fail("component " + std::to_string(w) + " has kernel " + subgroup_name(a.kernel(w)) +
           ": not a principal bundle away from the nodes");
  }
  for (const auto& orb : a.orbits(ObjectKind::Point)) {
    int p = orb.front();
    int k = subgroup_order(a.stabilizer({ObjectKind::Point, p})) / subgroup_order(a.kernel(a.point_vertex(p)));
    if (k > 1)
      fail("smooth point " + std::to_string(p) + " has stabilizer of order " + std::to_string(k) +
           ": ramified away from the nodes");
  }
  (void)z;
  return v;
}

bool check_star(const CoverDatum& c) {
  if (!check_admissible(c).ok) return false;
  for (int e = 0; e < c.total().num_edges(); ++e)
    if (c.action().classify_node(e) != NodeType::T3) return false;
  return true;
}

RotationAudit rotation_audit(const S3Action& a) {
  const auto& z = a.graph();
  const GroupElement sigma = GroupElement::sigma();
  int nh = z.num_half_edges();
  int total = nh + a.num_points();
  auto ref = [&](int i) { return i < nh ? ObjectRef{ObjectKind::HalfEdge, i} : ObjectRef{ObjectKind::Point, i - nh}; };
  auto vertex_of = [&](int i) { return i < nh ? z.vertex_of(i) : a.point_vertex(i - nh); };
  auto fixed = [&](int i) {
    return contains(a.stabilizer(ref(i)), sigma) && !contains(a.kernel(vertex_of(i)), sigma);
  };
  // var[i] = orbit variable, sign[i] = +1 if rho(i) equals the variable, -1 if inverted
  std::vector<int> var(static_cast<std::size_t>(total), -1), sign(static_cast<std::size_t>(total), 0);
  RotationAudit out;
  bool consistent = true;
  for (int i = 0; i < total; ++i) {
    if (var[static_cast<std::size_t>(i)] >= 0 || !fixed(i)) continue;
    int k = out.orbits++;
    for (const auto& g : s3_elements()) {
      int j = a.image(g, ref(i));
      if (j >= 0 && ref(i).kind == ObjectKind::Point) j += nh;
      int sg = g.is_involution() ? -1 : 1;
      if (var[static_cast<std::size_t>(j)] < 0) {
        var[static_cast<std::size_t>(j)] = k;
        sign[static_cast<std::size_t>(j)] = sg;
      } else if (sign[static_cast<std::size_t>(j)] != sg) {
        consistent = false;
      }
    }
  }
  if (!consistent) return out;
  std::vector<int> rho(static_cast<std::size_t>(total), 0);
  for (long mask = 0; mask < (1L << out.orbits); ++mask) {
    for (int i = 0; i < total; ++i) {
      int k = var[static_cast<std::size_t>(i)];
      if (k < 0) continue;
      int base = (mask >> k) & 1 ? 2 : 1;
      rho[static_cast<std::size_t>(i)] = sign[static_cast<std::size_t>(i)] > 0 ? base : 3 - base;
    }
    bool ok = true;
    for (int e = 0; e < z.num_edges() && ok; ++e) {
      int r1 = rho[static_cast<std::size_t>(2 * e)], r2 = rho[static_cast<std::size_t>(2 * e + 1)];
      if (r1 && r2 && (r1 + r2) % 3 != 0) ok = false;
    }
    std::vector<int> sum(static_cast<std::size_t>(z.num_vertices()), 0);
    for (int i = 0; i < total; ++i) sum[static_cast<std::size_t>(vertex_of(i))] += rho[static_cast<std::size_t>(i)];
    for (int v = 0; v < z.num_vertices() && ok; ++v)
      if (sum[static_cast<std::size_t>(v)] % 3 != 0) ok = false;
    if (ok) {
      out.balanced = true;
      out.rho.assign(rho.begin(), rho.begin() + nh);
      break;
    }
  }
  return out;
}

DoubleStarClauses doublestar_clauses(const CoverDatum& c) {
  DoubleStarClauses d;
  d.faithful_on_components = c.action().is_faithful();
  d.pa_total = arithmetic_genus_euler(c.total());
  d.pa_base = arithmetic_genus_euler(c.base());
  d.genus_condition = d.pa_total == 6 * d.pa_base - 5;
  d.betti_y = quotient_by(c.action(), subgroups::tau).graph.first_betti();
  d.betti_base = c.base().first_betti();
  d.toric_condition = d.betti_y == d.betti_base;
  return d;
}

bool check_doublestar(const CoverDatum& c) {
  try {
    return doublestar_clauses(c).holds();
  } catch (const MalformedActionError&) {
    return false;
  }
}

bool count_conditions(const InvariantVector& v) {
  return v.finite_r && v.r2 == 0 && v.r3 == 0 && v.n[4] == 0 && v.n[5] == 0 &&
         2 * v.n[1] + v.n[2] == 2 * v.c1 + v.c2;
}

EquivalenceCheck doublestar_equivalence(const CoverDatum& c) {
  EquivalenceCheck e;
  e.definition_side = check_doublestar(c);
  try {
    e.count_side = count_conditions(invariant_vector(c.action()));
  } catch (const MalformedActionError&) {
    e.count_side = false;
  }
  return e;
}

bool doublestar_equivalence_check(const CoverDatum& c) { return doublestar_equivalence(c).agree(); }

TowerReport quotient_tower(const CoverDatum& c) {
  if (!check_star(c)) throw PreconditionError("quotient tower needs an admissible cover with all nodes of type 3");
  TowerReport t;
  auto y = quotient_by(c.action(), subgroups::tau);
  auto d = quotient_by(c.action(), subgroups::rotations);
  t.y = y.graph;
  t.d = d.graph;
  t.pa_y = arithmetic_genus_euler(t.y);
  t.pa_d = arithmetic_genus_euler(t.d);
  int pa_z = arithmetic_genus_euler(c.total());
  int pa_x = arithmetic_genus_euler(c.base());
  t.isotypic_identity = pa_z + 2 * pa_x == t.pa_d + 2 * t.pa_y;

  const auto& x = c.base();
  t.route_b_applicable = t.y.num_vertices() == x.num_vertices();
  if (t.route_b_applicable) {
    t.routes_agree = true;
    std::vector<int> y_to_x(static_cast<std::size_t>(t.y.num_vertices()), -1);
    for (int v = 0; v < c.total().num_vertices(); ++v)
      y_to_x[static_cast<std::size_t>(y.vertex_map[static_cast<std::size_t>(v)])] = c.vertex_to_base(v);
    for (int i = 0; i < t.y.num_vertices(); ++i) {
      int xi = y_to_x[static_cast<std::size_t>(i)];
      int r = x.valence(xi);
      int g = 3 * x.genus(xi) - 2 + r;
      t.y_genera_from_base.push_back(g);
      if (g != t.y.genus(i)) t.routes_agree = false;
    }
  }
  return t;
}

NodeGluing norm_pushforward(const NormGluingDatum& d, int node) {
  auto it = d.nodes.find(node);
  if (it == d.nodes.end()) throw PreconditionError("unknown node " + std::to_string(node));
  NodeGluing out = it->second;
  switch (out.type) {
    case NodeType::T1:
    case NodeType::T2:
      return out;
    case NodeType::T3:
      out.gamma = out.gamma.pow(3);
      return out;
    default:
      throw PreconditionError("pushforward is defined for nodes of types 1, 2 and 3 only");
  }
}

std::string pushforward_rule(NodeType t) { return t == NodeType::T3 ? "cube" : "identity"; }

}  // namespace prymlab
