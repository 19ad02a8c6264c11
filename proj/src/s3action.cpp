#include "prymlab/s3action.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "prymlab/errors.hpp"
#include "prymlab/parallel.hpp"

namespace prymlab {

std::string to_string(NodeType t) { return "T" + std::to_string(static_cast<int>(t)); }

namespace {

std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {  // a after b
  std::vector<int> c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

bool is_permutation_of(const std::vector<int>& p, std::size_t n) {
  if (p.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= n || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

std::vector<int> identity_perm(std::size_t n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// Images of all six elements sigma^i tau^j from the generator images.
std::array<std::vector<int>, 6> expand(const std::vector<int>& sigma, const std::vector<int>& tau) {
  std::array<std::vector<int>, 6> out;
  for (int j = 0; j < 2; ++j) {
    std::vector<int> cur = j ? tau : identity_perm(sigma.size());
    for (int i = 0; i < 3; ++i) {
      out[static_cast<std::size_t>(i + 3 * j)] = cur;
      cur = compose_perm(sigma, cur);
    }
  }
  return out;
}

int subgroup_code(Subgroup h) {
  const auto& all = all_subgroups();
  return static_cast<int>(std::find(all.begin(), all.end(), h) - all.begin());
}

}  // namespace

S3Action::S3Action(DecoratedGraph graph, const ActionGenerators& gens) : graph_(std::move(graph)) {
  auto nv = static_cast<std::size_t>(graph_.num_vertices());
  auto nh = static_cast<std::size_t>(graph_.num_half_edges());
  auto np = gens.point_vertex.size();
  if (!is_permutation_of(gens.sigma_vertex, nv) || !is_permutation_of(gens.tau_vertex, nv))
    throw InvalidDataError("vertex images are not permutations");
  if (!is_permutation_of(gens.sigma_half, nh) || !is_permutation_of(gens.tau_half, nh))
    throw InvalidDataError("half-edge images are not permutations");
  if (np > 0 && (!is_permutation_of(gens.sigma_point, np) || !is_permutation_of(gens.tau_point, np)))
    throw InvalidDataError("marked point images are not permutations");
  vimg_ = expand(gens.sigma_vertex, gens.tau_vertex);
  himg_ = expand(gens.sigma_half, gens.tau_half);
  pimg_ = np > 0 ? expand(gens.sigma_point, gens.tau_point) : std::array<std::vector<int>, 6>{};
  point_vertex_ = gens.point_vertex;
  for (int v : point_vertex_)
    if (v < 0 || static_cast<std::size_t>(v) >= nv) throw InvalidDataError("marked point on unknown vertex");
  kernel_ = gens.kernels.empty() ? std::vector<Subgroup>(nv, subgroups::trivial) : gens.kernels;
  if (kernel_.size() != nv) throw InvalidDataError("one kernel per vertex expected");
  validate();
}

S3Action S3Action::trivial(DecoratedGraph graph, std::vector<Subgroup> kernels) {
  ActionGenerators g;
  g.sigma_vertex = g.tau_vertex = identity_perm(static_cast<std::size_t>(graph.num_vertices()));
  g.sigma_half = g.tau_half = identity_perm(static_cast<std::size_t>(graph.num_half_edges()));
  g.kernels = std::move(kernels);
  return S3Action(std::move(graph), g);
}

void S3Action::validate() const {
  for (const auto& a : s3_elements())
    for (const auto& b : s3_elements()) {
      auto ab = static_cast<std::size_t>((a * b).index());
      auto ia = static_cast<std::size_t>(a.index()), ib = static_cast<std::size_t>(b.index());
      if (vimg_[ab] != compose_perm(vimg_[ia], vimg_[ib]) || himg_[ab] != compose_perm(himg_[ia], himg_[ib]) ||
          (num_points() > 0 && pimg_[ab] != compose_perm(pimg_[ia], pimg_[ib])))
        throw InvalidDataError("generator images violate the S3 relations");
    }
  for (const auto& g : s3_elements()) {
    for (int v = 0; v < graph_.num_vertices(); ++v)
      if (graph_.genus(vertex_image(g, v)) != graph_.genus(v)) throw InvalidDataError("action does not preserve genus");
    for (int h = 0; h < graph_.num_half_edges(); ++h) {
      if (graph_.vertex_of(half_edge_image(g, h)) != vertex_image(g, graph_.vertex_of(h)))
        throw InvalidDataError("action is not incidence-equivariant at half-edge " + std::to_string(h));
      if (half_edge_image(g, DecoratedGraph::partner(h)) != DecoratedGraph::partner(half_edge_image(g, h)))
        throw InvalidDataError("action does not map nodes to nodes at half-edge " + std::to_string(h));
    }
    for (int p = 0; p < num_points(); ++p)
      if (point_vertex(point_image(g, p)) != vertex_image(g, point_vertex(p)))
        throw InvalidDataError("marked point " + std::to_string(p) + " moved off its component");
  }
  for (int v = 0; v < graph_.num_vertices(); ++v) {
    Subgroup k = kernel(v);
    Subgroup stab = stabilizer({ObjectKind::Vertex, v});
    if (!is_subgroup(k) || !is_normal_in(k, stab))
      throw InvalidDataError("kernel at vertex " + std::to_string(v) + " is not normal in its stabilizer");
    for (const auto& g : s3_elements())
      if (kernel(vertex_image(g, v)) != conjugate(k, g))
        throw InvalidDataError("kernels are not conjugation-consistent along the orbit of vertex " + std::to_string(v));
    for (int h : graph_.half_edges_at(v))
      if (!is_subgroup_of(k, stabilizer({ObjectKind::HalfEdge, h})))
        throw InvalidDataError("kernel at vertex " + std::to_string(v) + " moves a branch");
    for (int p = 0; p < num_points(); ++p)
      if (point_vertex(p) == v && !is_subgroup_of(k, stabilizer({ObjectKind::Point, p})))
        throw InvalidDataError("kernel at vertex " + std::to_string(v) + " moves a marked point");
  }
}

void S3Action::check(ObjectRef x) const {
  int bound = 0;
  switch (x.kind) {
    case ObjectKind::Vertex: bound = graph_.num_vertices(); break;
    case ObjectKind::Edge: bound = graph_.num_edges(); break;
    case ObjectKind::HalfEdge: bound = graph_.num_half_edges(); break;
    case ObjectKind::Point: bound = num_points(); break;
  }
  if (x.id < 0 || x.id >= bound) throw PreconditionError("object " + std::to_string(x.id) + " not in graph");
}

int S3Action::vertex_image(GroupElement g, int v) const { return vimg_[static_cast<std::size_t>(g.index())].at(static_cast<std::size_t>(v)); }
int S3Action::half_edge_image(GroupElement g, int h) const { return himg_[static_cast<std::size_t>(g.index())].at(static_cast<std::size_t>(h)); }
int S3Action::edge_image(GroupElement g, int e) const { return half_edge_image(g, 2 * e) / 2; }
int S3Action::point_image(GroupElement g, int p) const { return pimg_[static_cast<std::size_t>(g.index())].at(static_cast<std::size_t>(p)); }

int S3Action::image(GroupElement g, ObjectRef x) const {
  check(x);
  switch (x.kind) {
    case ObjectKind::Vertex: return vertex_image(g, x.id);
    case ObjectKind::Edge: return edge_image(g, x.id);
    case ObjectKind::HalfEdge: return half_edge_image(g, x.id);
    case ObjectKind::Point: return point_image(g, x.id);
  }
  return -1;
}

Subgroup S3Action::stabilizer(ObjectRef x) const {
  check(x);
  Subgroup s = 0;
  for (const auto& g : s3_elements())
    if (image(g, x) == x.id) s |= static_cast<Subgroup>(1U << g.index());
  return s;
}

std::vector<int> S3Action::orbit(ObjectRef x) const {
  check(x);
  std::set<int> o;
  for (const auto& g : s3_elements()) o.insert(image(g, x));
  return {o.begin(), o.end()};
}

std::vector<std::vector<int>> S3Action::orbits(ObjectKind kind) const {
  int n = 0;
  switch (kind) {
    case ObjectKind::Vertex: n = graph_.num_vertices(); break;
    case ObjectKind::Edge: n = graph_.num_edges(); break;
    case ObjectKind::HalfEdge: n = graph_.num_half_edges(); break;
    case ObjectKind::Point: n = num_points(); break;
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    auto o = orbit({kind, i});
    for (int j : o) seen[static_cast<std::size_t>(j)] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

bool S3Action::swaps_branches(GroupElement g, int edge) const {
  check({ObjectKind::Edge, edge});
  return half_edge_image(g, 2 * edge) == 2 * edge + 1;
}

NodeType S3Action::classify_node(int edge) const {
  Subgroup stab = stabilizer({ObjectKind::Edge, edge});
  switch (subgroup_order(stab)) {
    case 1:
      return NodeType::T1;
    case 2: {
      GroupElement g = GroupElement(stab == subgroups::tau ? 3 : stab == subgroups::sigma_tau ? 4 : 5);
      return swaps_branches(g, edge) ? NodeType::T4 : NodeType::T2;
    }
    case 3:
      if (swaps_branches(GroupElement::sigma(), edge))
        throw MalformedActionError("element of order 3 exchanges the branches of node " + std::to_string(edge));
      return NodeType::T3;
    default:
      if (!swaps_branches(GroupElement::tau(), edge))
        throw MalformedActionError("node " + std::to_string(edge) +
                                   " is fixed by S3 with branch-preserving involutions");
      return NodeType::T5;
  }
}

bool S3Action::is_transitive() const { return graph_.num_vertices() == 0 || orbits(ObjectKind::Vertex).size() == 1; }

bool S3Action::is_faithful() const {
  return std::all_of(kernel_.begin(), kernel_.end(), [](Subgroup k) { return k == subgroups::trivial; });
}

bool S3Action::acts_trivially_on_vertices() const {
  return vimg_[1] == identity_perm(vimg_[1].size()) && vimg_[3] == identity_perm(vimg_[3].size());
}

ActionGenerators S3Action::generators() const {
  ActionGenerators g;
  g.sigma_vertex = vimg_[1];
  g.tau_vertex = vimg_[3];
  g.sigma_half = himg_[1];
  g.tau_half = himg_[3];
  g.point_vertex = point_vertex_;
  if (num_points() > 0) {
    g.sigma_point = pimg_[1];
    g.tau_point = pimg_[3];
  }
  g.kernels = kernel_;
  return g;
}

std::string InvariantVector::to_string() const {
  std::ostringstream os;
  os << "n=(" << n[1] << "," << n[2] << "," << n[3] << "," << n[4] << "," << n[5] << ") c=(" << c1 << "," << c2
     << "," << c3 << "," << c6 << ") r2=" << r2 << " r3=" << r3 << " s=" << s << " delta=" << delta;
  if (!finite_r) os << " (nontrivial kernel)";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const InvariantVector& v) { return os << v.to_string(); }

InvariantVector invariant_vector(const S3Action& a) {
  const auto& g = a.graph();
  InvariantVector iv;
  iv.s = g.num_vertices();
  iv.delta = g.num_edges();
  std::array<int, 6> weighted{};
  for (int e = 0; e < g.num_edges(); ++e)
    weighted[static_cast<std::size_t>(a.classify_node(e))] += subgroup_order(a.stabilizer({ObjectKind::Edge, e}));
  for (int t = 1; t <= 5; ++t) {
    if (weighted[static_cast<std::size_t>(t)] % 6 != 0)
      throw InvalidDataError("non-integral node count for type " + std::to_string(t));
    iv.n[static_cast<std::size_t>(t)] = weighted[static_cast<std::size_t>(t)] / 6;
  }
  std::array<int, 7> comp{};
  for (int v = 0; v < g.num_vertices(); ++v) {
    int o = subgroup_order(a.stabilizer({ObjectKind::Vertex, v}));
    comp[static_cast<std::size_t>(o)] += o;
  }
  for (int o : {1, 2, 3, 6})
    if (comp[static_cast<std::size_t>(o)] % 6 != 0) throw InvalidDataError("non-integral component count");
  iv.c1 = comp[1] / 6;
  iv.c2 = comp[2] / 6;
  iv.c3 = comp[3] / 6;
  iv.c6 = comp[6] / 6;
  for (int p = 0; p < a.num_points(); ++p) {
    int o = subgroup_order(a.stabilizer({ObjectKind::Point, p}));
    if (o == 2) ++iv.r2;
    if (o == 3) ++iv.r3;
  }
  iv.finite_r = a.is_faithful();
  return iv;
}

S3Action action_from_vertex_permutations(const DecoratedGraph& g, const std::vector<int>& sigma,
                                         const std::vector<int>& tau) {
  std::map<std::pair<int, int>, int> edge_at;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    if (u == v || edge_at.count({u, v}) || edge_at.count({v, u}))
      throw InvalidDataError("vertex permutations do not determine the action on this graph");
    edge_at[{u, v}] = e;
  }
  auto lift = [&](const std::vector<int>& pv) {
    if (!is_permutation_of(pv, static_cast<std::size_t>(g.num_vertices())))
      throw InvalidDataError("vertex images are not permutations");
    std::vector<int> ph(static_cast<std::size_t>(g.num_half_edges()));
    for (int h = 0; h < g.num_half_edges(); ++h) {
      int a = pv[static_cast<std::size_t>(g.vertex_of(h))];
      int b = pv[static_cast<std::size_t>(g.vertex_of(DecoratedGraph::partner(h)))];
      auto it = edge_at.find({a, b});
      if (it != edge_at.end()) {
        ph[static_cast<std::size_t>(h)] = 2 * it->second;
      } else if ((it = edge_at.find({b, a})) != edge_at.end()) {
        ph[static_cast<std::size_t>(h)] = 2 * it->second + 1;
      } else {
        throw InvalidDataError("vertex permutation is not a graph automorphism");
      }
    }
    return ph;
  };
  ActionGenerators gens;
  gens.sigma_vertex = sigma;
  gens.tau_vertex = tau;
  gens.sigma_half = lift(sigma);
  gens.tau_half = lift(tau);
  return S3Action(g, gens);
}

ColoredDigraph encode_action(const S3Action& a) {
  const auto& g = a.graph();
  ColoredDigraph d = encode_graph(g);
  int s = g.num_vertices();
  for (int v = 0; v < s; ++v) d.color[static_cast<std::size_t>(v)] = 2L * (8L * g.genus(v) + subgroup_code(a.kernel(v)));
  int base_points = d.size();
  for (int p = 0; p < a.num_points(); ++p) {
    d.add_node(-3);
    d.add_arc(base_points + p, a.point_vertex(p), 0);
  }
  for (int k : {1, 3}) {
    GroupElement gen(k);
    int label = k == 1 ? 2 : 3;
    for (int v = 0; v < s; ++v) d.add_arc(v, a.vertex_image(gen, v), label);
    for (int h = 0; h < g.num_half_edges(); ++h) d.add_arc(s + h, s + a.half_edge_image(gen, h), label);
    for (int p = 0; p < a.num_points(); ++p) d.add_arc(base_points + p, base_points + a.point_image(gen, p), label);
  }
  return d;
}

Certificate action_certificate(const S3Action& a) { return canonical_form(encode_action(a)).certificate; }

bool equivalent(const S3Action& a, const S3Action& b) { return action_certificate(a) == action_certificate(b); }

namespace {

GraphAutomorphism compose_auto(const GraphAutomorphism& a, const GraphAutomorphism& b) {
  return {compose_perm(a.vertex, b.vertex), compose_perm(a.half_edge, b.half_edge)};
}

bool is_identity(const GraphAutomorphism& a) {
  return a.vertex == identity_perm(a.vertex.size()) && a.half_edge == identity_perm(a.half_edge.size());
}

// Kernel assignments: one normal subgroup per vertex orbit, propagated by conjugation.
std::vector<std::vector<Subgroup>> kernel_choices(const S3Action& base) {
  const auto& g = base.graph();
  std::vector<std::vector<Subgroup>> out{std::vector<Subgroup>(static_cast<std::size_t>(g.num_vertices()), subgroups::trivial)};
  for (const auto& orb : base.orbits(ObjectKind::Vertex)) {
    int rep = orb.front();
    Subgroup stab = base.stabilizer({ObjectKind::Vertex, rep});
    Subgroup fixing = stab;
    for (int h : g.half_edges_at(rep)) fixing &= base.stabilizer({ObjectKind::HalfEdge, h});
    std::vector<std::vector<Subgroup>> next;
    for (Subgroup k : all_subgroups()) {
      if (!is_normal_in(k, stab) || !is_subgroup_of(k, fixing)) continue;
      for (auto choice : out) {
        for (const auto& x : s3_elements()) choice[static_cast<std::size_t>(base.vertex_image(x, rep))] = conjugate(k, x);
        next.push_back(choice);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<S3Action> enumerate_actions(const DecoratedGraph& g, const ActionConstraints& constraints) {
  if (g.num_vertices() > 12) throw PreconditionError("enumerate_actions supports at most 12 vertices");
  auto autos = graph_automorphisms(g);
  std::vector<std::size_t> order3, order2;
  for (std::size_t i = 0; i < autos.size(); ++i) {
    const auto& a = autos[i];
    if (is_identity(compose_auto(a, compose_auto(a, a)))) order3.push_back(i);
    if (is_identity(compose_auto(a, a))) order2.push_back(i);
  }

  using Found = std::vector<std::pair<Certificate, S3Action>>;
  std::function<Found(std::size_t)> work = [&](std::size_t si) {
    Found found;
    const auto& sigma = autos[order3[si]];
    for (std::size_t ti : order2) {
      const auto& tau = autos[ti];
      auto tsts = compose_auto(tau, compose_auto(sigma, compose_auto(tau, sigma)));
      if (!is_identity(tsts)) continue;
      ActionGenerators gens;
      gens.sigma_vertex = sigma.vertex;
      gens.sigma_half = sigma.half_edge;
      gens.tau_vertex = tau.vertex;
      gens.tau_half = tau.half_edge;
      S3Action base(g, gens);
      if (constraints.transitive && !base.is_transitive()) continue;
      if (constraints.nontrivial_on_vertices && base.acts_trivially_on_vertices()) continue;
      std::vector<std::vector<Subgroup>> kernels{base.kernels()};
      if (constraints.enumerate_kernels && !constraints.faithful) kernels = kernel_choices(base);
      for (const auto& k : kernels) {
        gens.kernels = k;
        S3Action act(g, gens);
        found.emplace_back(action_certificate(act), std::move(act));
      }
    }
    return found;
  };
  auto parts = parallel_map<Found>(order3.size(), work);

  std::map<Certificate, S3Action> unique;
  for (auto& part : parts)
    for (auto& [cert, act] : part) unique.emplace(std::move(cert), std::move(act));
  std::vector<S3Action> out;
  for (auto& [cert, act] : unique) out.push_back(std::move(act));
  return out;
}

}  // namespace prymlab
