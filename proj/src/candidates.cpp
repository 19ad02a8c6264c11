#include "prymlab/candidates.hpp"

#include <algorithm>

#include "prymlab/errors.hpp"

namespace prymlab {

namespace {

GroupElement smallest(Subgroup mask) {
  for (const auto& g : s3_elements())
    if (contains(mask, g)) return g;
  throw PreconditionError("empty coset");
}

int coset_index(const std::vector<Subgroup>& cosets, GroupElement g) {
  for (std::size_t i = 0; i < cosets.size(); ++i)
    if (contains(cosets[i], g)) return static_cast<int>(i);
  throw PreconditionError("element in no coset");
}

bool is_involution_group(Subgroup h) {
  return h == subgroups::tau || h == subgroups::sigma_tau || h == subgroups::sigma2_tau;
}

GroupElement involution_of(Subgroup h) {
  for (const auto& g : s3_elements())
    if (contains(h, g) && g.is_involution()) return g;
  throw PreconditionError("not an involution subgroup");
}

}  // namespace

bool vertex_choice_valid(const VertexChoice& v) {
  if (!is_subgroup(v.stabilizer) || !is_subgroup(v.kernel) || !is_normal_in(v.kernel, v.stabilizer)) return false;
  bool special_needs_faithful = v.special != SpecialKind::None;
  if (special_needs_faithful && v.kernel != subgroups::trivial) return false;
  switch (v.special) {
    case SpecialKind::None: return true;
    case SpecialKind::PointsOrder2: return is_involution_group(v.special_group) && is_subgroup_of(v.special_group, v.stabilizer);
    case SpecialKind::PointsOrder3:
    case SpecialKind::NodeType5: return is_subgroup_of(subgroups::rotations, v.stabilizer);
    case SpecialKind::NodesType4: return is_involution_group(v.special_group);
  }
  return false;
}

bool node_choice_valid(const DecoratedGraph& base, const Blueprint& bp, int edge, const NodeChoice& n) {
  auto [j1, j2] = base.edge(edge);
  const auto& v1 = bp.vertices[static_cast<std::size_t>(j1)];
  const auto& v2 = bp.vertices[static_cast<std::size_t>(j2)];
  Subgroup r = n.stabilizer;
  if (!is_subgroup(r) || subgroup_order(r) > 3) return false;
  if (!is_subgroup_of(r, v1.stabilizer) || !is_subgroup_of(v1.kernel, r)) return false;
  auto cosets = left_cosets(v2.stabilizer);
  if (n.second_coset < 0 || n.second_coset >= static_cast<int>(cosets.size())) return false;
  Subgroup c2 = cosets[static_cast<std::size_t>(n.second_coset)];
  GroupElement y = smallest(c2);
  for (const auto& g : s3_elements())
    if (contains(r, g) && !contains(c2, g * y)) return false;
  return is_subgroup_of(conjugate(v2.kernel, y), r);
}

BuildResult build_candidate(const DecoratedGraph& base, const Blueprint& bp, int max_genus) {
  const int nb = base.num_vertices();
  if (static_cast<int>(bp.vertices.size()) != nb || static_cast<int>(bp.nodes.size()) != base.num_edges())
    throw PreconditionError("blueprint does not match the base graph");
  for (const auto& v : bp.vertices)
    if (!vertex_choice_valid(v)) throw PreconditionError("invalid vertex choice in blueprint");
  for (int k = 0; k < base.num_edges(); ++k)
    if (!node_choice_valid(base, bp, k, bp.nodes[static_cast<std::size_t>(k)]))
      throw PreconditionError("invalid node choice in blueprint at base edge " + std::to_string(k));

  std::vector<std::vector<Subgroup>> cosets(static_cast<std::size_t>(nb));
  std::vector<int> offset(static_cast<std::size_t>(nb) + 1, 0);
  for (int j = 0; j < nb; ++j) {
    cosets[static_cast<std::size_t>(j)] = left_cosets(bp.vertices[static_cast<std::size_t>(j)].stabilizer);
    offset[static_cast<std::size_t>(j) + 1] = offset[static_cast<std::size_t>(j)] + static_cast<int>(cosets[static_cast<std::size_t>(j)].size());
  }
  const int s = offset[static_cast<std::size_t>(nb)];
  auto vertex_of = [&](int j, GroupElement g) { return offset[static_cast<std::size_t>(j)] + coset_index(cosets[static_cast<std::size_t>(j)], g); };

  std::vector<std::pair<int, int>> edges;
  ActionGenerators gens;
  const GroupElement gen[2] = {GroupElement::sigma(), GroupElement::tau()};
  auto push_half = [&](std::vector<int>& dst, std::size_t at, int value) {
    if (dst.size() <= at) dst.resize(at + 1, -1);
    dst[at] = value;
  };

  for (int k = 0; k < base.num_edges(); ++k) {
    auto [j1, j2] = base.edge(k);
    const auto& nc = bp.nodes[static_cast<std::size_t>(k)];
    auto rc = left_cosets(nc.stabilizer);
    GroupElement y = smallest(left_cosets(bp.vertices[static_cast<std::size_t>(j2)].stabilizer)[static_cast<std::size_t>(nc.second_coset)]);
    int first = static_cast<int>(edges.size());
    for (auto c : rc) {
      GroupElement g = smallest(c);
      edges.emplace_back(vertex_of(j1, g), vertex_of(j2, g * y));
    }
    for (std::size_t i = 0; i < rc.size(); ++i) {
      GroupElement g = smallest(rc[i]);
      for (int t = 0; t < 2; ++t) {
        int target = first + coset_index(rc, gen[t] * g);
        auto& dst = t == 0 ? gens.sigma_half : gens.tau_half;
        push_half(dst, static_cast<std::size_t>(2 * (first + static_cast<int>(i))), 2 * target);
        push_half(dst, static_cast<std::size_t>(2 * (first + static_cast<int>(i)) + 1), 2 * target + 1);
      }
    }
  }

  for (int j = 0; j < nb; ++j) {
    const auto& vc = bp.vertices[static_cast<std::size_t>(j)];
    switch (vc.special) {
      case SpecialKind::None:
        break;
      case SpecialKind::PointsOrder2:
      case SpecialKind::PointsOrder3: {
        Subgroup p = vc.special == SpecialKind::PointsOrder3 ? subgroups::rotations : vc.special_group;
        auto pc = left_cosets(p);
        int first = static_cast<int>(gens.point_vertex.size());
        for (auto c : pc) gens.point_vertex.push_back(vertex_of(j, smallest(c)));
        for (auto c : pc) {
          GroupElement g = smallest(c);
          gens.sigma_point.push_back(first + coset_index(pc, gen[0] * g));
          gens.tau_point.push_back(first + coset_index(pc, gen[1] * g));
        }
        break;
      }
      case SpecialKind::NodesType4: {
        GroupElement t = involution_of(vc.special_group);
        std::vector<int> hid(6, -1);
        for (const auto& g : s3_elements()) {
          GroupElement gt = g * t;
          if (g.index() > gt.index()) continue;
          int e = static_cast<int>(edges.size());
          edges.emplace_back(vertex_of(j, g), vertex_of(j, gt));
          hid[static_cast<std::size_t>(g.index())] = 2 * e;
          hid[static_cast<std::size_t>(gt.index())] = 2 * e + 1;
        }
        for (const auto& g : s3_elements())
          for (int i = 0; i < 2; ++i) {
            auto& dst = i == 0 ? gens.sigma_half : gens.tau_half;
            push_half(dst, static_cast<std::size_t>(hid[static_cast<std::size_t>(g.index())]), hid[static_cast<std::size_t>((gen[i] * g).index())]);
          }
        break;
      }
      case SpecialKind::NodeType5: {
        auto rc = left_cosets(subgroups::rotations);
        int e = static_cast<int>(edges.size());
        edges.emplace_back(vertex_of(j, GroupElement::identity()), vertex_of(j, GroupElement::tau()));
        for (int c = 0; c < 2; ++c)
          for (int i = 0; i < 2; ++i) {
            auto& dst = i == 0 ? gens.sigma_half : gens.tau_half;
            int target = coset_index(rc, gen[i] * smallest(rc[static_cast<std::size_t>(c)]));
            push_half(dst, static_cast<std::size_t>(2 * e + c), 2 * e + target);
          }
        break;
      }
    }
  }

  BuildResult out;
  DecoratedGraph shape(std::vector<int>(static_cast<std::size_t>(s), 0), edges);
  if (!shape.is_connected()) {
    if (shape.num_edges() < s - 1)
      out.rejection = "no connected graph with " + std::to_string(s) + " vertices and " + std::to_string(shape.num_edges()) + " edges";
    else
      out.rejection = "total graph is disconnected";
    return out;
  }

  std::vector<int> vorbit(static_cast<std::size_t>(s));
  for (int j = 0; j < nb; ++j)
    for (int i = offset[static_cast<std::size_t>(j)]; i < offset[static_cast<std::size_t>(j) + 1]; ++i) vorbit[static_cast<std::size_t>(i)] = j;
  gens.sigma_vertex.resize(static_cast<std::size_t>(s));
  gens.tau_vertex.resize(static_cast<std::size_t>(s));
  gens.kernels.resize(static_cast<std::size_t>(s));
  for (int j = 0; j < nb; ++j) {
    const auto& cs = cosets[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < cs.size(); ++i) {
      GroupElement g = smallest(cs[i]);
      auto v = static_cast<std::size_t>(offset[static_cast<std::size_t>(j)] + static_cast<int>(i));
      gens.sigma_vertex[v] = vertex_of(j, gen[0] * g);
      gens.tau_vertex[v] = vertex_of(j, gen[1] * g);
      gens.kernels[v] = conjugate(bp.vertices[static_cast<std::size_t>(j)].kernel, g);
    }
  }
  S3Action shaped(shape, gens);

  std::vector<int> genera(static_cast<std::size_t>(s), 0);
  for (int j = 0; j < nb; ++j) {
    const auto& vc = bp.vertices[static_cast<std::size_t>(j)];
    int v = offset[static_cast<std::size_t>(j)];
    int k = subgroup_order(vc.kernel);
    int m = subgroup_order(vc.stabilizer) / k;
    ComponentProfile prof;
    prof.group_order = m;
    prof.cyclic = !(vc.stabilizer == subgroups::full && vc.kernel == subgroups::trivial);
    prof.base_genus = base.genus(j);
    int branch = 0;
    std::vector<char> seen_h(static_cast<std::size_t>(shape.num_half_edges()), 0);
    for (int h : shape.half_edges_at(v)) {
      int e = subgroup_order(shaped.stabilizer({ObjectKind::HalfEdge, h})) / k;
      branch += e - 1;
      if (seen_h[static_cast<std::size_t>(h)] || e == 1) continue;
      for (const auto& g : s3_elements())
        if (contains(vc.stabilizer, g)) seen_h[static_cast<std::size_t>(shaped.half_edge_image(g, h))] = 1;
      (e == 2 ? prof.involution_points : prof.rotation_points) += 1;
    }
    std::vector<char> seen_p(static_cast<std::size_t>(shaped.num_points()), 0);
    for (int p = 0; p < shaped.num_points(); ++p) {
      if (shaped.point_vertex(p) != v) continue;
      int e = subgroup_order(shaped.stabilizer({ObjectKind::Point, p})) / k;
      branch += e - 1;
      if (seen_p[static_cast<std::size_t>(p)] || e == 1) continue;
      for (const auto& g : s3_elements())
        if (contains(vc.stabilizer, g)) seen_p[static_cast<std::size_t>(shaped.point_image(g, p))] = 1;
      (e == 2 ? prof.involution_points : prof.rotation_points) += 1;
    }
    if (branch % 2 != 0) {
      out.rejection = "Hurwitz formula gives no integral genus over base vertex " + std::to_string(j);
      return out;
    }
    int g = (m * (2 * base.genus(j) - 2) + branch) / 2 + 1;
    if (g < 0) {
      out.rejection = "Hurwitz formula gives negative genus over base vertex " + std::to_string(j);
      return out;
    }
    if (g > max_genus) {
      out.rejection = "component genus " + std::to_string(g) + " exceeds " + std::to_string(max_genus);
      return out;
    }
    prof.cover_genus = g;
    out.profiles.push_back(prof);
    for (int i = offset[static_cast<std::size_t>(j)]; i < offset[static_cast<std::size_t>(j) + 1]; ++i) genera[static_cast<std::size_t>(i)] = g;
  }
  (void)vorbit;
  S3Action action(DecoratedGraph(genera, edges), gens);
  CoverDatum c(std::move(action));
  if (c.base().genera() != base.genera() || c.base().num_edges() != base.num_edges())
    throw VerificationError("built cover does not have the requested base");
  out.cover = std::move(c);
  return out;
}

namespace {

std::vector<VertexChoice> vertex_options(bool first, const CandidateSpace& space) {
  static const std::vector<Subgroup> reps{subgroups::trivial, subgroups::tau, subgroups::rotations, subgroups::full};
  std::vector<VertexChoice> out;
  for (Subgroup h : first ? reps : all_subgroups())
    for (Subgroup k : all_subgroups()) {
      if (!is_normal_in(k, h)) continue;
      if (!space.kernels && k != subgroups::trivial) continue;
      out.push_back({h, k, SpecialKind::None, subgroups::trivial});
    }
  return out;
}

std::vector<VertexChoice> special_variants(const VertexChoice& v) {
  std::vector<VertexChoice> out;
  if (v.kernel != subgroups::trivial) return out;
  auto add = [&](SpecialKind kind, Subgroup g) {
    VertexChoice c = v;
    c.special = kind;
    c.special_group = g;
    if (vertex_choice_valid(c)) out.push_back(c);
  };
  for (Subgroup p : {subgroups::tau, subgroups::sigma_tau, subgroups::sigma2_tau}) add(SpecialKind::PointsOrder2, p);
  add(SpecialKind::PointsOrder3, subgroups::rotations);
  for (Subgroup p : {subgroups::tau, subgroups::sigma_tau, subgroups::sigma2_tau}) add(SpecialKind::NodesType4, p);
  add(SpecialKind::NodeType5, subgroups::rotations);
  return out;
}

void expand_nodes(const DecoratedGraph& base, Blueprint& bp, int k, std::vector<Blueprint>& out) {
  if (k == base.num_edges()) {
    out.push_back(bp);
    return;
  }
  auto [j1, j2] = base.edge(k);
  int ncos = 6 / subgroup_order(bp.vertices[static_cast<std::size_t>(j2)].stabilizer);
  (void)j1;
  for (Subgroup r : all_subgroups()) {
    for (int c = 0; c < ncos; ++c) {
      NodeChoice n{r, c};
      if (!node_choice_valid(base, bp, k, n)) continue;
      bp.nodes[static_cast<std::size_t>(k)] = n;
      expand_nodes(base, bp, k + 1, out);
    }
  }
}

void expand_vertices(const DecoratedGraph& base, const CandidateSpace& space, Blueprint& bp, int j,
                     std::vector<Blueprint>& out) {
  if (j == base.num_vertices()) {
    expand_nodes(base, bp, 0, out);
    if (space.specials) {
      for (int i = 0; i < base.num_vertices(); ++i) {
        VertexChoice keep = bp.vertices[static_cast<std::size_t>(i)];
        for (const auto& variant : special_variants(keep)) {
          bp.vertices[static_cast<std::size_t>(i)] = variant;
          expand_nodes(base, bp, 0, out);
        }
        bp.vertices[static_cast<std::size_t>(i)] = keep;
      }
    }
    return;
  }
  for (const auto& v : vertex_options(j == 0, space)) {
    bp.vertices[static_cast<std::size_t>(j)] = v;
    expand_vertices(base, space, bp, j + 1, out);
  }
}

}  // namespace

std::vector<Blueprint> enumerate_blueprints(const DecoratedGraph& base, const CandidateSpace& space) {
  Blueprint bp;
  bp.vertices.resize(static_cast<std::size_t>(base.num_vertices()));
  bp.nodes.resize(static_cast<std::size_t>(base.num_edges()));
  std::vector<Blueprint> out;
  expand_vertices(base, space, bp, 0, out);
  return out;
}

}  // namespace prymlab
