#include "prymlab/canon.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace prymlab {

namespace {

struct Searcher {
  const ColoredDigraph& d;
  bool want_autos;
  int n;
  std::vector<std::vector<std::pair<int, int>>> out, in;  // (label, neighbor)

  bool have_best = false;
  Certificate best;
  std::vector<int> best_lab;
  std::vector<std::vector<int>> equivalent_leaves;

  Searcher(const ColoredDigraph& dg, bool autos) : d(dg), want_autos(autos), n(dg.size()) {
    out.resize(static_cast<std::size_t>(n));
    in.resize(static_cast<std::size_t>(n));
    for (const auto& a : d.arcs) {
      out[static_cast<std::size_t>(a.from)].emplace_back(a.label, a.to);
      in[static_cast<std::size_t>(a.to)].emplace_back(a.label, a.from);
    }
  }

  static int count_cells(const std::vector<int>& cell) {
    return cell.empty() ? 0 : *std::max_element(cell.begin(), cell.end()) + 1;
  }

  // Equitable refinement of an ordered partition given as ranks.
  void refine(std::vector<int>& cell) const {
    int cells = count_cells(cell);
    while (true) {
      std::vector<std::pair<std::vector<long>, int>> sig(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) {
        std::vector<std::tuple<int, int, int>> nb;
        for (auto [lab, w] : out[static_cast<std::size_t>(v)]) nb.emplace_back(0, lab, cell[static_cast<std::size_t>(w)]);
        for (auto [lab, w] : in[static_cast<std::size_t>(v)]) nb.emplace_back(1, lab, cell[static_cast<std::size_t>(w)]);
        std::sort(nb.begin(), nb.end());
        std::vector<long> s;
        s.reserve(1 + 3 * nb.size());
        s.push_back(cell[static_cast<std::size_t>(v)]);
        for (auto [a, b, c] : nb) {
          s.push_back(a);
          s.push_back(b);
          s.push_back(c);
        }
        sig[static_cast<std::size_t>(v)] = {std::move(s), v};
      }
      std::sort(sig.begin(), sig.end());
      int rank = -1;
      const std::vector<long>* prev = nullptr;
      for (auto& [s, v] : sig) {
        if (!prev || s != *prev) ++rank;
        cell[static_cast<std::size_t>(v)] = rank;
        prev = &s;
      }
      int now = rank + 1;
      if (now == cells) return;
      cells = now;
    }
  }

  Certificate certificate_of(const std::vector<int>& lab) const {
    Certificate c;
    c.reserve(static_cast<std::size_t>(1 + n + 3 * static_cast<int>(d.arcs.size())));
    c.push_back(n);
    std::vector<long> col(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) col[static_cast<std::size_t>(lab[static_cast<std::size_t>(v)])] = d.color[static_cast<std::size_t>(v)];
    c.insert(c.end(), col.begin(), col.end());
    std::vector<std::tuple<int, int, int>> arcs;
    arcs.reserve(d.arcs.size());
    for (const auto& a : d.arcs) arcs.emplace_back(lab[static_cast<std::size_t>(a.from)], lab[static_cast<std::size_t>(a.to)], a.label);
    std::sort(arcs.begin(), arcs.end());
    for (auto [a, b, l] : arcs) {
      c.push_back(a);
      c.push_back(b);
      c.push_back(l);
    }
    return c;
  }

  void search(std::vector<int> cell) {
    refine(cell);
    int cells = count_cells(cell);
    if (cells == n) {
      Certificate c = certificate_of(cell);
      if (!have_best || c < best) {
        have_best = true;
        best = std::move(c);
        best_lab = cell;
        equivalent_leaves.clear();
        if (want_autos) equivalent_leaves.push_back(cell);
      } else if (want_autos && c == best) {
        equivalent_leaves.push_back(cell);
      }
      return;
    }
    std::vector<int> size(static_cast<std::size_t>(cells), 0);
    for (int c : cell) ++size[static_cast<std::size_t>(c)];
    int target = 0;
    while (size[static_cast<std::size_t>(target)] == 1) ++target;
    for (int v = 0; v < n; ++v) {
      if (cell[static_cast<std::size_t>(v)] != target) continue;
      std::vector<int> child = cell;
      for (int w = 0; w < n; ++w)
        if (w != v && child[static_cast<std::size_t>(w)] >= target) ++child[static_cast<std::size_t>(w)];
      search(std::move(child));
    }
  }
};

}  // namespace

CanonResult canonical_form(const ColoredDigraph& d, bool want_automorphisms) {
  Searcher s(d, want_automorphisms);
  std::vector<long> colors = d.color;
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  std::vector<int> cell(static_cast<std::size_t>(d.size()));
  for (int v = 0; v < d.size(); ++v)
    cell[static_cast<std::size_t>(v)] = static_cast<int>(
        std::lower_bound(colors.begin(), colors.end(), d.color[static_cast<std::size_t>(v)]) - colors.begin());
  CanonResult result;
  if (d.size() == 0) {
    result.certificate = {0};
    if (want_automorphisms) result.automorphisms.emplace_back();
    return result;
  }
  s.search(cell);
  result.certificate = s.best;
  result.labeling = s.best_lab;
  if (want_automorphisms) {
    std::vector<int> inv_best(static_cast<std::size_t>(d.size()));
    for (int v = 0; v < d.size(); ++v) inv_best[static_cast<std::size_t>(s.best_lab[static_cast<std::size_t>(v)])] = v;
    for (const auto& leaf : s.equivalent_leaves) {
      std::vector<int> perm(static_cast<std::size_t>(d.size()));
      for (int v = 0; v < d.size(); ++v) perm[static_cast<std::size_t>(v)] = inv_best[static_cast<std::size_t>(leaf[static_cast<std::size_t>(v)])];
      result.automorphisms.push_back(std::move(perm));
    }
    std::sort(result.automorphisms.begin(), result.automorphisms.end());
  }
  return result;
}

ColoredDigraph encode_graph(const DecoratedGraph& g) {
  ColoredDigraph d;
  for (int v = 0; v < g.num_vertices(); ++v) d.add_node(2L * g.genus(v));
  for (int h = 0; h < g.num_half_edges(); ++h) d.add_node(-1);
  int s = g.num_vertices();
  for (int h = 0; h < g.num_half_edges(); ++h) {
    d.add_arc(s + h, g.vertex_of(h), 0);
    d.add_arc(s + h, s + DecoratedGraph::partner(h), 1);
  }
  return d;
}

Certificate graph_certificate(const DecoratedGraph& g) { return canonical_form(encode_graph(g)).certificate; }

bool isomorphic(const DecoratedGraph& a, const DecoratedGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  return graph_certificate(a) == graph_certificate(b);
}

std::vector<GraphAutomorphism> graph_automorphisms(const DecoratedGraph& g) {
  auto res = canonical_form(encode_graph(g), true);
  int s = g.num_vertices();
  std::vector<GraphAutomorphism> out;
  for (const auto& p : res.automorphisms) {
    GraphAutomorphism a;
    a.vertex.assign(p.begin(), p.begin() + s);
    for (int h = 0; h < g.num_half_edges(); ++h) a.half_edge.push_back(p[static_cast<std::size_t>(s + h)] - s);
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace prymlab
