#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "prymlab/canon.hpp"
#include "prymlab/catalog.hpp"
#include "prymlab/errors.hpp"

using namespace prymlab;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Oracle key: minimum over all vertex permutations of (genera, sorted edges).
std::pair<std::vector<int>, EdgeList> brute_key(const std::vector<int>& genera, const EdgeList& edges) {
  std::vector<int> perm(genera.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::pair<std::vector<int>, EdgeList> best;
  bool first = true;
  do {
    std::vector<int> g(genera.size());
    for (std::size_t v = 0; v < perm.size(); ++v) g[static_cast<std::size_t>(perm[v])] = genera[v];
    EdgeList e;
    for (auto [a, b] : edges) {
      int x = perm[static_cast<std::size_t>(a)], y = perm[static_cast<std::size_t>(b)];
      e.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(e.begin(), e.end());
    auto key = std::make_pair(g, e);
    if (first || key < best) best = key;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

void multisets(const std::vector<std::pair<int, int>>& pool, int k, std::size_t start, EdgeList& cur,
               std::vector<EdgeList>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    cur.push_back(pool[i]);
    multisets(pool, k - 1, i, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("arithmetic genus") {
  CHECK(arithmetic_genus(DecoratedGraph({2})) == 2);
  CHECK(arithmetic_genus(DecoratedGraph({5}, {{0, 0}, {0, 0}})) == 7);
  DecoratedGraph square({1, 1, 1, 1}, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {0, 2}, {1, 3}});
  CHECK(arithmetic_genus(square) == 7);
  CHECK_THROWS_AS(arithmetic_genus(DecoratedGraph({1, 1})), PreconditionError);
  DecoratedGraph a({2}), b({1}, {{0, 0}});
  CHECK(arithmetic_genus_euler(disjoint_union(a, b)) == arithmetic_genus(a) + arithmetic_genus(b) - 1);
}

TEST_CASE("stability") {
  CHECK_FALSE(is_stable(DecoratedGraph({0}, {{0, 0}})));
  CHECK(is_stable(DecoratedGraph({0}, {{0, 0}, {0, 0}})));
  CHECK(is_stable(DecoratedGraph({1, 1}, {{0, 1}})));
}

TEST_CASE("catalog matches exhaustive enumeration") {
  std::set<std::pair<std::vector<int>, EdgeList>> found;
  for (int s = 1; s <= 4; ++s) {
    std::vector<std::pair<int, int>> pool;
    for (int u = 0; u < s; ++u)
      for (int v = u; v < s; ++v) pool.emplace_back(u, v);
    std::vector<int> genera(static_cast<std::size_t>(s), 0);
    while (true) {
      int sum = std::accumulate(genera.begin(), genera.end(), 0);
      int delta = 2 - sum + s - 1;
      if (delta >= 0) {
        std::vector<EdgeList> lists;
        EdgeList cur;
        multisets(pool, delta, 0, cur, lists);
        for (const auto& e : lists) {
          DecoratedGraph g(genera, e);
          if (g.is_connected() && is_stable(g) && arithmetic_genus(g) == 2) found.insert(brute_key(genera, e));
        }
      }
      std::size_t i = 0;
      while (i < genera.size() && genera[i] == 2) genera[i++] = 0;
      if (i == genera.size()) break;
      ++genera[i];
    }
  }
  const auto& cat = stable_genus2_catalog();
  CHECK(found.size() == 7);
  CHECK(cat.size() == 7);
  std::set<std::pair<std::vector<int>, EdgeList>> listed;
  for (const auto& b : cat) {
    CHECK(is_stable(b.graph));
    CHECK(arithmetic_genus(b.graph) == 2);
    listed.insert(brute_key(b.graph.genera(), b.graph.edges()));
  }
  CHECK(listed == found);
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i + 1; j < cat.size(); ++j) CHECK_FALSE(isomorphic(cat[i].graph, cat[j].graph));
  CHECK(base_type("II").graph == DecoratedGraph({1}, {{0, 0}}));
  CHECK(base_type("III").graph == DecoratedGraph({0}, {{0, 0}, {0, 0}}));
  CHECK(base_type("smooth").label == "SMOOTH");
  CHECK_THROWS_AS(base_type("VIII"), PreconditionError);
}

TEST_CASE("canonical form is a relabeling invariant") {
  std::mt19937 rng(11);
  std::vector<DecoratedGraph> graphs;
  for (const auto& b : stable_genus2_catalog()) graphs.push_back(b.graph);
  graphs.push_back(DecoratedGraph({1, 1, 1, 1}, {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {0, 2}, {1, 3}}));
  graphs.push_back(DecoratedGraph({0, 0, 0, 0, 0, 0}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}));
  for (const auto& g : graphs) {
    for (int t = 0; t < 20; ++t) {
      std::vector<int> perm(static_cast<std::size_t>(g.num_vertices()));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      auto h = relabel(g, perm);
      CHECK(arithmetic_genus(h) == arithmetic_genus(g));
      CHECK(isomorphic(g, h));
      CHECK(identify_base(h) == identify_base(g));
    }
  }
  CHECK(identify_base(DecoratedGraph({0, 0}, {{1, 0}, {0, 1}, {1, 0}})) == std::optional<std::string>("VII"));
  CHECK_FALSE(isomorphic(graphs[7], DecoratedGraph({1, 1, 1, 1}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 3}})));
}

TEST_CASE("automorphism counts") {
  // hexagon: dihedral of order 12
  DecoratedGraph hex({0, 0, 0, 0, 0, 0}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  CHECK(graph_automorphisms(hex).size() == 12);
  // one vertex, two loops: flip each loop, swap the loops
  CHECK(graph_automorphisms(DecoratedGraph({5}, {{0, 0}, {0, 0}})).size() == 8);
  CHECK(graph_automorphisms(DecoratedGraph({0, 0}, {{0, 1}, {0, 1}, {0, 1}})).size() == 12);
}

TEST_CASE("dot export") {
  auto dot = to_dot(DecoratedGraph({1, 0}, {{0, 1}}));
  CHECK(dot == "graph G {\n  v0 [label=\"g=1\"];\n  v1 [label=\"g=0\"];\n  v0 -- v1;\n}\n");
}
