#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fvslab/constructions.hpp"
#include "fvslab/fvs.hpp"
#include "fvslab/graph.hpp"
#include "fvslab/orderings.hpp"
#include "testutil.hpp"

using namespace fvslab;
namespace tu = fvslab::testutil;

namespace {
Digraph directed_triangle() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
}  // namespace

TEST_CASE("construction validates input") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InputError);  // duplicate edge
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), InputError);
  CHECK_THROWS_AS(Digraph(3, {{0, 1}, {1, 0}}), InputError);  // antiparallel, always
  CHECK_THROWS_AS(Digraph(2, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph(-1), InputError);
  CHECK_THROWS_AS(Graph(kMaxVertices + 1), InputError);
}

TEST_CASE("underlying graph forgets orientation") {
  Graph k3 = underlying(directed_triangle());
  CHECK(k3.order() == 3);
  CHECK(k3.size() == 3);
  CHECK(k3.has_edge(0, 1));
  CHECK(k3.has_edge(1, 2));
  CHECK(k3.has_edge(0, 2));

  Digraph one(2, {{0, 1}});
  Graph u = underlying(one);
  CHECK(u.size() == 1);
  CHECK(u.has_edge(0, 1));
}

TEST_CASE("fig5a underlying graph has degeneracy 4") {
  const PublishedBlock& a = builtin_blocks()[0];
  CHECK(degeneracy(underlying(a.graph)).value == 4);
}

TEST_CASE("induced subgraphs reindex densely and return maps") {
  // K5 minus one vertex is K4
  std::vector<std::pair<int, int>> k5;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) k5.emplace_back(u, v);
  auto sub = remove_vertices(Graph(5, k5), std::vector<int>{2});
  CHECK(sub.graph.order() == 4);
  CHECK(sub.graph.size() == 6);
  CHECK(sub.old_id == std::vector<int>{0, 1, 3, 4});
  CHECK(sub.new_id[2] == -1);
  CHECK(sub.new_id[3] == 2);

  auto dsub = remove_vertices(directed_triangle(), std::vector<int>{1});
  CHECK(dsub.graph.order() == 2);
  CHECK(dsub.graph.size() == 1);
  CHECK(dsub.graph.has_arc(1, 0));  // old arc 2->0 reindexed

  CHECK_THROWS_AS(induced_subgraph(Graph(3), std::vector<int>{0, 3}), InputError);
}

TEST_CASE("fig5b minus its bad set matches the solver's acyclicity verdict") {
  const PublishedBlock& b = builtin_blocks()[1];
  auto sub = remove_vertices(b.graph, b.R);
  CHECK(sub.graph.order() == 5);
  bool acyclic = static_cast<bool>(is_acyclic(sub.graph));
  CHECK(acyclic == (min_fvs(sub.graph).size() == 0));
  CHECK(acyclic == !tu::oracle_has_directed_cycle(sub.graph));
}

TEST_CASE("is_acyclic basics with witnesses") {
  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  Acyclicity a = is_acyclic(p4);
  CHECK(a.acyclic);
  int roots = 0;
  for (int v = 0; v < 4; ++v)
    if (a.forest_parent[v] == -1) ++roots;
  CHECK(roots == 1);

  CHECK_FALSE(is_acyclic(directed_triangle()).acyclic);

  // transitive tournament on 5 vertices
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) arcs.emplace_back(u, v);
  Acyclicity t = is_acyclic(Digraph(5, arcs));
  CHECK(t.acyclic);
  CHECK(t.topo_order == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("is_acyclic agrees with the subset oracle") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 300; ++t) {
    int n = 2 + static_cast<int>(rng() % 10);
    Graph g = tu::random_graph(n, 0.05 + 0.3 * (t % 4), rng);
    CHECK(static_cast<bool>(is_acyclic(g)) == !tu::oracle_has_cycle(g));
    Digraph d = tu::random_digraph(n, 0.05 + 0.3 * (t % 4), rng);
    CHECK(static_cast<bool>(is_acyclic(d)) == !tu::oracle_has_directed_cycle(d));
  }
}

TEST_CASE("add_apex joins a new vertex to everything") {
  Graph star = add_apex(Graph(3));
  CHECK(star.order() == 4);
  CHECK(star.size() == 3);
  CHECK(star.degree(3) == 3);

  Graph k4 = add_apex(Graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(k4.size() == 6);
}

TEST_CASE("apex then delete apex is the identity") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    Graph g = tu::random_graph(2 + static_cast<int>(rng() % 9), 0.4, rng);
    Graph ap = add_apex(g);
    CHECK(remove_vertices(ap, std::vector<int>{g.order()}).graph == g);
  }
}

TEST_CASE("apex raises the degeneracy of a 2-degenerate graph to 3") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int t = 0; t < 60 && checked < 20; ++t) {
    Graph g = tu::random_kdegenerate_graph(8 + static_cast<int>(rng() % 10), 2, rng);
    if (degeneracy(g).value != 2) continue;
    CHECK(degeneracy(add_apex(g)).value == 3);
    ++checked;
  }
  CHECK(checked == 20);
}

TEST_CASE("disjoint unions offset ids and add no cross edges") {
  Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  Graph u = disjoint_union(std::vector<Graph>{k3, k3});
  CHECK(u.order() == 6);
  CHECK(u.size() == 6);
  CHECK_FALSE(u.has_edge(0, 3));

  Digraph two = disjoint_union(std::vector<Digraph>{directed_triangle(), directed_triangle()});
  CHECK(min_fvs(two).size() == 2);  // components are independent
}

TEST_CASE("union of tournament copies multiplies the minimum FVS") {
  std::mt19937_64 rng(5);
  Digraph t;
  do {
    t = tu::random_tournament(5, rng);
  } while (min_fvs(t).size() != 2);
  for (int m = 1; m <= 3; ++m) {
    std::vector<Digraph> parts(m, t);
    int oracle = tu::oracle_min_fvs(disjoint_union(parts));
    CHECK(oracle == 2 * m);
    CHECK(min_fvs(disjoint_union(parts)).size() == oracle);
  }
}

TEST_CASE("underlying commutes with induced subgraphs") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    int n = 3 + static_cast<int>(rng() % 10);
    Digraph d = tu::random_digraph(n, 0.5, rng);
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
      if (rng() & 1) keep.push_back(v);
    CHECK(underlying(induced_subgraph(d, keep).graph) ==
          induced_subgraph(underlying(d), keep).graph);
  }
}

TEST_CASE("dot export is deterministic") {
  Digraph d = directed_triangle();
  CHECK(to_dot(d) == to_dot(d));
  CHECK(to_dot(d) == "digraph {\n  0;\n  1;\n  2;\n  0 -> 1;\n  1 -> 2;\n  2 -> 0;\n}\n");
  Graph g(2, {{0, 1}});
  CHECK(to_dot(g) == "graph {\n  0;\n  1;\n  0 -- 1;\n}\n");
}
