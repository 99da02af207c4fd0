#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bek/enumerate.hpp"
#include "bek/graph.hpp"
#include "test_util.hpp"

using namespace bek;
using testutil::isomorphic;

TEST_CASE("standard constructors") {
  CHECK(make_path(4).edges() ==
        std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});
  CHECK(make_complete(3).edges() ==
        std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  const Graph claw = make_complete_bipartite(1, 3);
  CHECK(claw.vertex_count() == 4);
  CHECK(claw.degree(1) == 3);
  CHECK(claw.edge_count() == 3);
  CHECK(make_cycle(4).edge_count() == 4);
  CHECK_THROWS(make_path(0));
  CHECK_THROWS(make_cycle(2));
  CHECK_THROWS(make_complete_bipartite(0, 3));
}

TEST_CASE("k-handle lollipops") {
  const Graph l33 = make_k_handle_lollipop(3, {3});
  CHECK(l33.vertex_count() == 6);
  CHECK(l33.edge_count() == 6);
  CHECK(l33.has_edge(1, 4));
  CHECK(l33.has_edge(4, 5));
  CHECK(l33.has_edge(5, 6));

  const Graph l312 = make_k_handle_lollipop(3, {1, 2});
  CHECK(l312.vertex_count() == 6);
  CHECK(l312.has_edge(1, 4));
  CHECK(l312.has_edge(2, 5));
  CHECK(l312.has_edge(5, 6));

  CHECK(isomorphic(make_k_handle_lollipop(2, {1, 1}), make_path(4)));
  CHECK(isomorphic(make_k_handle_lollipop(2, {1}), make_path(3)));
  CHECK_THROWS(make_k_handle_lollipop(3, {1, 1, 1, 1}));  // k > m
  CHECK_THROWS(make_k_handle_lollipop(1, {1}));
}

TEST_CASE("induced subgraph, complement, components, distances") {
  CHECK(induced_subgraph(make_cycle(5), {1, 2, 3}) == make_path(3));
  CHECK(complement(make_complete(4)).edge_count() == 0);
  CHECK_THROWS(induced_subgraph(make_path(3), {1, 4}));

  const Graph p3p2 = disjoint_union(make_path(3), make_path(2));
  const auto comps = connected_components(p3p2);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 3);
  CHECK(comps[1].size() == 2);

  const auto d = distances(p3p2);
  CHECK(d[1][3] == 2);
  CHECK(d[4][5] == 1);
  CHECK(d[1][4] == -1);  // unreachable across components
  // metric axioms inside a component
  const auto dc = distances(make_cycle(6));
  for (int u = 1; u <= 6; ++u)
    for (int v = 1; v <= 6; ++v) {
      CHECK(dc[u][v] == dc[v][u]);
      for (int w = 1; w <= 6; ++w) CHECK(dc[u][v] <= dc[u][w] + dc[w][v]);
    }
}

TEST_CASE("maximal cliques") {
  CHECK(maximal_cliques(make_complete(3)) ==
        std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(maximal_cliques(make_path(3)) ==
        std::vector<std::vector<int>>{{1, 2}, {2, 3}});
  CHECK(maximal_cliques(make_k_handle_lollipop(3, {1})) ==
        std::vector<std::vector<int>>{{1, 2, 3}, {1, 4}});
}

TEST_CASE("clique census") {
  const CliqueCensus k3 = clique_census(make_complete(3));
  CHECK(k3.k(1) == 3);
  CHECK(k3.k(2) == 3);
  CHECK(k3.k(3) == 1);
  const CliqueCensus c4 = clique_census(make_cycle(4));
  CHECK(c4.k(1) == 4);
  CHECK(c4.k(2) == 4);
  CHECK(c4.k(3) == 0);
  const CliqueCensus l32 = clique_census(make_k_handle_lollipop(3, {2}));
  CHECK(l32.k(2) == 5);
  CHECK(l32.k(3) == 1);

  // k_1 = n, k_2 = |E|, and induced-subgraph monotonicity
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(7, rng);
    const CliqueCensus c = clique_census(g);
    CHECK(c.k(1) == 7);
    CHECK(c.k(2) == g.edge_count());
    const Graph h = induced_subgraph(g, {1, 2, 3, 4, 5});
    const CliqueCensus ch = clique_census(h);
    for (int i = 1; i <= 7; ++i) CHECK(ch.k(i) <= c.k(i));
  }
}

TEST_CASE("cut edges, free vertices, free cut edges") {
  CHECK_FALSE(is_cut_edge(make_cycle(4), 1, 2));
  CHECK(is_cut_edge(make_path(4), 2, 3));
  CHECK_THROWS(is_cut_edge(make_path(4), 1, 3));

  CHECK(free_cut_edges(make_path(4)) ==
        std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});
  CHECK(free_cut_edges(make_complete_bipartite(1, 3)).empty());

  // every free cut edge is a cut edge and a maximal clique of size 2
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(7, rng, 0.3);
    const auto cliques = maximal_cliques(g);
    for (auto [u, v] : free_cut_edges(g)) {
      CHECK(is_cut_edge(g, u, v));
      const std::vector<int> e{std::min(u, v), std::max(u, v)};
      CHECK(std::find(cliques.begin(), cliques.end(), e) != cliques.end());
    }
  }
}

TEST_CASE("reduced graph") {
  const Graph claw = make_complete_bipartite(1, 3);
  CHECK(reduced_graph(claw) == claw);
  CHECK(reduced_graph(make_path(4)).edge_count() == 0);
  CHECK(reduced_graph(make_complete(4)) == make_complete(4));
  // removes exactly |free_cut_edges(G)| edges, in one pass on G
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(7, rng, 0.3);
    CHECK(reduced_graph(g).edge_count() ==
          g.edge_count() - static_cast<int>(free_cut_edges(g).size()));
  }
}

TEST_CASE("free cut edge switching") {
  const Graph l33 = make_k_handle_lollipop(3, {3});
  const Graph switched = switch_free_cut_edge(l33, {4, 5}, {2, 5});
  CHECK(testutil::isomorphic(switched, make_k_handle_lollipop(3, {1, 2})));

  // identity switch
  const Graph p4 = make_path(4);
  CHECK(switch_free_cut_edge(p4, {2, 3}, {2, 3}) == p4);

  // e_add closing a cycle is rejected (an edge in a cycle is not a cut edge)
  CHECK_THROWS(switch_free_cut_edge(l33, {5, 6}, {1, 5}));
  // e_remove not a free cut edge
  CHECK_THROWS(switch_free_cut_edge(make_cycle(4), {1, 2}, {1, 3}));
  // e_add already present
  CHECK_THROWS(switch_free_cut_edge(p4, {1, 2}, {3, 4}));

  // switching preserves the clique census
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = make_k_handle_lollipop(4, {2, 1});
    const auto fce = free_cut_edges(g);
    const auto e = fce[rng() % fce.size()];
    for (int attempts = 0; attempts < 50; ++attempts) {
      const int u = 1 + static_cast<int>(rng() % g.vertex_count());
      const int v = 1 + static_cast<int>(rng() % g.vertex_count());
      try {
        const Graph h = switch_free_cut_edge(g, e, {u, v});
        CHECK(clique_census(h).counts == clique_census(g).counts);
        break;
      } catch (const std::invalid_argument&) {
      }
    }
  }
}

TEST_CASE("G_e completion") {
  // P_4 minus its middle edge: both neighborhoods are singletons
  Graph g(4);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  CHECK(ge_completion(g, {2, 3}) == g);

  Graph iso(2);
  CHECK(ge_completion(iso, {1, 2}) == iso);

  // star: N(leaf) = {center}, nothing to add
  const Graph star = make_complete_bipartite(1, 3);
  CHECK(ge_completion(star, {2, 3}) == star);

  // a case that adds something: P_4 with e = {1,3}, N(3) = {2,4}
  Graph p4 = make_path(4);
  const Graph done = ge_completion(p4, {1, 3});
  CHECK(done.has_edge(2, 4));
  CHECK(done.edge_count() == 4);

  CHECK_THROWS(ge_completion(make_path(2), {1, 2}));  // already an edge
}
