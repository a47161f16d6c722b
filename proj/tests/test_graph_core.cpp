#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "lst/contraction.hpp"
#include "lst/graph.hpp"
#include "lst/shortest_paths.hpp"
#include "support/oracles.hpp"

using lst::Edge;
using lst::WeightedMultigraph;

namespace {

WeightedMultigraph kite() {
  // 0-1-2-3 path of length 1 edges, chord 0-2 of length 0.5, loop at 1,
  // parallel copy of 1-2 with length 2.
  return lst::build_graph(4, {{0, 1, 1.0},
                              {1, 2, 1.0},
                              {2, 3, 1.0},
                              {0, 2, 0.5},
                              {1, 1, 3.0},
                              {1, 2, 2.0}});
}

}  // namespace

TEST_CASE("build_graph validates input", "[graph]") {
  REQUIRE_THROWS_AS(lst::build_graph(0, {}), std::invalid_argument);
  REQUIRE_THROWS_AS(lst::build_graph(2, {{0, 2, 1.0}}), std::invalid_argument);
  REQUIRE_THROWS_AS(lst::build_graph(2, {{-1, 0, 1.0}}), std::invalid_argument);
  REQUIRE_THROWS_AS(lst::build_graph(2, {{0, 1, 0.0}}), std::invalid_argument);
  REQUIRE_THROWS_AS(lst::build_graph(2, {{0, 1, -2.0}}), std::invalid_argument);
  REQUIRE_THROWS_AS(lst::build_graph(2, {{0, 1, std::nan("")}}), std::invalid_argument);
  // The error message names the offending edge index.
  try {
    lst::build_graph(3, {{0, 1, 1.0}, {1, 5, 1.0}});
    FAIL("expected throw");
  } catch (const std::invalid_argument& ex) {
    REQUIRE(std::string(ex.what()).find("1") != std::string::npos);
  }
}

TEST_CASE("incidence structure", "[graph]") {
  WeightedMultigraph g = kite();
  REQUIRE(g.vertex_count() == 4);
  REQUIRE(g.edge_count() == 6);
  REQUIRE(g.nonloop_edge_count() == 5);
  REQUIRE(g.is_loop(4));
  REQUIRE_FALSE(g.is_loop(3));
  REQUIRE(g.weight(3) == 2.0);
  REQUIRE(g.other_end(0, 0) == 1);
  REQUIRE(g.other_end(0, 1) == 0);

  auto inc1 = g.incident_edges(1);
  std::set<int> got(inc1.begin(), inc1.end());
  REQUIRE(got == std::set<int>{0, 1, 4, 5});  // loop listed once

  auto inc3 = g.incident_edges(3);
  REQUIRE(std::set<int>(inc3.begin(), inc3.end()) == std::set<int>{2});
}

TEST_CASE("volume boundary cost", "[graph]") {
  WeightedMultigraph g = kite();
  lst::VertexSetView s01(g, {0, 1});
  REQUIRE(s01.contains(0));
  REQUIRE(s01.contains(1));
  REQUIRE_FALSE(s01.contains(2));

  // Non-loop edges touching {0,1}: 0-1, 1-2, 0-2, 1-2 copy.
  REQUIRE(lst::volume_of(s01) == 4);
  REQUIRE(lst::volume_of_internal(s01) == 1);

  auto bd = lst::boundary_of(s01);
  REQUIRE(bd == std::vector<int>{1, 3, 5});
  REQUIRE(lst::cost_of(g, bd) == Catch::Approx(1.0 + 2.0 + 0.5));

  // Whole vertex set has empty boundary and volume = non-loop edge count.
  lst::VertexSetView all(g, {0, 1, 2, 3});
  REQUIRE(lst::boundary_of(all).empty());
  REQUIRE(lst::volume_of(all) == 5);

  // Loops never count toward volume: 0-1, 1-2, and the 1-2 copy touch vertex 1.
  lst::VertexSetView just1(g, {1});
  REQUIRE(lst::volume_of(just1) == 3);
  REQUIRE(lst::volume_of_internal(just1) == 0);

  REQUIRE_THROWS_AS(lst::VertexSetView(g, {9}), std::invalid_argument);
}

TEST_CASE("induced subgraph keeps loops and parallels", "[graph]") {
  WeightedMultigraph g = kite();
  auto sub = lst::induced_subgraph(g, {1, 2});
  REQUIRE(sub.graph.vertex_count() == 2);
  // Edges inside {1,2}: 1-2, loop at 1, parallel 1-2.
  REQUIRE(sub.graph.edge_count() == 3);
  REQUIRE(sub.vertices == std::vector<int>{1, 2});
  REQUIRE(sub.vertex_map[1] == 0);
  REQUIRE(sub.vertex_map[2] == 1);
  REQUIRE(sub.vertex_map[0] == -1);
  std::multiset<double> lens;
  for (const Edge& e : sub.graph.edges()) lens.insert(e.length);
  REQUIRE(lens == std::multiset<double>{1.0, 2.0, 3.0});
  for (int e = 0; e < sub.graph.edge_count(); ++e) {
    int orig = sub.edge_map[static_cast<size_t>(e)];
    REQUIRE(g.length(orig) == sub.graph.length(e));
  }
}

TEST_CASE("distances match dense reference", "[paths]") {
  oracle::Sampler s(20260815);
  for (int trial = 0; trial < 60; ++trial) {
    int n = s.uniform_int(2, 40);
    auto g = oracle::random_connected_multigraph(s, n, s.uniform_int(0, 2 * n), 8.0);
    auto ref = oracle::floyd_warshall(g);
    int src = s.uniform_int(0, n - 1);
    auto f = lst::multi_source_distances(g, {src});
    for (int v = 0; v < n; ++v)
      REQUIRE(f.dist[static_cast<size_t>(v)] ==
              Catch::Approx(ref[static_cast<size_t>(src)][static_cast<size_t>(v)]).margin(1e-12));
  }
}

TEST_CASE("unit lengths use BFS path lengths", "[paths]") {
  oracle::Sampler s(7);
  auto g = oracle::random_connected_multigraph(s, 30, 40, 1.0);
  auto ref = oracle::floyd_warshall(g);
  auto f = lst::multi_source_distances(g, {0});
  for (int v = 0; v < 30; ++v)
    REQUIRE(f.dist[static_cast<size_t>(v)] == ref[0][static_cast<size_t>(v)]);
}

TEST_CASE("multi source takes pointwise minimum", "[paths]") {
  auto g = lst::build_graph(5, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}});
  auto f = lst::multi_source_distances(g, {0, 4});
  REQUIRE(f.dist == std::vector<double>{0.0, 1.0, 2.0, 1.0, 0.0});
  REQUIRE_THROWS_AS(lst::multi_source_distances(g, {}), std::invalid_argument);
  REQUIRE_THROWS_AS(lst::multi_source_distances(g, {9}), std::invalid_argument);
}

TEST_CASE("forward arcs along shortest paths", "[paths]") {
  // Diamond: two equal-length routes 0-1-3 and 0-2-3 plus a long direct edge.
  auto g = lst::build_graph(4, {{0, 1, 1.0}, {1, 3, 1.0}, {0, 2, 1.0}, {2, 3, 1.0}, {0, 3, 5.0}});
  auto f = lst::multi_source_distances(g, {0});
  REQUIRE(lst::arc_is_forward(f, g, 0, 0));
  REQUIRE_FALSE(lst::arc_is_forward(f, g, 0, 1));
  REQUIRE(lst::arc_is_forward(f, g, 1, 1));
  REQUIRE(lst::arc_is_forward(f, g, 3, 2));
  REQUIRE_FALSE(lst::arc_is_forward(f, g, 4, 0));  // 5 > dist(3)=2
}

TEST_CASE("radius and balls", "[paths]") {
  auto g = lst::build_graph(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 0, 1.0}});
  REQUIRE(lst::radius_from(g, 0) == 2.0);

  auto f = lst::multi_source_distances(g, {0});
  auto b1 = lst::ball(g, f, 1.0);
  REQUIRE(b1 == std::vector<int>{0, 1, 3});
  auto shell = lst::ball_shell(g, f, 1.0);
  REQUIRE(shell == std::vector<int>{2});

  auto b0 = lst::ball(g, 0, 0.5);
  REQUIRE(b0 == std::vector<int>{0});
  auto sh0 = lst::ball_shell(g, f, 0.5);
  REQUIRE(sh0 == std::vector<int>{1, 3});
}

TEST_CASE("radius_from rejects disconnected graphs", "[paths]") {
  auto g = lst::build_graph(3, {{0, 1, 1.0}, {2, 2, 1.0}});
  REQUIRE_FALSE(lst::is_connected(g));
  REQUIRE_THROWS_AS(lst::radius_from(g, 0), std::invalid_argument);
  auto h = lst::build_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  REQUIRE(lst::is_connected(h));
}

TEST_CASE("contraction identity at zero threshold", "[contraction]") {
  WeightedMultigraph g = kite();
  auto c = lst::contract_short_edges(g, 0.0);
  REQUIRE(c.quotient.vertex_count() == g.vertex_count());
  REQUIRE(c.quotient.edge_count() == g.edge_count());
  for (int v = 0; v < 4; ++v) REQUIRE(c.vertex_map[static_cast<size_t>(v)] == v);
  for (int e = 0; e < g.edge_count(); ++e) {
    REQUIRE(c.edge_map[static_cast<size_t>(e)] == e);
    REQUIRE(c.quotient.length(e) == g.length(e));
    REQUIRE(c.quotient.is_loop(e) == g.is_loop(e));  // original loop survives
  }
}

TEST_CASE("contraction merges short edges", "[contraction]") {
  // 0 -0.1- 1 -5- 2 -0.1- 3, plus 0-3 length 0.05.
  auto g = lst::build_graph(4, {{0, 1, 0.1}, {1, 2, 5.0}, {2, 3, 0.1}, {0, 3, 0.05}});
  auto c = lst::contract_short_edges(g, 1.0);
  // {0,1,2,3} all join through short edges: 0~1, 2~3, 0~3.
  REQUIRE(c.quotient.vertex_count() == 1);
  REQUIRE(c.quotient.edge_count() == 0);  // 1-2 becomes a new loop, dropped
  REQUIRE(c.preimages[0] == std::vector<int>{0, 1, 2, 3});

  auto c2 = lst::contract_short_edges(g, 0.08);
  // Only 0-3 contracts. Quotient classes {0,3} -> 0 (smallest member), {1}, {2}.
  REQUIRE(c2.quotient.vertex_count() == 3);
  REQUIRE(c2.vertex_map == std::vector<int>{0, 1, 2, 0});
  REQUIRE(c2.quotient.edge_count() == 3);
  REQUIRE(c2.edge_map == std::vector<int>{0, 1, 2});
  REQUIRE(c2.preimages[0] == std::vector<int>{0, 3});

  REQUIRE_THROWS_AS(lst::contract_short_edges(g, -1.0), std::invalid_argument);
}

TEST_CASE("contraction drops created loops keeps survivors parallel", "[contraction]") {
  auto g = lst::build_graph(3, {{0, 1, 0.1}, {0, 1, 2.0}, {1, 2, 3.0}, {0, 2, 4.0}});
  auto c = lst::contract_short_edges(g, 1.0);
  REQUIRE(c.quotient.vertex_count() == 2);
  // Edge 0 contracted; edge 1 becomes a loop and is dropped; edges 2,3 become
  // parallel copies between the merged class and vertex 2.
  REQUIRE(c.quotient.edge_count() == 2);
  REQUIRE(c.edge_map == std::vector<int>{2, 3});
  REQUIRE(c.quotient.length(0) == 3.0);
  REQUIRE(c.quotient.length(1) == 4.0);
  REQUIRE_FALSE(c.quotient.is_loop(0));
  REQUIRE_FALSE(c.quotient.is_loop(1));
}

TEST_CASE("contraction quotient ids follow smallest original member", "[contraction]") {
  auto g = lst::build_graph(5, {{3, 4, 0.1}, {0, 1, 5.0}, {1, 2, 5.0}, {2, 3, 5.0}});
  auto c = lst::contract_short_edges(g, 1.0);
  REQUIRE(c.quotient.vertex_count() == 4);
  // Classes in id order: {0},{1},{2},{3,4}.
  REQUIRE(c.vertex_map == std::vector<int>{0, 1, 2, 3, 3});
  REQUIRE(c.preimages[3] == std::vector<int>{3, 4});
}
