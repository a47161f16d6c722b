#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "lst/generators.hpp"
#include "lst/graph.hpp"
#include "lst/metrics.hpp"
#include "lst/shortest_paths.hpp"
#include "lst/tree.hpp"
#include "support/oracles.hpp"

using lst::build_graph;
using lst::WeightedMultigraph;

namespace {

bool has_failure(const lst::CheckReport& rep, const std::string& needle) {
  for (const std::string& f : rep.failures)
    if (f.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("tree distances agree with an all-pairs oracle") {
  lst::Rng rng(99u);
  for (int trial = 0; trial < 25; ++trial) {
    int n = rng.pick(2, 40);
    auto g = lst::random_connected_multigraph(rng, n, rng.pick(0, 2 * n), 32.0);
    auto t = lst::low_stretch_tree(g, rng.pick(0, n - 1));

    std::vector<lst::Edge> tree_edges;
    for (int e : t.edge_ids) tree_edges.push_back(g.edge(e));
    auto tree_only = build_graph(n, std::move(tree_edges));
    auto fw = oracle::floyd_warshall(tree_only);

    auto td = lst::tree_distances_for_edges(g, t);
    for (int e = 0; e < g.edge_count(); ++e) {
      const lst::Edge& ed = g.edge(e);
      if (ed.u == ed.v) {
        REQUIRE(td[static_cast<size_t>(e)] == 0.0);
        continue;
      }
      double want = fw[static_cast<size_t>(ed.u)][static_cast<size_t>(ed.v)];
      CAPTURE(trial, e, ed.u, ed.v, want);
      REQUIRE(td[static_cast<size_t>(e)] ==
              Catch::Approx(want).epsilon(1e-9).margin(1e-12));
    }
    for (int e : t.edge_ids) REQUIRE(td[static_cast<size_t>(e)] == g.length(e));
  }
}

TEST_CASE("stretch on a four cycle") {
  auto g = lst::cycle_graph(4);
  auto t = lst::unweighted_low_stretch_tree(g, 0);
  REQUIRE(t.edge_ids == std::vector<int>{0, 1, 3});
  auto rep = lst::stretch_report(g, t);
  REQUIRE(rep.instances == 4);
  REQUIRE(rep.stretch == std::vector<double>{1.0, 1.0, 3.0, 1.0});
  REQUIRE(rep.total == 6.0);
  REQUIRE(rep.average == 1.5);
  REQUIRE(rep.max_stretch == 3.0);
  REQUIRE(rep.tree_cost == 3.0);
  REQUIRE(rep.tree_length == 3.0);
}

TEST_CASE("self-loops never enter stretch accounting") {
  auto g = build_graph(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 0, 1.0},
                           {1, 1, 2.0}});
  auto t = lst::low_stretch_tree(g, 0);
  REQUIRE(std::find(t.edge_ids.begin(), t.edge_ids.end(), 4) == t.edge_ids.end());
  auto rep = lst::stretch_report(g, t);
  REQUIRE(rep.instances == 4);
  REQUIRE(rep.stretch[4] == 0.0);
}

TEST_CASE("metric distances shorten slack edges only") {
  auto g = build_graph(3, {{0, 1, 5.0}, {0, 2, 1.0}, {2, 1, 1.0}});
  auto metric = lst::metric_edge_distances(g);
  REQUIRE(metric == std::vector<double>{2.0, 1.0, 1.0});

  auto rg = lst::reweight_for_metric_stretch(g);
  REQUIRE(rg.vertex_count() == 3);
  REQUIRE(rg.edge_count() == 3);
  for (int e = 0; e < 3; ++e) {
    REQUIRE(rg.edge(e).u == g.edge(e).u);
    REQUIRE(rg.edge(e).v == g.edge(e).v);
    REQUIRE(rg.length(e) == metric[static_cast<size_t>(e)]);
  }
}

TEST_CASE("metric distances agree with an all-pairs oracle") {
  lst::Rng rng(1234u);
  for (int trial = 0; trial < 15; ++trial) {
    int n = rng.pick(2, 32);
    auto g = lst::random_connected_multigraph(rng, n, rng.pick(0, 2 * n), 64.0);
    auto fw = oracle::floyd_warshall(g);
    auto metric = lst::metric_edge_distances(g);
    for (int e = 0; e < g.edge_count(); ++e) {
      const lst::Edge& ed = g.edge(e);
      double want = ed.u == ed.v ? ed.length
                                 : fw[static_cast<size_t>(ed.u)][static_cast<size_t>(ed.v)];
      CAPTURE(trial, e);
      REQUIRE(metric[static_cast<size_t>(e)] ==
              Catch::Approx(want).epsilon(1e-9).margin(1e-12));
    }
  }
}

TEST_CASE("stretch against the metric is never below one") {
  lst::Rng rng(777u);
  for (int trial = 0; trial < 10; ++trial) {
    int n = rng.pick(3, 48);
    auto g = lst::random_connected_multigraph(rng, n, rng.pick(n, 3 * n), 64.0);
    auto t = lst::low_stretch_tree(g, 0);
    auto metric = lst::metric_edge_distances(g);
    auto rep = lst::stretch_report(g, t, &metric);
    for (int e = 0; e < g.edge_count(); ++e) {
      if (g.is_loop(e)) continue;
      CAPTURE(trial, e);
      REQUIRE(rep.stretch[static_cast<size_t>(e)] >= 1.0 - 1e-9);
    }
    REQUIRE(rep.average >= 1.0 - 1e-9);
    // the metric can only lower denominators, so stretch can only grow
    auto plain = lst::stretch_report(g, t);
    REQUIRE(rep.total >= plain.total - 1e-9 * std::max(1.0, plain.total));
  }
}

TEST_CASE("stretch_report rejects bad denominators") {
  auto g = lst::path_graph(3);
  auto t = lst::low_stretch_tree(g, 0);
  std::vector<double> wrong_size = {1.0};
  REQUIRE_THROWS_AS(lst::stretch_report(g, t, &wrong_size), std::invalid_argument);
  std::vector<double> zero = {1.0, 0.0};
  REQUIRE_THROWS_AS(lst::stretch_report(g, t, &zero), std::invalid_argument);
}

TEST_CASE("validate_tree flags tampering") {
  auto g = lst::cycle_graph(5);
  auto good = lst::low_stretch_tree(g, 0);
  REQUIRE(lst::validate_tree(g, good).ok);

  SECTION("root fields") {
    auto t = good;
    t.parent[static_cast<size_t>(t.root)] = 1;
    auto rep = lst::validate_tree(g, t);
    REQUIRE(!rep.ok);
    REQUIRE(has_failure(rep, "root"));
  }
  SECTION("missing edge") {
    auto t = good;
    t.edge_ids.pop_back();
    auto rep = lst::validate_tree(g, t);
    REQUIRE(!rep.ok);
    REQUIRE(has_failure(rep, "edge-count"));
  }
  SECTION("corrupted depth") {
    auto t = good;
    t.depth_len[2] += 0.5;
    auto rep = lst::validate_tree(g, t);
    REQUIRE(!rep.ok);
    REQUIRE(has_failure(rep, "depth"));
  }
  SECTION("detached parent edge") {
    auto t = good;
    int v = t.root == 0 ? 1 : 0;
    // point v at an edge that does not join it to its parent
    for (int e = 0; e < g.edge_count(); ++e) {
      const lst::Edge& ed = g.edge(e);
      if (ed.u != v && ed.v != v) {
        t.parent_edge[static_cast<size_t>(v)] = e;
        break;
      }
    }
    auto rep = lst::validate_tree(g, t);
    REQUIRE(!rep.ok);
    REQUIRE(has_failure(rep, "parent-edge"));
  }
  SECTION("duplicate edge ids") {
    auto t = good;
    t.edge_ids[1] = t.edge_ids[0];
    auto rep = lst::validate_tree(g, t);
    REQUIRE(!rep.ok);
    REQUIRE(has_failure(rep, "edge-ids"));
  }
}

TEST_CASE("validate_star_decomposition flags tampering") {
  auto g = lst::cycle_graph(4);
  auto good = lst::star_decomp(g, 0, 1.0 / 3.0, 0.5);
  REQUIRE(lst::validate_star_decomposition(g, good, 1.0 / 3.0, 0.5).ok);

  SECTION("cut radius outside its window") {
    auto s = good;
    s.r0 = 1.9;
    auto rep = lst::validate_star_decomposition(g, s, 1.0 / 3.0, 0.5);
    REQUIRE(!rep.ok);
    REQUIRE(has_failure(rep, "ball-window"));
  }
  SECTION("ball part is not the cut ball") {
    auto s = good;
    s.parts[0] = {0, 1};
    s.parts[1] = {2};
    s.part_of = {0, 0, 1, 2};
    auto rep = lst::validate_star_decomposition(g, s, 1.0 / 3.0, 0.5);
    REQUIRE(!rep.ok);
    REQUIRE(has_failure(rep, "ball-members"));
  }
  SECTION("overlapping parts") {
    auto s = good;
    s.parts[2] = {1, 3};
    auto rep = lst::validate_star_decomposition(g, s, 1.0 / 3.0, 0.5);
    REQUIRE(!rep.ok);
    REQUIRE(has_failure(rep, "partition"));
  }
  SECTION("bridge edge does not join its endpoints") {
    auto s = good;
    s.bridges[0].edge = 1;  // joins 1 and 2, not 1 and 0
    auto rep = lst::validate_star_decomposition(g, s, 1.0 / 3.0, 0.5);
    REQUIRE(!rep.ok);
    REQUIRE(has_failure(rep, "edge does not join"));
  }
  SECTION("bridge into the wrong part") {
    auto s = good;
    s.bridges[0].anchor = 2;
    s.bridges[0].center_side = 1;
    auto rep = lst::validate_star_decomposition(g, s, 1.0 / 3.0, 0.5);
    REQUIRE(!rep.ok);
  }
  SECTION("wrong recorded radius") {
    auto s = good;
    s.radius = 5.0;
    auto rep = lst::validate_star_decomposition(g, s, 1.0 / 3.0, 0.5);
    REQUIRE(!rep.ok);
    REQUIRE(has_failure(rep, "radius"));
  }
}
