#pragma once

// Independent reference implementations used only by tests. These are written
// against first principles (dense matrices, exhaustive path search) so they
// share no code with the library's incremental machinery.

#include <cmath>
#include <random>
#include <vector>

#include "lst/graph.hpp"
#include "lst/shortest_paths.hpp"

namespace oracle {

// Dense all-pairs shortest paths.
inline std::vector<std::vector<double>> floyd_warshall(const lst::WeightedMultigraph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<double>> d(
      static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), lst::kInf));
  for (int v = 0; v < n; ++v) d[static_cast<size_t>(v)][static_cast<size_t>(v)] = 0.0;
  for (const lst::Edge& e : g.edges()) {
    if (e.u == e.v) continue;
    auto& duv = d[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)];
    auto& dvu = d[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)];
    duv = std::min(duv, e.length);
    dvu = std::min(dvu, e.length);
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double via = d[static_cast<size_t>(i)][static_cast<size_t>(k)] +
                     d[static_cast<size_t>(k)][static_cast<size_t>(j)];
        if (via < d[static_cast<size_t>(i)][static_cast<size_t>(j)])
          d[static_cast<size_t>(i)][static_cast<size_t>(j)] = via;
      }
  return d;
}

// Cheapest way to reach each vertex from `start` when arcs marked forward in
// the field are free and every other arc costs its length. Exhaustive
// Bellman-Ford style relaxation; fine for the small graphs tests use.
inline std::vector<double> cone_costs(const lst::WeightedMultigraph& g,
                                      const lst::DistanceField& f, int start) {
  int n = g.vertex_count();
  std::vector<double> cost(static_cast<size_t>(n), lst::kInf);
  cost[static_cast<size_t>(start)] = 0.0;
  for (int round = 0; round < n; ++round) {
    bool changed = false;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (g.is_loop(e)) continue;
      const lst::Edge& ed = g.edge(e);
      auto relax = [&](int a, int b) {
        double step = lst::arc_is_forward(f, g, e, a) ? 0.0 : ed.length;
        if (cost[static_cast<size_t>(a)] + step < cost[static_cast<size_t>(b)]) {
          cost[static_cast<size_t>(b)] = cost[static_cast<size_t>(a)] + step;
          changed = true;
        }
      };
      relax(ed.u, ed.v);
      relax(ed.v, ed.u);
    }
    if (!changed) break;
  }
  return cost;
}

struct Sampler {
  std::mt19937_64 rng;

  explicit Sampler(std::uint64_t seed) : rng(seed) {}

  double u01() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  double log_uniform(double max_len) { return std::pow(max_len, u01()); }
};

// Random connected multigraph: random spanning tree plus extra edges, a few of
// which may be parallel copies or self-loops.
inline lst::WeightedMultigraph random_connected_multigraph(Sampler& s, int n,
                                                           int extra_edges,
                                                           double max_len,
                                                           bool allow_loops = true) {
  std::vector<lst::Edge> edges;
  for (int v = 1; v < n; ++v) {
    int p = s.uniform_int(0, v - 1);
    edges.push_back({p, v, max_len == 1.0 ? 1.0 : s.log_uniform(max_len)});
  }
  for (int i = 0; i < extra_edges; ++i) {
    int u = s.uniform_int(0, n - 1);
    int v = s.uniform_int(0, n - 1);
    if (u == v && !allow_loops) continue;
    edges.push_back({u, v, max_len == 1.0 ? 1.0 : s.log_uniform(max_len)});
  }
  return lst::build_graph(n, std::move(edges));
}

// Simple connected weighted graph without loops or parallel edges.
inline lst::WeightedMultigraph random_connected_simple(Sampler& s, int n,
                                                       double avg_extra_degree,
                                                       double max_len) {
  std::vector<lst::Edge> edges;
  for (int v = 1; v < n; ++v) {
    int p = s.uniform_int(0, v - 1);
    edges.push_back({p, v, max_len == 1.0 ? 1.0 : s.log_uniform(max_len)});
  }
  double p_edge = n > 1 ? std::min(1.0, avg_extra_degree / (n - 1)) : 0.0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (s.u01() < p_edge) {
        bool dup = false;
        for (const lst::Edge& e : edges)
          if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) { dup = true; break; }
        if (!dup) edges.push_back({u, v, max_len == 1.0 ? 1.0 : s.log_uniform(max_len)});
      }
    }
  return lst::build_graph(n, std::move(edges));
}

}  // namespace oracle
