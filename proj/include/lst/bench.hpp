#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lst/generators.hpp"
#include "lst/graph.hpp"
#include "lst/io.hpp"
#include "lst/metrics.hpp"
#include "lst/shortest_paths.hpp"
#include "lst/tree.hpp"

namespace lst {

// Bound the average stretch of a built tree is held against.
inline double average_stretch_bound(long long n, long long m) {
  return 24.0 * std::sqrt(std::exp(1.0)) * std::log2(static_cast<double>(m) + 1.0) *
         log_four_thirds(static_cast<double>(n)) *
         log_four_thirds(static_cast<double>(n) + 6.0);
}

// Bound the tree radius is held against, relative to the graph radius.
inline double radius_growth_bound(bool unit_builder) {
  return (unit_builder ? 1.0 : 2.0) * std::sqrt(std::exp(1.0));
}

struct BenchRecord {
  std::string instance;
  std::string builder;  // unweighted | weighted | improved
  long long n = 0;
  long long m = 0;
  int windows = 0;
  double build_ms = 0.0;
  double avg_stretch = 0.0;
  double max_stretch = 0.0;
  double tree_cost = 0.0;
  double graph_radius = 0.0;
  double tree_radius = 0.0;
  double stretch_bound = 0.0;
  double radius_bound = 0.0;
  bool ok = false;
};

inline BenchRecord bench_one(const std::string& instance, const WeightedMultigraph& g,
                             const std::string& builder, int windows = 0, int root = 0) {
  BenchRecord rec;
  rec.instance = instance;
  rec.builder = builder;
  rec.n = g.vertex_count();
  rec.m = g.nonloop_edge_count();

  auto t0 = std::chrono::steady_clock::now();
  SpanningTree tree;
  if (builder == "unweighted") {
    tree = unweighted_low_stretch_tree(g, root);
  } else if (builder == "weighted") {
    tree = low_stretch_tree(g, root);
  } else if (builder == "improved") {
    tree = imp_low_stretch_tree(g, root, windows);
    rec.windows = windows >= 1 ? windows
                               : BuilderParams::improved(g, windows).windows;
  } else {
    throw std::invalid_argument("unknown builder '" + builder + "'");
  }
  auto t1 = std::chrono::steady_clock::now();
  rec.build_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  StretchReport sr = stretch_report(g, tree);
  rec.avg_stretch = sr.average;
  rec.max_stretch = sr.max_stretch;
  rec.tree_cost = sr.tree_cost;
  rec.graph_radius = radius_from(g, root);
  for (double d : tree.depth_len) rec.tree_radius = std::max(rec.tree_radius, d);
  rec.stretch_bound = average_stretch_bound(rec.n, rec.m);
  rec.radius_bound = radius_growth_bound(builder == "unweighted") * rec.graph_radius;
  rec.ok = rec.avg_stretch <= rec.stretch_bound * (1.0 + 1e-9) &&
           rec.tree_radius <= rec.radius_bound * (1.0 + 1e-9);
  return rec;
}

struct BenchOptions {
  bool quick = false;
  std::uint64_t seed = 90210;
};

// Fixed collection of instances: structured families plus seeded random
// graphs, run through every builder whose precondition they meet.
inline std::vector<BenchRecord> run_benchmark_suite(const BenchOptions& opts = {}) {
  struct Item {
    std::string name;
    WeightedMultigraph g;
    bool unit_lengths;
  };
  std::vector<Item> items;
  items.push_back({"path-64", path_graph(64), true});
  items.push_back({"cycle-64", cycle_graph(64), true});
  items.push_back({"grid-16x16", grid_graph(16, 16), true});
  items.push_back({"grid-32x32", grid_graph(32, 32), true});
  items.push_back({"torus-16x16", torus_graph(16, 16), true});
  items.push_back({"complete-24", complete_graph(24), true});
  if (!opts.quick) items.push_back({"grid-64x64", grid_graph(64, 64), true});

  Rng rng(opts.seed);
  int randoms = opts.quick ? 2 : 4;
  for (int i = 0; i < randoms; ++i) {
    std::string name = "random-128-" + std::to_string(i);
    items.push_back({name, random_connected_multigraph(rng, 128, 256, 32.0), false});
  }
  items.push_back({"gnp-96", gnp_connected(rng, 96, 0.08, 16.0), false});

  std::vector<BenchRecord> out;
  for (const Item& it : items) {
    if (it.unit_lengths) out.push_back(bench_one(it.name, it.g, "unweighted"));
    out.push_back(bench_one(it.name, it.g, "weighted"));
    out.push_back(bench_one(it.name, it.g, "improved"));
  }
  return out;
}

inline bool all_within_bounds(const std::vector<BenchRecord>& recs) {
  for (const BenchRecord& r : recs)
    if (!r.ok) return false;
  return true;
}

inline void write_bench_csv(std::ostream& os, const std::vector<BenchRecord>& recs) {
  os << "# bench-v1 rng=" << Rng::mapping_id() << '\n';
  os << "instance,builder,n,m,windows,build_ms,avg_stretch,max_stretch,tree_cost,"
        "graph_radius,tree_radius,stretch_bound,radius_bound,ok\n";
  for (const BenchRecord& r : recs) {
    os << r.instance << ',' << r.builder << ',' << r.n << ',' << r.m << ',' << r.windows
       << ',' << format_double(r.build_ms) << ',' << format_double(r.avg_stretch) << ','
       << format_double(r.max_stretch) << ',' << format_double(r.tree_cost) << ','
       << format_double(r.graph_radius) << ',' << format_double(r.tree_radius) << ','
       << format_double(r.stretch_bound) << ',' << format_double(r.radius_bound) << ','
       << (r.ok ? "1" : "0") << '\n';
  }
}

}  // namespace lst
