#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lst/contraction.hpp"
#include "lst/decomposition.hpp"
#include "lst/graph.hpp"
#include "lst/shortest_paths.hpp"

namespace lst {

struct SpanningTree {
  int root = 0;
  std::vector<int> edge_ids;      // sorted, exactly n - 1 of them
  std::vector<int> parent;        // -1 at the root
  std::vector<int> parent_edge;   // -1 at the root
  std::vector<double> depth_len;  // length of the tree path to the root
};

// Checks that the edge ids form a spanning tree and orients it at `root`.
inline SpanningTree assemble_tree(const WeightedMultigraph& g, int root,
                                  std::vector<int> edge_ids) {
  int n = g.vertex_count();
  if (root < 0 || root >= n) throw std::invalid_argument("tree root out of range");
  std::sort(edge_ids.begin(), edge_ids.end());
  if (std::adjacent_find(edge_ids.begin(), edge_ids.end()) != edge_ids.end())
    throw std::invalid_argument("duplicate tree edge");
  if (static_cast<int>(edge_ids.size()) != n - 1)
    throw std::invalid_argument("a spanning tree needs exactly n - 1 edges");

  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n));
  for (int e : edge_ids) {
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("tree edge out of range");
    if (g.is_loop(e)) throw std::invalid_argument("tree edge is a self-loop");
    const Edge& ed = g.edge(e);
    adj[static_cast<size_t>(ed.u)].push_back({e, ed.v});
    adj[static_cast<size_t>(ed.v)].push_back({e, ed.u});
  }

  SpanningTree t;
  t.root = root;
  t.edge_ids = std::move(edge_ids);
  t.parent.assign(static_cast<size_t>(n), -1);
  t.parent_edge.assign(static_cast<size_t>(n), -1);
  t.depth_len.assign(static_cast<size_t>(n), 0.0);
  std::vector<char> seen(static_cast<size_t>(n), 0);
  std::queue<int> q;
  q.push(root);
  seen[static_cast<size_t>(root)] = 1;
  int visited = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto [e, w] : adj[static_cast<size_t>(u)]) {
      if (seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = 1;
      t.parent[static_cast<size_t>(w)] = u;
      t.parent_edge[static_cast<size_t>(w)] = e;
      t.depth_len[static_cast<size_t>(w)] = t.depth_len[static_cast<size_t>(u)] + g.length(e);
      q.push(w);
      ++visited;
    }
  }
  if (visited != n) throw std::invalid_argument("tree edges do not span the graph");
  return t;
}

struct BuildStats {
  int max_depth = 0;
  std::vector<int> edge_depth;  // recursion depth each tree edge was added at, -1 otherwise
};

struct BuildOptions {
  DecompOptions decomp;
  BuildStats* stats = nullptr;
};

inline double log_four_thirds(double x) { return std::log(x) / std::log(4.0 / 3.0); }

struct BuilderParams {
  double slack = 0.0;     // per-level radius growth handed to the star split
  bool contract = false;  // merge edges shorter than slack * rho / n_hat first
  int windows = 0;        // 0: one cut window per cone; >= 1: staged windows
  long long n_hat = 0;    // sizes the constants were derived from
  long long m_hat = 0;

  static BuilderParams unit(const WeightedMultigraph& g) {
    BuilderParams p;
    p.n_hat = g.vertex_count();
    p.m_hat = g.nonloop_edge_count();
    p.slack = 1.0 / (2.0 * log_four_thirds(static_cast<double>(p.n_hat) + 6.0));
    return p;
  }

  static BuilderParams weighted(const WeightedMultigraph& g) {
    BuilderParams p;
    p.n_hat = g.vertex_count();
    p.m_hat = g.nonloop_edge_count();
    p.slack = 1.0 / (2.0 * log_four_thirds(static_cast<double>(p.n_hat) + 32.0));
    p.contract = true;
    return p;
  }

  static BuilderParams improved(const WeightedMultigraph& g, int windows) {
    BuilderParams p = weighted(g);
    p.windows = windows >= 1 ? windows : default_window_count(p.n_hat);
    return p;
  }

  static int default_window_count(long long n) {
    if (n <= 2) return 1;
    double ll = std::log2(std::log2(static_cast<double>(n)));
    return std::max(1, static_cast<int>(std::ceil(ll - 1e-12)));
  }
};

namespace detail {

// Recursive division: split a piece around its root, keep the bridge edges,
// recurse into the parts. Pieces of one or two vertices are solved directly.
inline SpanningTree build_tree_core(const WeightedMultigraph& g, int root,
                                    const BuilderParams& prm, const BuildOptions& opts) {
  int n = g.vertex_count();
  if (root < 0 || root >= n) throw std::invalid_argument("tree root out of range");
  if (opts.stats) {
    opts.stats->max_depth = 0;
    opts.stats->edge_depth.assign(static_cast<size_t>(g.edge_count()), -1);
  }
  std::vector<int> tree_edges;
  tree_edges.reserve(static_cast<size_t>(n > 0 ? n - 1 : 0));
  auto take_edge = [&](int e, int depth) {
    tree_edges.push_back(e);
    if (opts.stats) opts.stats->edge_depth[static_cast<size_t>(e)] = depth;
  };

  struct Frame {
    std::vector<int> vertices;  // sorted original ids
    int root;
    int depth;
  };
  std::vector<Frame> work;
  {
    std::vector<int> all(static_cast<size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    work.push_back({std::move(all), root, 0});
  }

  std::vector<int> vmap(static_cast<size_t>(n), -1);  // scratch, reset per frame

  while (!work.empty()) {
    Frame fr = std::move(work.back());
    work.pop_back();
    if (opts.stats) opts.stats->max_depth = std::max(opts.stats->max_depth, fr.depth);
    if (fr.vertices.size() <= 1) continue;

    if (fr.vertices.size() == 2) {
      int u = fr.vertices[0];
      int v = fr.vertices[1];
      int best = -1;
      for (int e : g.incident_edges(u)) {
        if (g.is_loop(e) || g.other_end(e, u) != v) continue;
        if (best < 0 || g.length(e) < g.length(best)) best = e;
      }
      if (best < 0) throw std::logic_error("two-vertex piece has no connecting edge");
      take_edge(best, fr.depth);
      continue;
    }

    // Local copy of the piece; local edge ids ascend with original ids so tie
    // breaks inside the split stay anchored to the input numbering.
    int nf = static_cast<int>(fr.vertices.size());
    for (int i = 0; i < nf; ++i) vmap[static_cast<size_t>(fr.vertices[static_cast<size_t>(i)])] = i;
    std::vector<std::pair<int, Edge>> collected;
    for (int v : fr.vertices) {
      for (int e : g.incident_edges(v)) {
        int w = g.other_end(e, v);
        if (w < v || vmap[static_cast<size_t>(w)] < 0) continue;  // loops enter once, w == v
        collected.push_back({e, {vmap[static_cast<size_t>(v)], vmap[static_cast<size_t>(w)], g.length(e)}});
      }
    }
    std::sort(collected.begin(), collected.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Edge> local_edges;
    std::vector<int> edge_orig;
    local_edges.reserve(collected.size());
    edge_orig.reserve(collected.size());
    for (auto& [orig, ed] : collected) {
      local_edges.push_back(ed);
      edge_orig.push_back(orig);
    }
    WeightedMultigraph h = build_graph(nf, std::move(local_edges));
    int r_local = vmap[static_cast<size_t>(fr.root)];
    for (int v : fr.vertices) vmap[static_cast<size_t>(v)] = -1;

    DistanceField f = multi_source_distances(h, {r_local});
    double rho = 0.0;
    for (double d : f.dist) {
      if (d == kInf) throw std::logic_error("piece is disconnected");
      rho = std::max(rho, d);
    }
    if (!(rho > 0.0)) throw std::logic_error("piece has zero radius");

    ContractionResult con;
    const WeightedMultigraph* q = &h;
    int q_root = r_local;
    if (prm.contract) {
      con = contract_short_edges(h, prm.slack * rho / static_cast<double>(prm.n_hat));
      if (con.quotient.vertex_count() < 2)
        throw std::logic_error("contraction collapsed the piece");
      q = &con.quotient;
      q_root = con.vertex_map[static_cast<size_t>(r_local)];
    }

    StarDecomposition star =
        prm.windows >= 1
            ? imp_star_decomp(*q, q_root, 1.0 / 3.0, prm.slack, prm.windows, prm.m_hat,
                              opts.decomp)
            : star_decomp(*q, q_root, 1.0 / 3.0, prm.slack, opts.decomp);

    auto lift_part = [&](const std::vector<int>& qpart) {
      std::vector<int> orig;
      if (prm.contract) {
        for (int qv : qpart)
          for (int hv : con.preimages[static_cast<size_t>(qv)])
            orig.push_back(fr.vertices[static_cast<size_t>(hv)]);
        std::sort(orig.begin(), orig.end());
      } else {
        orig.reserve(qpart.size());
        for (int hv : qpart) orig.push_back(fr.vertices[static_cast<size_t>(hv)]);
      }
      return orig;
    };

    work.push_back({lift_part(star.parts[0]), fr.root, fr.depth + 1});
    for (size_t i = 0; i + 1 < star.parts.size(); ++i) {
      const StarBridge& b = star.bridges[i];
      int e_local = prm.contract ? con.edge_map[static_cast<size_t>(b.edge)] : b.edge;
      const Edge& el = h.edge(e_local);
      int inside_local;
      if (prm.contract) {
        if (con.vertex_map[static_cast<size_t>(el.u)] == b.anchor)
          inside_local = el.u;
        else if (con.vertex_map[static_cast<size_t>(el.v)] == b.anchor)
          inside_local = el.v;
        else
          throw std::logic_error("bridge edge misses its cone");
      } else {
        if (el.u == b.anchor)
          inside_local = el.u;
        else if (el.v == b.anchor)
          inside_local = el.v;
        else
          throw std::logic_error("bridge edge misses its cone");
      }
      take_edge(edge_orig[static_cast<size_t>(e_local)], fr.depth);
      work.push_back({lift_part(star.parts[i + 1]),
                      fr.vertices[static_cast<size_t>(inside_local)], fr.depth + 1});
    }
  }
  return assemble_tree(g, root, std::move(tree_edges));
}

}  // namespace detail

namespace detail {

inline void require_connected(const WeightedMultigraph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("tree builders need a connected graph");
}

}  // namespace detail

// Spanning tree for graphs whose edges all have length exactly 1.
inline SpanningTree unweighted_low_stretch_tree(const WeightedMultigraph& g, int root,
                                                const BuildOptions& opts = {}) {
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.length(e) != 1.0)
      throw std::invalid_argument("unit-length builder needs every edge length equal to 1");
  detail::require_connected(g);
  return detail::build_tree_core(g, root, BuilderParams::unit(g), opts);
}

// Spanning tree for arbitrary positive lengths.
inline SpanningTree low_stretch_tree(const WeightedMultigraph& g, int root,
                                     const BuildOptions& opts = {}) {
  detail::require_connected(g);
  return detail::build_tree_core(g, root, BuilderParams::weighted(g), opts);
}

// Same recursion with staged cut windows per cone; windows <= 0 picks a count
// from the graph size. With windows == 1 the result matches low_stretch_tree.
inline SpanningTree imp_low_stretch_tree(const WeightedMultigraph& g, int root,
                                         int windows = 0, const BuildOptions& opts = {}) {
  detail::require_connected(g);
  return detail::build_tree_core(g, root, BuilderParams::improved(g, windows), opts);
}

}  // namespace lst
