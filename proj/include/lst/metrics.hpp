#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lst/decomposition.hpp"
#include "lst/graph.hpp"
#include "lst/shortest_paths.hpp"
#include "lst/tree.hpp"

namespace lst {

// Distance in the tree between the endpoints of every graph edge. Edges that
// are themselves tree edges read their own length, so their ratio is exact;
// everything else goes through a binary-lifting lowest-common-ancestor walk.
inline std::vector<double> tree_distances_for_edges(const WeightedMultigraph& g,
                                                    const SpanningTree& t) {
  int n = g.vertex_count();
  if (static_cast<int>(t.parent.size()) != n)
    throw std::invalid_argument("tree does not match graph");

  std::vector<int> hops(static_cast<size_t>(n), 0);
  {
    std::vector<std::vector<int>> children(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
      if (t.parent[static_cast<size_t>(v)] >= 0)
        children[static_cast<size_t>(t.parent[static_cast<size_t>(v)])].push_back(v);
    std::vector<int> stack{t.root};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int c : children[static_cast<size_t>(u)]) {
        hops[static_cast<size_t>(c)] = hops[static_cast<size_t>(u)] + 1;
        stack.push_back(c);
      }
    }
  }

  int levels = 1;
  while ((1 << levels) < n) ++levels;
  std::vector<std::vector<int>> up(static_cast<size_t>(levels + 1),
                                   std::vector<int>(static_cast<size_t>(n)));
  for (int v = 0; v < n; ++v) {
    int p = t.parent[static_cast<size_t>(v)];
    up[0][static_cast<size_t>(v)] = p < 0 ? v : p;
  }
  for (int k = 1; k <= levels; ++k)
    for (int v = 0; v < n; ++v)
      up[static_cast<size_t>(k)][static_cast<size_t>(v)] =
          up[static_cast<size_t>(k - 1)]
            [static_cast<size_t>(up[static_cast<size_t>(k - 1)][static_cast<size_t>(v)])];

  auto lca = [&](int u, int v) {
    if (hops[static_cast<size_t>(u)] < hops[static_cast<size_t>(v)]) std::swap(u, v);
    int lift = hops[static_cast<size_t>(u)] - hops[static_cast<size_t>(v)];
    for (int k = 0; lift != 0; ++k, lift >>= 1)
      if (lift & 1) u = up[static_cast<size_t>(k)][static_cast<size_t>(u)];
    if (u == v) return u;
    for (int k = levels; k >= 0; --k)
      if (up[static_cast<size_t>(k)][static_cast<size_t>(u)] !=
          up[static_cast<size_t>(k)][static_cast<size_t>(v)]) {
        u = up[static_cast<size_t>(k)][static_cast<size_t>(u)];
        v = up[static_cast<size_t>(k)][static_cast<size_t>(v)];
      }
    return up[0][static_cast<size_t>(u)];
  };

  std::vector<double> out(static_cast<size_t>(g.edge_count()), 0.0);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.u == ed.v) continue;
    if (t.parent_edge[static_cast<size_t>(ed.u)] == e ||
        t.parent_edge[static_cast<size_t>(ed.v)] == e) {
      out[static_cast<size_t>(e)] = g.length(e);
      continue;
    }
    int a = lca(ed.u, ed.v);
    out[static_cast<size_t>(e)] = t.depth_len[static_cast<size_t>(ed.u)] +
                                  t.depth_len[static_cast<size_t>(ed.v)] -
                                  2.0 * t.depth_len[static_cast<size_t>(a)];
  }
  return out;
}

struct StretchReport {
  std::vector<double> stretch;  // per edge, 0 for self-loops
  double total = 0.0;
  double average = 0.0;         // over non-loop edge instances
  double max_stretch = 0.0;
  long long instances = 0;      // non-loop edge instances
  double tree_cost = 0.0;       // sum of tree edge weights
  double tree_length = 0.0;     // sum of tree edge lengths
};

// Ratio of tree distance to edge length for every edge. A caller may supply
// per-edge denominators instead (for example true endpoint distances).
inline StretchReport stretch_report(const WeightedMultigraph& g, const SpanningTree& t,
                                    const std::vector<double>* denominators = nullptr) {
  if (denominators && static_cast<int>(denominators->size()) != g.edge_count())
    throw std::invalid_argument("denominator table does not match graph");
  StretchReport rep;
  std::vector<double> td = tree_distances_for_edges(g, t);
  rep.stretch.assign(static_cast<size_t>(g.edge_count()), 0.0);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) continue;
    double denom = denominators ? (*denominators)[static_cast<size_t>(e)] : g.length(e);
    if (!(denom > 0.0)) throw std::invalid_argument("stretch denominator must be positive");
    double s = td[static_cast<size_t>(e)] / denom;
    rep.stretch[static_cast<size_t>(e)] = s;
    rep.total += s;
    rep.max_stretch = std::max(rep.max_stretch, s);
    ++rep.instances;
  }
  rep.average = rep.instances > 0 ? rep.total / static_cast<double>(rep.instances) : 0.0;
  for (int e : t.edge_ids) {
    rep.tree_cost += g.weight(e);
    rep.tree_length += g.length(e);
  }
  return rep;
}

// True shortest-path distance between the endpoints of every edge. Self-loops
// keep their own length so the table stays usable as a denominator. Runs one
// single-source pass per vertex.
inline std::vector<double> metric_edge_distances(const WeightedMultigraph& g) {
  int n = g.vertex_count();
  std::vector<double> out(static_cast<size_t>(g.edge_count()), 0.0);
  std::vector<char> wanted(static_cast<size_t>(n), 0);
  for (const Edge& ed : g.edges())
    if (ed.u != ed.v) wanted[static_cast<size_t>(std::min(ed.u, ed.v))] = 1;
  for (int v = 0; v < n; ++v) {
    if (!wanted[static_cast<size_t>(v)]) continue;
    DistanceField f = multi_source_distances(g, {v});
    for (int e : g.incident_edges(v)) {
      const Edge& ed = g.edge(e);
      if (ed.u == ed.v) continue;
      if (std::min(ed.u, ed.v) != v) continue;
      out[static_cast<size_t>(e)] = f.dist[static_cast<size_t>(std::max(ed.u, ed.v))];
    }
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (g.is_loop(e)) out[static_cast<size_t>(e)] = g.length(e);
  return out;
}

// Copy of the graph with every edge shortened to the true distance between
// its endpoints. Stretch measured against the copy compares tree paths with
// the metric the graph induces rather than with single edges.
inline WeightedMultigraph reweight_for_metric_stretch(const WeightedMultigraph& g) {
  std::vector<double> metric = metric_edge_distances(g);
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    edges.push_back({ed.u, ed.v, metric[static_cast<size_t>(e)]});
  }
  return build_graph(g.vertex_count(), std::move(edges));
}

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string what) {
    ok = false;
    failures.push_back(std::move(what));
  }
};

inline CheckReport validate_tree(const WeightedMultigraph& g, const SpanningTree& t) {
  CheckReport rep;
  int n = g.vertex_count();
  if (t.root < 0 || t.root >= n) {
    rep.fail("root: out of range");
    return rep;
  }
  if (static_cast<int>(t.parent.size()) != n || static_cast<int>(t.parent_edge.size()) != n ||
      static_cast<int>(t.depth_len.size()) != n) {
    rep.fail("shape: per-vertex arrays do not match the graph");
    return rep;
  }
  if (static_cast<int>(t.edge_ids.size()) != n - 1)
    rep.fail("edge-count: expected " + std::to_string(n - 1) + " got " +
             std::to_string(t.edge_ids.size()));
  bool ids_ok = true;
  for (size_t i = 0; i < t.edge_ids.size(); ++i) {
    int e = t.edge_ids[i];
    if (e < 0 || e >= g.edge_count() || g.is_loop(e) ||
        (i > 0 && t.edge_ids[i - 1] >= e)) {
      ids_ok = false;
      break;
    }
  }
  if (!ids_ok) rep.fail("edge-ids: not a sorted set of distinct non-loop edges");

  if (t.parent[static_cast<size_t>(t.root)] != -1 ||
      t.parent_edge[static_cast<size_t>(t.root)] != -1 ||
      t.depth_len[static_cast<size_t>(t.root)] != 0.0)
    rep.fail("root: parent fields not cleared");

  std::vector<char> in_tree(static_cast<size_t>(g.edge_count()), 0);
  for (int e : t.edge_ids)
    if (e >= 0 && e < g.edge_count()) in_tree[static_cast<size_t>(e)] = 1;
  std::vector<int> seen_parent_edges;
  for (int v = 0; v < n; ++v) {
    if (v == t.root) continue;
    int p = t.parent[static_cast<size_t>(v)];
    int pe = t.parent_edge[static_cast<size_t>(v)];
    if (p < 0 || p >= n || pe < 0 || pe >= g.edge_count()) {
      rep.fail("parent: vertex " + std::to_string(v) + " has no valid parent");
      continue;
    }
    const Edge& ed = g.edge(pe);
    bool connects = (ed.u == v && ed.v == p) || (ed.v == v && ed.u == p);
    if (!connects || !in_tree[static_cast<size_t>(pe)])
      rep.fail("parent-edge: vertex " + std::to_string(v) + " not tied to its parent");
    double want = t.depth_len[static_cast<size_t>(p)] + g.length(pe);
    double got = t.depth_len[static_cast<size_t>(v)];
    if (std::abs(got - want) > 1e-9 * std::max(1.0, std::abs(want)))
      rep.fail("depth: vertex " + std::to_string(v) + " off by " +
               std::to_string(got - want));
    seen_parent_edges.push_back(pe);
  }
  std::sort(seen_parent_edges.begin(), seen_parent_edges.end());
  if (seen_parent_edges != t.edge_ids)
    rep.fail("edge-ids: parent edges and edge list disagree");
  return rep;
}

// Checks the promised shape of a star split: a true partition into connected
// parts, the cut radius inside its window, every bridge a tight edge from a
// shell anchor into the ball, part radii within the slack bound, and the
// total cut cost within its volume bound.
inline CheckReport validate_star_decomposition(const WeightedMultigraph& g,
                                               const StarDecomposition& s, double delta,
                                               double eps) {
  CheckReport rep;
  int n = g.vertex_count();
  if (s.center < 0 || s.center >= n || s.parts.empty() ||
      s.bridges.size() + 1 != s.parts.size() ||
      static_cast<int>(s.part_of.size()) != n ||
      s.cone_radii.size() != s.bridges.size()) {
    rep.fail("shape: sizes are inconsistent");
    return rep;
  }

  std::vector<int> owner(static_cast<size_t>(n), -1);
  bool partition_ok = true;
  for (size_t i = 0; i < s.parts.size(); ++i) {
    if (s.parts[i].empty()) partition_ok = false;
    int prev = -1;
    for (int v : s.parts[i]) {
      if (v < 0 || v >= n || v <= prev || owner[static_cast<size_t>(v)] != -1) {
        partition_ok = false;
        break;
      }
      prev = v;
      owner[static_cast<size_t>(v)] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < n && partition_ok; ++v)
    if (owner[static_cast<size_t>(v)] < 0 ||
        owner[static_cast<size_t>(v)] != s.part_of[static_cast<size_t>(v)])
      partition_ok = false;
  if (!partition_ok) {
    rep.fail("partition: parts are not a sorted partition of the vertices");
    return rep;
  }
  if (owner[static_cast<size_t>(s.center)] != 0) rep.fail("center: not inside the ball part");

  DistanceField field = multi_source_distances(g, {s.center});
  double rho = 0.0;
  for (int v = 0; v < n; ++v) {
    if (field.dist[static_cast<size_t>(v)] == kInf) {
      rep.fail("connectivity: graph is not connected");
      return rep;
    }
    rho = std::max(rho, field.dist[static_cast<size_t>(v)]);
  }
  if (std::abs(rho - s.radius) > 1e-9 * std::max(1.0, rho))
    rep.fail("radius: recorded eccentricity is off");

  double slack = 1e-12 * std::max(1.0, rho);
  if (!(s.r0 >= delta * rho - slack) || !(s.r0 < (1.0 - delta) * rho + slack))
    rep.fail("ball-window: cut radius outside its window");

  std::vector<int> ball_members = ball(g, field, s.r0);
  if (ball_members != s.parts[0]) rep.fail("ball-members: ball part is not the cut ball");
  std::vector<int> shell = ball_shell(g, field, s.r0);
  std::vector<char> on_shell(static_cast<size_t>(n), 0);
  for (int v : shell) on_shell[static_cast<size_t>(v)] = 1;

  // induced eccentricity of a root inside one part
  auto part_radius = [&](const std::vector<int>& part, int root) {
    InducedSubgraph sub = induced_subgraph(g, part);
    DistanceField f = multi_source_distances(sub.graph, {sub.vertex_map[static_cast<size_t>(root)]});
    double r = 0.0;
    for (double d : f.dist) {
      if (d == kInf) return kInf;
      r = std::max(r, d);
    }
    return r;
  };

  double ball_radius = kInf;
  if (owner[static_cast<size_t>(s.center)] == 0) {
    ball_radius = part_radius(s.parts[0], s.center);
    if (ball_radius == kInf) rep.fail("part-connected: ball part is disconnected");
  }

  double radius_tol = 1e-9 * std::max(1.0, rho);
  for (size_t i = 0; i < s.bridges.size(); ++i) {
    const StarBridge& b = s.bridges[i];
    const std::vector<int>& part = s.parts[i + 1];
    std::string tag = "bridge " + std::to_string(i);
    if (b.edge < 0 || b.edge >= g.edge_count() || g.is_loop(b.edge) || b.anchor < 0 ||
        b.anchor >= n || b.center_side < 0 || b.center_side >= n) {
      rep.fail(tag + ": missing or malformed");
      continue;
    }
    const Edge& ed = g.edge(b.edge);
    bool endpoints_ok = (ed.u == b.anchor && ed.v == b.center_side) ||
                        (ed.v == b.anchor && ed.u == b.center_side);
    if (!endpoints_ok) rep.fail(tag + ": edge does not join its endpoints");
    bool anchor_in_part = std::binary_search(part.begin(), part.end(), b.anchor);
    if (!anchor_in_part) {
      rep.fail(tag + ": anchor outside its part");
      continue;
    }
    if (owner[static_cast<size_t>(b.center_side)] != 0)
      rep.fail(tag + ": ball side endpoint outside the ball");
    if (!on_shell[static_cast<size_t>(b.anchor)]) rep.fail(tag + ": anchor not on the shell");
    double gap = std::abs(field.dist[static_cast<size_t>(b.center_side)] + g.length(b.edge) -
                          field.dist[static_cast<size_t>(b.anchor)]);
    if (gap > field.tol + slack) rep.fail(tag + ": not on a shortest path from the center");

    double r_i = part_radius(part, b.anchor);
    if (r_i == kInf) {
      rep.fail("part-connected: part " + std::to_string(i + 1) + " is disconnected");
      continue;
    }
    if (ball_radius != kInf &&
        ball_radius + g.length(b.edge) + r_i > (1.0 + eps) * rho + radius_tol)
      rep.fail(tag + ": part radius exceeds the slack bound");
  }

  long long m = g.nonloop_edge_count();
  double cut_cost = 0.0;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) continue;
    const Edge& ed = g.edge(e);
    if (owner[static_cast<size_t>(ed.u)] != owner[static_cast<size_t>(ed.v)])
      cut_cost += g.weight(e);
  }
  double cost_bound =
      6.0 * static_cast<double>(m) * std::log2(static_cast<double>(m) + 1.0) / (eps * rho);
  if (cut_cost > cost_bound * (1.0 + 1e-9))
    rep.fail("cut-cost: total boundary cost exceeds its bound");
  return rep;
}

}  // namespace lst
