#pragma once

#include <cmath>
#include <limits>
#include <queue>

#include "lst/graph.hpp"

namespace lst {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Distances from a source set, plus the per-arc classification used by cone
// growing: arc (a -> b) is forward when dist(a) + length == dist(b) within tol.
struct DistanceField {
  std::vector<int> sources;
  std::vector<double> dist;
  std::vector<std::uint8_t> fwd_uv;  // arc edge.u -> edge.v
  std::vector<std::uint8_t> fwd_vu;  // arc edge.v -> edge.u
  double tol = 0.0;
};

// Tolerance scales with the largest finite distance so unit graphs and
// widely-scaled metrics get the same relative slack.
inline double distance_tolerance(double max_dist) {
  return 1e-9 * std::max(1.0, max_dist);
}

inline bool arc_is_forward(const DistanceField& f, const WeightedMultigraph& g,
                           int e, int tail) {
  return tail == g.edge(e).u ? f.fwd_uv[static_cast<size_t>(e)] != 0
                             : f.fwd_vu[static_cast<size_t>(e)] != 0;
}

namespace detail {

inline bool uniform_lengths(const WeightedMultigraph& g) {
  if (g.edge_count() == 0) return true;
  double len = g.edge(0).length;
  for (const Edge& e : g.edges())
    if (e.length != len) return false;
  return true;
}

inline void dijkstra(const WeightedMultigraph& g, const std::vector<int>& sources,
                     std::vector<double>& dist) {
  dist.assign(static_cast<size_t>(g.vertex_count()), kInf);
  using Item = std::pair<double, int>;  // ties pop the lowest vertex id
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  for (int s : sources) {
    dist[static_cast<size_t>(s)] = 0.0;
    heap.emplace(0.0, s);
  }
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[static_cast<size_t>(v)]) continue;
    for (int e : g.incident_edges(v)) {
      if (g.is_loop(e)) continue;
      int w = g.other_end(e, v);
      double nd = d + g.length(e);
      if (nd < dist[static_cast<size_t>(w)]) {
        dist[static_cast<size_t>(w)] = nd;
        heap.emplace(nd, w);
      }
    }
  }
}

// All lengths equal: plain BFS on hop count, scaled by the common length.
inline void uniform_bfs(const WeightedMultigraph& g, const std::vector<int>& sources,
                        std::vector<double>& dist) {
  double len = g.edge_count() > 0 ? g.edge(0).length : 1.0;
  std::vector<int> hops(static_cast<size_t>(g.vertex_count()), -1);
  std::vector<int> queue;
  queue.reserve(static_cast<size_t>(g.vertex_count()));
  for (int s : sources) {
    if (hops[static_cast<size_t>(s)] == 0) continue;
    hops[static_cast<size_t>(s)] = 0;
    queue.push_back(s);
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int e : g.incident_edges(v)) {
      if (g.is_loop(e)) continue;
      int w = g.other_end(e, v);
      if (hops[static_cast<size_t>(w)] >= 0) continue;
      hops[static_cast<size_t>(w)] = hops[static_cast<size_t>(v)] + 1;
      queue.push_back(w);
    }
  }
  dist.assign(static_cast<size_t>(g.vertex_count()), kInf);
  for (int v = 0; v < g.vertex_count(); ++v)
    if (hops[static_cast<size_t>(v)] >= 0)
      dist[static_cast<size_t>(v)] = len * hops[static_cast<size_t>(v)];
}

}  // namespace detail

inline DistanceField multi_source_distances(const WeightedMultigraph& g,
                                            std::vector<int> sources) {
  if (sources.empty())
    throw std::invalid_argument("multi_source_distances: empty source set");
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  for (int s : sources)
    if (s < 0 || s >= g.vertex_count())
      throw std::invalid_argument("multi_source_distances: source out of range");

  DistanceField f;
  f.sources = std::move(sources);
  if (detail::uniform_lengths(g))
    detail::uniform_bfs(g, f.sources, f.dist);
  else
    detail::dijkstra(g, f.sources, f.dist);

  double max_dist = 0.0;
  for (double d : f.dist)
    if (std::isfinite(d)) max_dist = std::max(max_dist, d);
  f.tol = distance_tolerance(max_dist);

  f.fwd_uv.assign(static_cast<size_t>(g.edge_count()), 0);
  f.fwd_vu.assign(static_cast<size_t>(g.edge_count()), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.u == ed.v) continue;
    double du = f.dist[static_cast<size_t>(ed.u)];
    double dv = f.dist[static_cast<size_t>(ed.v)];
    if (!std::isfinite(du) || !std::isfinite(dv)) continue;
    if (std::abs(du + ed.length - dv) <= f.tol) f.fwd_uv[static_cast<size_t>(e)] = 1;
    if (std::abs(dv + ed.length - du) <= f.tol) f.fwd_vu[static_cast<size_t>(e)] = 1;
  }
  return f;
}

// Largest distance from x; rejects disconnected inputs.
inline double radius_from(const WeightedMultigraph& g, int x) {
  DistanceField f = multi_source_distances(g, {x});
  double r = 0.0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    double d = f.dist[static_cast<size_t>(v)];
    if (!std::isfinite(d))
      throw std::invalid_argument("radius_from: vertex " + std::to_string(v) +
                                  " unreachable from " + std::to_string(x));
    r = std::max(r, d);
  }
  return r;
}

inline std::vector<int> ball(const WeightedMultigraph& g, const DistanceField& f,
                             double r) {
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (f.dist[static_cast<size_t>(v)] <= r) out.push_back(v);
  return out;
}

inline std::vector<int> ball(const WeightedMultigraph& g, int x, double r) {
  return ball(g, multi_source_distances(g, {x}), r);
}

// Vertices just outside the ball: u with a neighbor w inside such that the
// edge (w,u) extends a shortest path from the center.
inline std::vector<int> ball_shell(const WeightedMultigraph& g,
                                   const DistanceField& f, double r) {
  std::vector<int> out;
  for (int u = 0; u < g.vertex_count(); ++u) {
    double du = f.dist[static_cast<size_t>(u)];
    if (du <= r || !std::isfinite(du)) continue;
    bool hit = false;
    for (int e : g.incident_edges(u)) {
      if (g.is_loop(e)) continue;
      int w = g.other_end(e, u);
      double dw = f.dist[static_cast<size_t>(w)];
      if (dw <= r && std::abs(dw + g.length(e) - du) <= f.tol) {
        hit = true;
        break;
      }
    }
    if (hit) out.push_back(u);
  }
  return out;
}

inline std::vector<int> ball_shell(const WeightedMultigraph& g, int x, double r) {
  return ball_shell(g, multi_source_distances(g, {x}), r);
}

inline bool is_connected(const WeightedMultigraph& g) {
  if (g.vertex_count() == 0) return false;
  DistanceField f = multi_source_distances(g, {0});
  for (double d : f.dist)
    if (!std::isfinite(d)) return false;
  return true;
}

}  // namespace lst
