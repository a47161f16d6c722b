#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lst/graph.hpp"
#include "lst/shortest_paths.hpp"

namespace lst {

// One record per region-growing cut. `volume`, `volume_inside` and
// `boundary_cost` are recounted by a fresh scan over the graph after the
// radius is chosen, so a consumer can re-derive the bound
// (volume + tau) * scale / denominator from raw numbers instead of trusting
// the incremental counters. Touching counts include boundary edges; inside
// counts require both endpoints in the region.
struct CutRecord {
  enum class Kind { ball, cone };
  Kind kind = Kind::ball;
  double window_lo = 0.0;  // radius must land in [window_lo, window_hi)
  double window_hi = 0.0;
  double radius = 0.0;
  double boundary_cost = 0.0;
  long long volume = 0;           // non-loop live edges touching the cut region
  long long volume_inside = 0;    // non-loop live edges inside the cut region
  long long volume_at_start = 0;  // touching count at radius window_lo
  long long inside_at_start = 0;  // inside count at radius window_lo
  long long tau = 0;              // cones: 1 exactly when inside_at_start == 0
  double scale = 0.0;        // log2(m+1) for balls, capped volume-ratio log for cones
  double denominator = 0.0;  // full window width
  long long edge_count = 0;  // non-loop edges of the graph the cut ran on
};

using CutLog = std::vector<CutRecord>;

struct DecompOptions {
  // Recompute source distances on the shrunken graph after every removal and
  // require them to match the reused field.
  bool rederive_fields = false;
  CutLog* log = nullptr;
};

namespace detail {

struct CutCounts {
  long long touching = 0;
  long long inside = 0;
  double boundary_cost = 0.0;
};

inline CutCounts recount_cut(const WeightedMultigraph& g, const std::vector<char>& member,
                             const std::vector<char>* alive) {
  CutCounts c;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) continue;
    const Edge& ed = g.edge(e);
    if (alive && (!(*alive)[static_cast<size_t>(ed.u)] || !(*alive)[static_cast<size_t>(ed.v)]))
      continue;
    bool mu = member[static_cast<size_t>(ed.u)] != 0;
    bool mv = member[static_cast<size_t>(ed.v)] != 0;
    if (mu || mv) ++c.touching;
    if (mu && mv) ++c.inside;
    if (mu != mv) c.boundary_cost += g.weight(e);
  }
  return c;
}

// Grows a region from an anchor in order of cone distance: arcs that advance
// the field's shortest paths are free, every other arc costs its length.
// Vertices outside `alive` do not exist. Batches of equal distance are
// absorbed together so membership is a function of the radius alone.
class ConeGrower {
 public:
  void attach(const WeightedMultigraph& g, const DistanceField& field,
              const std::vector<char>* alive) {
    g_ = &g;
    field_ = &field;
    alive_ = alive;
    tent_.assign(static_cast<size_t>(g.vertex_count()), kInf);
    member_.assign(static_cast<size_t>(g.vertex_count()), 0);
    touched_.clear();
  }

  void start(int anchor) {
    for (int v : touched_) {
      tent_[static_cast<size_t>(v)] = kInf;
      member_[static_cast<size_t>(v)] = 0;
    }
    touched_.clear();
    members_.clear();
    pq_ = Queue();
    vol_ = 0;
    inside_ = 0;
    cost_ = 0.0;
    if (anchor < 0 || anchor >= g_->vertex_count())
      throw std::invalid_argument("cone anchor out of range");
    if (alive_ && !(*alive_)[static_cast<size_t>(anchor)])
      throw std::invalid_argument("cone anchor was already removed");
    set_tent(anchor, 0.0);
    pq_.push({0.0, anchor});
  }

  // Smallest cone distance not yet absorbed; kInf when the region is maximal.
  double next_candidate() {
    while (!pq_.empty()) {
      auto [d, v] = pq_.top();
      if (member_[static_cast<size_t>(v)] || d > tent_[static_cast<size_t>(v)]) {
        pq_.pop();
        continue;
      }
      return d;
    }
    return kInf;
  }

  void absorb_batch(double value) {
    while (next_candidate() == value) {
      int v = pq_.top().second;
      pq_.pop();
      absorb(v);
    }
  }

  void absorb_up_to(double limit) {
    for (double c = next_candidate(); c != kInf && c <= limit; c = next_candidate())
      absorb_batch(c);
  }

  long long volume() const { return vol_; }
  long long inside_volume() const { return inside_; }
  double boundary_cost() const { return cost_; }
  const std::vector<int>& members() const { return members_; }
  const std::vector<char>& member_mask() const { return member_; }
  double distance_of(int v) const { return tent_[static_cast<size_t>(v)]; }
  const WeightedMultigraph& graph() const { return *g_; }
  const std::vector<char>* alive() const { return alive_; }

 private:
  using Queue = std::priority_queue<std::pair<double, int>,
                                    std::vector<std::pair<double, int>>, std::greater<>>;

  void set_tent(int v, double value) {
    if (tent_[static_cast<size_t>(v)] == kInf) touched_.push_back(v);
    tent_[static_cast<size_t>(v)] = value;
  }

  void absorb(int u) {
    member_[static_cast<size_t>(u)] = 1;
    members_.push_back(u);
    for (int e : g_->incident_edges(u)) {
      if (g_->is_loop(e)) continue;
      int w = g_->other_end(e, u);
      if (alive_ && !(*alive_)[static_cast<size_t>(w)]) continue;
      if (member_[static_cast<size_t>(w)]) {
        cost_ -= g_->weight(e);
        ++inside_;
        continue;
      }
      cost_ += g_->weight(e);
      ++vol_;
      double step = arc_is_forward(*field_, *g_, e, u) ? 0.0 : g_->length(e);
      double cand = tent_[static_cast<size_t>(u)] + step;
      if (cand < tent_[static_cast<size_t>(w)]) {
        set_tent(w, cand);
        pq_.push({cand, w});
      }
    }
  }

  const WeightedMultigraph* g_ = nullptr;
  const DistanceField* field_ = nullptr;
  const std::vector<char>* alive_ = nullptr;
  std::vector<double> tent_;
  std::vector<char> member_;
  std::vector<int> touched_;
  std::vector<int> members_;
  Queue pq_;
  long long vol_ = 0;
  long long inside_ = 0;
  double cost_ = 0.0;
};

// Advances the region until its boundary cost drops to
// (volume + tau) * scale / (hi - lo). The touching volume grows with the
// region; tau and scale are frozen from the region at radius lo, with the
// inside edge count in the log's denominator so the count can only shrink the
// bound when the start region is edge-sparse. The grower must not have been
// grown past lo.
inline double cut_within_window(ConeGrower& gr, double lo, double hi, long long m,
                                CutLog* log) {
  gr.absorb_up_to(lo);
  long long vol0 = gr.volume();
  long long inside0 = gr.inside_volume();
  long long tau = inside0 == 0 ? 1 : 0;
  double scale = std::max(
      1.0, std::log2(static_cast<double>(m + tau) / static_cast<double>(inside0 + tau)));
  double width = hi - lo;
  double r = lo;
  while (gr.boundary_cost() >
         (static_cast<double>(gr.volume()) + static_cast<double>(tau)) * scale / width) {
    double next = gr.next_candidate();
    if (!(next < hi)) throw std::logic_error("cone cut exhausted its radius window");
    gr.absorb_batch(next);
    r = next;
  }
  if (log) {
    CutRecord rec;
    rec.kind = CutRecord::Kind::cone;
    rec.window_lo = lo;
    rec.window_hi = hi;
    rec.radius = r;
    CutCounts counts = recount_cut(gr.graph(), gr.member_mask(), gr.alive());
    rec.volume = counts.touching;
    rec.volume_inside = counts.inside;
    rec.boundary_cost = counts.boundary_cost;
    rec.volume_at_start = vol0;
    rec.inside_at_start = inside0;
    rec.tau = tau;
    rec.scale = scale;
    rec.denominator = width;
    rec.edge_count = m;
    log->push_back(rec);
  }
  return r;
}

}  // namespace detail

// Grows a ball around the field's sources until the boundary cost drops to
// (volume + 1) * log2(m + 1) / ((1 - 2 delta) rho). The chosen radius lies in
// [delta * rho, (1 - delta) * rho).
inline double ball_cut(const WeightedMultigraph& g, const DistanceField& field, double rho,
                       double delta, CutLog* log = nullptr) {
  int n = g.vertex_count();
  if (static_cast<int>(field.dist.size()) != n)
    throw std::invalid_argument("distance field does not match graph");
  if (!(rho > 0.0) || !std::isfinite(rho))
    throw std::invalid_argument("ball cut needs a positive radius");
  if (!(delta > 0.0) || !(delta < 0.5))
    throw std::invalid_argument("ball cut fraction must lie in (0, 1/2)");
  for (int v = 0; v < n; ++v)
    if (field.dist[static_cast<size_t>(v)] == kInf)
      throw std::invalid_argument("ball cut needs a connected graph");

  std::vector<int> order(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    double da = field.dist[static_cast<size_t>(a)];
    double db = field.dist[static_cast<size_t>(b)];
    return da != db ? da < db : a < b;
  });

  long long m = g.nonloop_edge_count();
  double scale = std::log2(static_cast<double>(m) + 1.0);
  double width = (1.0 - 2.0 * delta) * rho;
  double hi = (1.0 - delta) * rho;

  std::vector<char> member(static_cast<size_t>(n), 0);
  long long vol = 0;
  long long inside = 0;
  double cost = 0.0;
  auto absorb = [&](int u) {
    member[static_cast<size_t>(u)] = 1;
    for (int e : g.incident_edges(u)) {
      if (g.is_loop(e)) continue;
      int w = g.other_end(e, u);
      if (member[static_cast<size_t>(w)]) {
        cost -= g.weight(e);
        ++inside;
      } else {
        cost += g.weight(e);
        ++vol;
      }
    }
  };

  size_t idx = 0;
  double r = delta * rho;
  while (idx < order.size() && field.dist[static_cast<size_t>(order[idx])] <= r)
    absorb(order[idx++]);
  long long vol0 = vol;
  long long inside0 = inside;
  while (cost > (static_cast<double>(vol) + 1.0) * scale / width) {
    if (idx >= order.size()) throw std::logic_error("ball cut ran out of vertices");
    double next = field.dist[static_cast<size_t>(order[idx])];
    if (!(next < hi)) throw std::logic_error("ball cut exhausted its radius window");
    while (idx < order.size() && field.dist[static_cast<size_t>(order[idx])] == next)
      absorb(order[idx++]);
    r = next;
  }
  if (log) {
    CutRecord rec;
    rec.kind = CutRecord::Kind::ball;
    rec.window_lo = delta * rho;
    rec.window_hi = hi;
    rec.radius = r;
    detail::CutCounts counts = detail::recount_cut(g, member, nullptr);
    rec.volume = counts.touching;
    rec.volume_inside = counts.inside;
    rec.boundary_cost = counts.boundary_cost;
    rec.volume_at_start = vol0;
    rec.inside_at_start = inside0;
    rec.tau = 1;
    rec.scale = scale;
    rec.denominator = width;
    rec.edge_count = m;
    log->push_back(rec);
  }
  return r;
}

inline double ball_cut(const WeightedMultigraph& g, int center, double rho, double delta,
                       CutLog* log = nullptr) {
  DistanceField field = multi_source_distances(g, {center});
  return ball_cut(g, field, rho, delta, log);
}

// Cheapest mixed cost to reach each vertex from `anchor`; kInf if unreachable.
inline std::vector<double> cone_distances(const WeightedMultigraph& g,
                                          const DistanceField& field, int anchor) {
  if (static_cast<int>(field.dist.size()) != g.vertex_count())
    throw std::invalid_argument("distance field does not match graph");
  detail::ConeGrower gr;
  gr.attach(g, field, nullptr);
  gr.start(anchor);
  gr.absorb_up_to(kInf);
  std::vector<double> out(static_cast<size_t>(g.vertex_count()), kInf);
  for (int v : gr.members()) out[static_cast<size_t>(v)] = gr.distance_of(v);
  return out;
}

// Vertices whose cone distance from `anchor` is at most `limit`, sorted.
inline std::vector<int> cone(const WeightedMultigraph& g, const DistanceField& field,
                             int anchor, double limit) {
  if (static_cast<int>(field.dist.size()) != g.vertex_count())
    throw std::invalid_argument("distance field does not match graph");
  if (!(limit >= 0.0)) throw std::invalid_argument("cone limit must be nonnegative");
  detail::ConeGrower gr;
  gr.attach(g, field, nullptr);
  gr.start(anchor);
  gr.absorb_up_to(limit);
  std::vector<int> out = gr.members();
  std::sort(out.begin(), out.end());
  return out;
}

struct ConeCutResult {
  double radius = 0.0;
  std::vector<int> members;  // sorted
};

// Cuts a cone around `anchor` at a radius in [lo, hi).
inline ConeCutResult cone_cut(const WeightedMultigraph& g, const DistanceField& field,
                              int anchor, double lo, double hi, CutLog* log = nullptr) {
  if (static_cast<int>(field.dist.size()) != g.vertex_count())
    throw std::invalid_argument("distance field does not match graph");
  if (!(lo >= 0.0) || !(hi > lo)) throw std::invalid_argument("cone cut window is empty");
  detail::ConeGrower gr;
  gr.attach(g, field, nullptr);
  gr.start(anchor);
  ConeCutResult out;
  out.radius = detail::cut_within_window(gr, lo, hi, g.nonloop_edge_count(), log);
  out.members = gr.members();
  std::sort(out.members.begin(), out.members.end());
  return out;
}

struct ConePartition {
  std::vector<std::vector<int>> parts;  // sorted, disjoint, cover every vertex
  std::vector<int> anchors;             // anchors[j] lies in parts[j]
  std::vector<double> cut_radii;
  std::vector<int> cut_levels;  // window index chosen per part
  std::vector<int> part_of;     // vertex -> part index
};

namespace detail {

// Peels cones off the graph until nothing is left. Each anchor is the
// lowest-id surviving source. The source distance field is computed once:
// removing a whole cone leaves the remaining distances unchanged, which
// `rederive_fields` re-checks the hard way.
template <class ChooseCut>
ConePartition cone_decomp_core(const WeightedMultigraph& g, const std::vector<int>& sources,
                               const DecompOptions& opts, ChooseCut&& choose_cut) {
  int n = g.vertex_count();
  std::vector<int> srcs = sources;
  std::sort(srcs.begin(), srcs.end());
  srcs.erase(std::unique(srcs.begin(), srcs.end()), srcs.end());
  DistanceField field = multi_source_distances(g, srcs);
  for (int v = 0; v < n; ++v)
    if (field.dist[static_cast<size_t>(v)] == kInf)
      throw std::invalid_argument("cone sources must reach every vertex");

  std::vector<char> alive(static_cast<size_t>(n), 1);
  long long m_alive = g.nonloop_edge_count();
  int alive_count = n;

  ConePartition out;
  out.part_of.assign(static_cast<size_t>(n), -1);

  ConeGrower gr;
  gr.attach(g, field, &alive);
  size_t src_idx = 0;
  while (alive_count > 0) {
    while (src_idx < srcs.size() && !alive[static_cast<size_t>(srcs[src_idx])]) ++src_idx;
    if (src_idx == srcs.size())
      throw std::logic_error("vertices remain but every source is gone");
    int anchor = srcs[src_idx];
    gr.start(anchor);
    auto [radius, level] = choose_cut(gr, m_alive);

    std::vector<int> part = gr.members();
    std::sort(part.begin(), part.end());
    int index = static_cast<int>(out.parts.size());
    for (int u : part) {
      alive[static_cast<size_t>(u)] = 0;
      out.part_of[static_cast<size_t>(u)] = index;
    }
    const std::vector<char>& in_part = gr.member_mask();
    for (int u : part) {
      for (int e : g.incident_edges(u)) {
        if (g.is_loop(e)) continue;
        int w = g.other_end(e, u);
        if (alive[static_cast<size_t>(w)]) {
          --m_alive;  // edge leaving the removed cone
        } else if (in_part[static_cast<size_t>(w)] && u < w) {
          --m_alive;  // edge inside the cone, counted once
        }
      }
    }
    alive_count -= static_cast<int>(part.size());
    out.parts.push_back(std::move(part));
    out.anchors.push_back(anchor);
    out.cut_radii.push_back(radius);
    out.cut_levels.push_back(level);

    if (opts.rederive_fields && alive_count > 0) {
      std::vector<int> rest;
      rest.reserve(static_cast<size_t>(alive_count));
      for (int v = 0; v < n; ++v)
        if (alive[static_cast<size_t>(v)]) rest.push_back(v);
      InducedSubgraph sub = induced_subgraph(g, rest);
      std::vector<int> live_srcs;
      for (int s : srcs)
        if (alive[static_cast<size_t>(s)]) live_srcs.push_back(sub.vertex_map[static_cast<size_t>(s)]);
      if (live_srcs.empty()) throw std::logic_error("vertices remain but every source is gone");
      DistanceField again = multi_source_distances(sub.graph, live_srcs);
      for (size_t i = 0; i < rest.size(); ++i) {
        double a = field.dist[static_cast<size_t>(rest[i])];
        double b = again.dist[i];
        if (std::abs(a - b) > 1e-9 * std::max(1.0, std::abs(a)))
          throw std::logic_error("removing a cone changed the remaining source distances");
      }
    }
  }
  return out;
}

}  // namespace detail

// Partitions the whole graph into cones anchored at sources, each cut at a
// radius in [0, width).
inline ConePartition cone_decomp(const WeightedMultigraph& g, const std::vector<int>& sources,
                                 double width, const DecompOptions& opts = {}) {
  if (!(width > 0.0) || !std::isfinite(width))
    throw std::invalid_argument("cone width must be positive");
  return detail::cone_decomp_core(g, sources, opts,
                                  [&](detail::ConeGrower& gr, long long m) {
                                    double r = detail::cut_within_window(gr, 0.0, width, m, opts.log);
                                    return std::pair<double, int>{r, 0};
                                  });
}

// Same partition shape, but each cone walks through narrower windows: stage p
// cuts inside [(levels-p-1)/levels, (levels-p)/levels) of the width and keeps
// that cut once the cone it produced holds at most
// m / 2^((log2 m_hat)^(p/levels)) internal edges. If every staged cut is too
// big, a final unconditional cut lands in the last window (level 0). With
// levels == 1 this reduces to cone_decomp.
inline ConePartition imp_cone_decomp(const WeightedMultigraph& g,
                                     const std::vector<int>& sources, double width,
                                     int levels, long long m_hat = 0,
                                     const DecompOptions& opts = {}) {
  if (!(width > 0.0) || !std::isfinite(width))
    throw std::invalid_argument("cone width must be positive");
  if (levels < 1) throw std::invalid_argument("window count must be at least 1");
  if (m_hat < 0) throw std::invalid_argument("edge count hint must be nonnegative");
  long long mh = m_hat > 0 ? m_hat : g.nonloop_edge_count();
  return detail::cone_decomp_core(
      g, sources, opts, [&](detail::ConeGrower& gr, long long m) {
        for (int p = levels - 1; p >= 1; --p) {
          double lo = (static_cast<double>(levels - p - 1) / levels) * width;
          double hi = (static_cast<double>(levels - p) / levels) * width;
          double r = detail::cut_within_window(gr, lo, hi, m, opts.log);
          double cap = static_cast<double>(m) /
                       std::exp2(std::pow(std::log2(static_cast<double>(mh)),
                                          static_cast<double>(p) / levels));
          if (static_cast<double>(gr.inside_volume()) <= cap)
            return std::pair<double, int>{r, p};
        }
        double lo = (static_cast<double>(levels - 1) / levels) * width;
        double r = detail::cut_within_window(gr, lo, width, m, opts.log);
        return std::pair<double, int>{r, 0};
      });
}

struct StarBridge {
  int anchor = -1;       // cone-side endpoint, the cone's anchor
  int center_side = -1;  // endpoint inside the central ball
  int edge = -1;
};

struct StarDecomposition {
  int center = -1;
  double radius = 0.0;  // eccentricity of the center
  double r0 = 0.0;      // ball cut radius
  std::vector<std::vector<int>> parts;  // parts[0] is the central ball
  std::vector<StarBridge> bridges;      // bridges[i] attaches parts[i + 1]
  std::vector<double> cone_radii;       // per cone part
  std::vector<int> cone_levels;
  std::vector<int> part_of;
};

namespace detail {

inline StarDecomposition star_decomp_core(const WeightedMultigraph& g, int center,
                                          double delta, double eps, int levels,
                                          long long m_hat, const DecompOptions& opts) {
  int n = g.vertex_count();
  if (std::abs(delta - 1.0 / 3.0) > 1e-12)
    throw std::invalid_argument("central ball fraction must be 1/3");
  if (!(eps > 0.0) || eps > 0.5)
    throw std::invalid_argument("radius slack must lie in (0, 1/2]");
  DistanceField field = multi_source_distances(g, {center});
  double rho = 0.0;
  for (int v = 0; v < n; ++v) {
    if (field.dist[static_cast<size_t>(v)] == kInf)
      throw std::invalid_argument("star decomposition needs a connected graph");
    rho = std::max(rho, field.dist[static_cast<size_t>(v)]);
  }
  if (!(rho > 0.0))
    throw std::invalid_argument("star decomposition needs a graph of positive radius");

  StarDecomposition out;
  out.center = center;
  out.radius = rho;
  out.r0 = ball_cut(g, field, rho, delta, opts.log);

  std::vector<int> ball_members = ball(g, field, out.r0);
  std::vector<int> shell = ball_shell(g, field, out.r0);
  std::vector<char> in_ball(static_cast<size_t>(n), 0);
  for (int v : ball_members) in_ball[static_cast<size_t>(v)] = 1;
  std::vector<int> rest;
  rest.reserve(static_cast<size_t>(n - ball_members.size()));
  for (int v = 0; v < n; ++v)
    if (!in_ball[static_cast<size_t>(v)]) rest.push_back(v);
  if (rest.empty() || shell.empty())
    throw std::logic_error("ball cut swallowed the whole graph");

  InducedSubgraph sub = induced_subgraph(g, rest);
  std::vector<int> shell_sub;
  shell_sub.reserve(shell.size());
  for (int s : shell) shell_sub.push_back(sub.vertex_map[static_cast<size_t>(s)]);

  double width = eps * rho / 2.0;
  ConePartition cones =
      levels >= 1 ? imp_cone_decomp(sub.graph, shell_sub, width, levels, m_hat, opts)
                  : cone_decomp(sub.graph, shell_sub, width, opts);

  out.parts.push_back(ball_members);
  out.part_of.assign(static_cast<size_t>(n), 0);
  for (size_t j = 0; j < cones.parts.size(); ++j) {
    std::vector<int> part;
    part.reserve(cones.parts[j].size());
    for (int v : cones.parts[j]) part.push_back(sub.vertices[static_cast<size_t>(v)]);
    int index = static_cast<int>(out.parts.size());
    for (int v : part) out.part_of[static_cast<size_t>(v)] = index;
    out.parts.push_back(std::move(part));

    int anchor = sub.vertices[static_cast<size_t>(cones.anchors[j])];
    StarBridge bridge;
    bridge.anchor = anchor;
    for (int e : g.incident_edges(anchor)) {
      if (g.is_loop(e)) continue;
      int y = g.other_end(e, anchor);
      if (!in_ball[static_cast<size_t>(y)]) continue;
      double gap = std::abs(field.dist[static_cast<size_t>(y)] + g.length(e) -
                            field.dist[static_cast<size_t>(anchor)]);
      if (gap > field.tol) continue;
      if (bridge.edge < 0 || y < bridge.center_side ||
          (y == bridge.center_side && e < bridge.edge)) {
        bridge.center_side = y;
        bridge.edge = e;
      }
    }
    if (bridge.edge < 0) throw std::logic_error("cone anchor has no tight edge into the ball");
    out.bridges.push_back(bridge);
    out.cone_radii.push_back(cones.cut_radii[j]);
    out.cone_levels.push_back(cones.cut_levels[j]);
  }
  return out;
}

}  // namespace detail

// Splits the graph into a central ball around `center` plus cones hanging off
// its shell, each cone tied back by one edge on a shortest path from the
// center to the cone's anchor.
inline StarDecomposition star_decomp(const WeightedMultigraph& g, int center, double delta,
                                     double eps, const DecompOptions& opts = {}) {
  return detail::star_decomp_core(g, center, delta, eps, 0, 0, opts);
}

inline StarDecomposition imp_star_decomp(const WeightedMultigraph& g, int center,
                                         double delta, double eps, int levels,
                                         long long m_hat = 0,
                                         const DecompOptions& opts = {}) {
  if (levels < 1) throw std::invalid_argument("window count must be at least 1");
  return detail::star_decomp_core(g, center, delta, eps, levels, m_hat, opts);
}

}  // namespace lst
