#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lst {

// One undirected edge of a weighted multigraph. Parallel edges and self-loops
// are legal. An edge's weight is the reciprocal of its length, so short edges
// are heavy and long edges are cheap to cut.
struct Edge {
  int u = 0;
  int v = 0;
  double length = 1.0;
};

// Immutable vertex-indexed multigraph with a CSR incidence table.
// Self-loops appear once in their vertex's incidence list.
class WeightedMultigraph {
 public:
  WeightedMultigraph() = default;

  WeightedMultigraph(int n, std::vector<Edge> edges)
      : n_(n), edges_(std::move(edges)) {
    off_.assign(static_cast<size_t>(n_) + 1, 0);
    for (const Edge& e : edges_) {
      ++off_[static_cast<size_t>(e.u) + 1];
      if (e.v != e.u) ++off_[static_cast<size_t>(e.v) + 1];
    }
    for (size_t i = 1; i < off_.size(); ++i) off_[i] += off_[i - 1];
    inc_.resize(off_.back());
    std::vector<int> cursor(off_.begin(), off_.end() - 1);
    for (int id = 0; id < static_cast<int>(edges_.size()); ++id) {
      const Edge& e = edges_[static_cast<size_t>(id)];
      inc_[static_cast<size_t>(cursor[static_cast<size_t>(e.u)]++)] = id;
      if (e.v != e.u)
        inc_[static_cast<size_t>(cursor[static_cast<size_t>(e.v)]++)] = id;
    }
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  double length(int e) const { return edges_[static_cast<size_t>(e)].length; }
  double weight(int e) const { return 1.0 / edges_[static_cast<size_t>(e)].length; }
  bool is_loop(int e) const {
    const Edge& ed = edges_[static_cast<size_t>(e)];
    return ed.u == ed.v;
  }

  int other_end(int e, int at) const {
    const Edge& ed = edges_[static_cast<size_t>(e)];
    return ed.u == at ? ed.v : ed.u;
  }

  // Edge ids incident to v, in increasing id order; loops listed once.
  std::span<const int> incident_edges(int v) const {
    return {inc_.data() + off_[static_cast<size_t>(v)],
            inc_.data() + off_[static_cast<size_t>(v) + 1]};
  }

  // Edges with distinct endpoints; loops never contribute to volumes,
  // boundaries, or distances.
  int nonloop_edge_count() const {
    int c = 0;
    for (const Edge& e : edges_)
      if (e.u != e.v) ++c;
    return c;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<size_t> off_;
  std::vector<int> inc_;
};

// Validating constructor; diagnostics name the offending edge index.
inline WeightedMultigraph build_graph(int n, std::vector<Edge> edges) {
  if (n < 1) throw std::invalid_argument("build_graph: need at least one vertex");
  for (size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw std::invalid_argument("build_graph: edge " + std::to_string(i) +
                                  ": endpoint out of range [0," +
                                  std::to_string(n) + ")");
    if (!(e.length > 0.0) || !std::isfinite(e.length))
      throw std::invalid_argument("build_graph: edge " + std::to_string(i) +
                                  ": length must be positive and finite");
  }
  return WeightedMultigraph(n, std::move(edges));
}

// A vertex subset of a fixed graph with O(1) membership.
class VertexSetView {
 public:
  VertexSetView(const WeightedMultigraph& g, std::vector<int> members)
      : g_(&g), members_(std::move(members)),
        mask_(static_cast<size_t>(g.vertex_count()), 0) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (int v : members_) {
      if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("VertexSetView: vertex out of range");
      mask_[static_cast<size_t>(v)] = 1;
    }
  }

  const WeightedMultigraph& graph() const { return *g_; }
  const std::vector<int>& members() const { return members_; }
  bool contains(int v) const { return mask_[static_cast<size_t>(v)] != 0; }

 private:
  const WeightedMultigraph* g_;
  std::vector<int> members_;
  std::vector<std::uint8_t> mask_;
};

// Number of non-loop edges with at least one endpoint in the set.
inline int volume_of(const VertexSetView& s) {
  const WeightedMultigraph& g = s.graph();
  int incidences = 0;
  int internal_twice = 0;
  for (int v : s.members()) {
    for (int e : g.incident_edges(v)) {
      if (g.is_loop(e)) continue;
      ++incidences;
      if (s.contains(g.other_end(e, v))) ++internal_twice;
    }
  }
  return incidences - internal_twice / 2;
}

// Number of non-loop edges with both endpoints in the set.
inline int volume_of_internal(const VertexSetView& s) {
  const WeightedMultigraph& g = s.graph();
  int internal_twice = 0;
  for (int v : s.members())
    for (int e : g.incident_edges(v)) {
      if (g.is_loop(e)) continue;
      if (s.contains(g.other_end(e, v))) ++internal_twice;
    }
  return internal_twice / 2;
}

// Edge ids with exactly one endpoint in the set, ascending.
inline std::vector<int> boundary_of(const VertexSetView& s) {
  const WeightedMultigraph& g = s.graph();
  std::vector<int> out;
  for (int v : s.members())
    for (int e : g.incident_edges(v)) {
      if (g.is_loop(e)) continue;
      if (!s.contains(g.other_end(e, v))) out.push_back(e);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Sum of weights over an explicit edge-id set; ids are taken as given,
// so loops count here if present.
inline double cost_of(const WeightedMultigraph& g, const std::vector<int>& edge_ids) {
  double c = 0.0;
  for (int e : edge_ids) c += g.weight(e);
  return c;
}

struct InducedSubgraph {
  WeightedMultigraph graph;
  std::vector<int> vertices;    // new id -> old id, ascending
  std::vector<int> vertex_map;  // old id -> new id, -1 outside
  std::vector<int> edge_map;    // new edge id -> old edge id
};

// Subgraph on the given vertices; keeps loops at members and every parallel
// copy whose endpoints both survive.
inline InducedSubgraph induced_subgraph(const WeightedMultigraph& g,
                                        std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  InducedSubgraph out;
  out.vertex_map.assign(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    out.vertex_map[static_cast<size_t>(v)] = static_cast<int>(i);
  }
  out.vertices = std::move(vertices);
  std::vector<Edge> edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    int nu = out.vertex_map[static_cast<size_t>(ed.u)];
    int nv = out.vertex_map[static_cast<size_t>(ed.v)];
    if (nu < 0 || nv < 0) continue;
    edges.push_back({nu, nv, ed.length});
    out.edge_map.push_back(e);
  }
  out.graph = WeightedMultigraph(static_cast<int>(out.vertices.size()),
                                 std::move(edges));
  return out;
}

}  // namespace lst
