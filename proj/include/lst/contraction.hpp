#pragma once

#include "lst/graph.hpp"

namespace lst {

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  std::vector<int> size;

  explicit UnionFind(int n) : parent(static_cast<size_t>(n)), size(static_cast<size_t>(n), 1) {
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  }

  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[static_cast<size_t>(a)] < size[static_cast<size_t>(b)]) std::swap(a, b);
    parent[static_cast<size_t>(b)] = a;
    size[static_cast<size_t>(a)] += size[static_cast<size_t>(b)];
  }
};

}  // namespace detail

struct ContractionResult {
  WeightedMultigraph quotient;
  std::vector<int> vertex_map;             // original -> quotient
  std::vector<std::vector<int>> preimages; // quotient -> sorted originals
  std::vector<int> edge_map;               // quotient edge -> original edge
  double threshold = 0.0;
};

// Glue together endpoints of every edge shorter than the threshold.
// Self-loops arising from contraction are dropped; original loops survive
// only if they are not short themselves. Quotient ids are assigned by the
// smallest original vertex in each class, so contraction is deterministic.
inline ContractionResult contract_short_edges(const WeightedMultigraph& g,
                                              double threshold) {
  if (!(threshold >= 0.0))
    throw std::invalid_argument("contract_short_edges: threshold must be >= 0");
  int n = g.vertex_count();
  detail::UnionFind uf(n);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.u != ed.v && ed.length < threshold) uf.unite(ed.u, ed.v);
  }

  ContractionResult out;
  out.threshold = threshold;
  out.vertex_map.assign(static_cast<size_t>(n), -1);
  std::vector<int> root_to_new(static_cast<size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    int r = uf.find(v);
    if (root_to_new[static_cast<size_t>(r)] < 0) {
      root_to_new[static_cast<size_t>(r)] = next++;
      out.preimages.emplace_back();
    }
    int id = root_to_new[static_cast<size_t>(r)];
    out.vertex_map[static_cast<size_t>(v)] = id;
    out.preimages[static_cast<size_t>(id)].push_back(v);
  }

  std::vector<Edge> edges;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.length < threshold) continue;
    int nu = out.vertex_map[static_cast<size_t>(ed.u)];
    int nv = out.vertex_map[static_cast<size_t>(ed.v)];
    if (nu == nv && ed.u != ed.v) continue;  // loop created by contraction
    edges.push_back({nu, nv, ed.length});
    out.edge_map.push_back(e);
  }
  out.quotient = WeightedMultigraph(next, std::move(edges));
  return out;
}

}  // namespace lst
