#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lst/graph.hpp"
#include "lst/shortest_paths.hpp"

namespace lst {

// Seeded source of draws with pinned mappings, so the same seed yields the
// same graphs on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // uniform in [0, 1)
  double u01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // uniform in [0, bound), rejection sampled
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty draw range");
    std::uint64_t rem = (std::numeric_limits<std::uint64_t>::max() % bound + 1) % bound;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - rem;
    std::uint64_t x = eng_();
    while (x > limit) x = eng_();
    return x % bound;
  }

  int pick(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // log-uniform in [1, max_value]
  double log_uniform(double max_value) {
    if (!(max_value >= 1.0)) throw std::invalid_argument("length scale must be at least 1");
    return max_value == 1.0 ? 1.0 : std::pow(max_value, u01());
  }

  static const char* mapping_id() { return "mt19937_64/u01-shift11/pow-log-uniform"; }

 private:
  std::mt19937_64 eng_;
};

inline WeightedMultigraph path_graph(int n, double length = 1.0) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, length});
  return build_graph(n, std::move(edges));
}

inline WeightedMultigraph cycle_graph(int n, double length = 1.0) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, length});
  edges.push_back({n - 1, 0, length});
  return build_graph(n, std::move(edges));
}

// Row-major grid; edge order is right neighbor then down neighbor per cell.
inline WeightedMultigraph grid_graph(int rows, int cols, double length = 1.0) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid needs positive side lengths");
  std::vector<Edge> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), length});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), length});
    }
  return build_graph(rows * cols, std::move(edges));
}

// Grid with wraparound edges. A dimension of two keeps the doubled edge; a
// dimension of one gets no wraparound.
inline WeightedMultigraph torus_graph(int rows, int cols, double length = 1.0) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("torus needs positive side lengths");
  std::vector<Edge> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols)
        edges.push_back({id(r, c), id(r, c + 1), length});
      else if (cols > 1)
        edges.push_back({id(r, c), id(r, 0), length});
      if (r + 1 < rows)
        edges.push_back({id(r, c), id(r + 1, c), length});
      else if (rows > 1)
        edges.push_back({id(r, c), id(0, c), length});
    }
  return build_graph(rows * cols, std::move(edges));
}

inline WeightedMultigraph complete_graph(int n, double length = 1.0) {
  if (n < 1) throw std::invalid_argument("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, length});
  return build_graph(n, std::move(edges));
}

// Random spanning tree plus `extra` additional edges; the extras may create
// parallel edges and, when allowed, self-loops. Lengths are log-uniform in
// [1, max_len].
inline WeightedMultigraph random_connected_multigraph(Rng& rng, int n, int extra,
                                                      double max_len,
                                                      bool allow_loops = true) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (extra < 0) throw std::invalid_argument("extra edge count must be nonnegative");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({rng.pick(0, v - 1), v, rng.log_uniform(max_len)});
  for (int i = 0; i < extra; ++i) {
    int u = rng.pick(0, n - 1);
    int v = rng.pick(0, n - 1);
    if (u == v && !allow_loops) v = (u + 1) % n;
    if (u == v && n == 1 && !allow_loops) break;
    edges.push_back({u, v, rng.log_uniform(max_len)});
  }
  return build_graph(n, std::move(edges));
}

// Each vertex pair joined independently with probability p; resamples until
// connected, giving up after 64 attempts.
inline WeightedMultigraph gnp_connected(Rng& rng, int n, double p, double max_len) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  if (!(p >= 0.0) || !(p <= 1.0)) throw std::invalid_argument("edge probability outside [0, 1]");
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.u01() < p) edges.push_back({u, v, rng.log_uniform(max_len)});
    WeightedMultigraph g = build_graph(n, std::move(edges));
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("no connected sample after 64 attempts; raise p or n");
}

}  // namespace lst
