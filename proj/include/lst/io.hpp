#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "lst/decomposition.hpp"
#include "lst/graph.hpp"
#include "lst/metrics.hpp"
#include "lst/tree.hpp"

namespace lst {

// Shortest decimal form that parses back to the same double.
inline std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

namespace detail {

inline void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

inline bool skippable(const std::string& line) {
  size_t i = line.find_first_not_of(" \t");
  return i == std::string::npos || line[i] == '#';
}

inline std::vector<std::string_view> fields_of(const std::string& line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(std::string_view(line).substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
T parse_number(std::string_view sv, long line_no, const char* what) {
  T value{};
  auto res = std::from_chars(sv.data(), sv.data() + sv.size(), value);
  if (res.ec != std::errc() || res.ptr != sv.data() + sv.size())
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what +
                             " is not a number: '" + std::string(sv) + "'");
  return value;
}

}  // namespace detail

// Text form: optional '#' comment lines, a "n m" header, then m lines of
// "u v length".
inline void write_graph(std::ostream& os, const WeightedMultigraph& g,
                        const std::vector<std::string>& comments = {}) {
  for (const std::string& c : comments) os << "# " << c << '\n';
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges())
    os << e.u << ' ' << e.v << ' ' << format_double(e.length) << '\n';
}

inline WeightedMultigraph read_graph(std::istream& is) {
  std::string line;
  long line_no = 0;
  long header_line = 0;
  int n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  while (std::getline(is, line)) {
    ++line_no;
    detail::strip_cr(line);
    if (detail::skippable(line)) continue;
    auto fields = detail::fields_of(line);
    if (n < 0) {
      if (fields.size() != 2)
        throw std::runtime_error("line " + std::to_string(line_no) +
                                 ": expected header 'n m'");
      n = detail::parse_number<int>(fields[0], line_no, "vertex count");
      m = detail::parse_number<long long>(fields[1], line_no, "edge count");
      if (n < 1) throw std::runtime_error("line " + std::to_string(line_no) +
                                          ": vertex count must be positive");
      if (m < 0) throw std::runtime_error("line " + std::to_string(line_no) +
                                          ": edge count must be nonnegative");
      header_line = line_no;
      edges.reserve(static_cast<size_t>(m));
      continue;
    }
    if (static_cast<long long>(edges.size()) == m)
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": content after the declared edge list");
    if (fields.size() != 3)
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected 'u v length'");
    Edge e;
    e.u = detail::parse_number<int>(fields[0], line_no, "endpoint");
    e.v = detail::parse_number<int>(fields[1], line_no, "endpoint");
    e.length = detail::parse_number<double>(fields[2], line_no, "length");
    edges.push_back(e);
  }
  if (n < 0) throw std::runtime_error("missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m)
    throw std::runtime_error("declared " + std::to_string(m) + " edges on line " +
                             std::to_string(header_line) + " but found " +
                             std::to_string(edges.size()));
  try {
    return build_graph(n, std::move(edges));
  } catch (const std::invalid_argument& ex) {
    throw std::runtime_error(std::string("bad edge list: ") + ex.what());
  }
}

inline WeightedMultigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return read_graph(in);
  } catch (const std::runtime_error& ex) {
    throw std::runtime_error(path + ": " + ex.what());
  }
}

inline void write_graph_file(const std::string& path, const WeightedMultigraph& g,
                             const std::vector<std::string>& comments = {}) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_graph(out, g, comments);
  if (!out) throw std::runtime_error("failed writing " + path);
}

inline nlohmann::json tree_to_json(const SpanningTree& t) {
  return nlohmann::json{{"vertices", t.parent.size()},
                        {"root", t.root},
                        {"edges", t.edge_ids}};
}

inline SpanningTree tree_from_json(const WeightedMultigraph& g, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("root") || !j.contains("edges"))
    throw std::runtime_error("tree json needs 'root' and 'edges'");
  if (j.contains("vertices") &&
      j.at("vertices").get<long long>() != g.vertex_count())
    throw std::runtime_error("tree json was made for a different graph");
  try {
    return assemble_tree(g, j.at("root").get<int>(), j.at("edges").get<std::vector<int>>());
  } catch (const std::invalid_argument& ex) {
    throw std::runtime_error(std::string("bad tree json: ") + ex.what());
  }
}

inline nlohmann::json star_to_json(const StarDecomposition& s) {
  nlohmann::json bridges = nlohmann::json::array();
  for (const StarBridge& b : s.bridges)
    bridges.push_back({{"anchor", b.anchor}, {"center_side", b.center_side}, {"edge", b.edge}});
  return nlohmann::json{{"center", s.center},     {"radius", s.radius},
                        {"r0", s.r0},             {"parts", s.parts},
                        {"bridges", bridges},     {"cone_radii", s.cone_radii},
                        {"cone_levels", s.cone_levels}};
}

inline nlohmann::json stretch_to_json(const StretchReport& r) {
  return nlohmann::json{{"instances", r.instances},
                        {"average", r.average},
                        {"max", r.max_stretch},
                        {"total", r.total},
                        {"tree_cost", r.tree_cost},
                        {"tree_length", r.tree_length}};
}

inline nlohmann::json cut_log_to_json(const CutLog& log) {
  nlohmann::json out = nlohmann::json::array();
  for (const CutRecord& c : log)
    out.push_back({{"kind", c.kind == CutRecord::Kind::ball ? "ball" : "cone"},
                   {"window_lo", c.window_lo},
                   {"window_hi", c.window_hi},
                   {"radius", c.radius},
                   {"boundary_cost", c.boundary_cost},
                   {"volume", c.volume},
                   {"volume_inside", c.volume_inside},
                   {"volume_at_start", c.volume_at_start},
                   {"inside_at_start", c.inside_at_start},
                   {"tau", c.tau},
                   {"scale", c.scale},
                   {"denominator", c.denominator},
                   {"edge_count", c.edge_count}});
  return out;
}

inline void write_stretch_csv(std::ostream& os, const WeightedMultigraph& g,
                              const SpanningTree& t, const StretchReport& r) {
  if (static_cast<int>(r.stretch.size()) != g.edge_count())
    throw std::invalid_argument("stretch report does not match graph");
  std::vector<double> td = tree_distances_for_edges(g, t);
  os << "edge_id,u,v,length,tree_dist,stretch\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    os << e << ',' << ed.u << ',' << ed.v << ',' << format_double(ed.length) << ','
       << format_double(td[static_cast<size_t>(e)]) << ','
       << format_double(r.stretch[static_cast<size_t>(e)]) << '\n';
  }
}

}  // namespace lst
