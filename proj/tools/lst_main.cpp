#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lst/lst.hpp"

namespace {

lst::WeightedMultigraph load_graph(const std::string& path) {
  if (path == "-") return lst::read_graph(std::cin);
  return lst::read_graph_file(path);
}

void write_text(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << content;
  if (!out) throw std::runtime_error("failed writing " + path);
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

int report_failures(const lst::CheckReport& rep, const char* what) {
  if (rep.ok) return 0;
  for (const std::string& f : rep.failures) std::cerr << what << ": " << f << '\n';
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"low-stretch spanning trees of weighted multigraphs"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "write a graph from a builtin family");
  std::string gen_type;
  int gen_n = 8, gen_rows = 4, gen_cols = 4, gen_extra = 0;
  double gen_len = 1.0, gen_maxlen = 1.0, gen_p = 0.1;
  std::uint64_t gen_seed = 1;
  std::string gen_out = "-";
  gen->add_option("--type", gen_type, "path|cycle|grid|torus|complete|random|gnp")
      ->required();
  gen->add_option("--n", gen_n, "vertex count (path, cycle, complete, random, gnp)");
  gen->add_option("--rows", gen_rows, "rows (grid, torus)");
  gen->add_option("--cols", gen_cols, "columns (grid, torus)");
  gen->add_option("--len", gen_len, "uniform edge length for structured families");
  gen->add_option("--extra", gen_extra, "extra random edges (random)");
  gen->add_option("--max-len", gen_maxlen, "log-uniform length ceiling (random, gnp)");
  gen->add_option("--p", gen_p, "edge probability (gnp)");
  gen->add_option("--seed", gen_seed, "random seed (random, gnp)");
  gen->add_option("-o,--out", gen_out, "output file, '-' for stdout");

  auto* tre = app.add_subcommand("tree", "build a low-stretch spanning tree");
  std::string tre_in, tre_builder = "weighted", tre_out, tre_log;
  int tre_root = 0, tre_windows = 0;
  tre->add_option("-i,--input", tre_in, "graph file, '-' for stdin")->required();
  tre->add_option("--algo", tre_builder, "unweighted|weighted|improved");
  tre->add_option("--root", tre_root, "root vertex");
  tre->add_option("--windows", tre_windows,
                  "cut windows per cone for the improved builder, 0 = auto");
  tre->add_option("-o,--out", tre_out, "tree json output");
  tre->add_option("--cut-log", tre_log, "cut record json output");

  auto* dec = app.add_subcommand("decompose", "split a graph into a ball plus cones");
  std::string dec_in, dec_out, dec_log;
  int dec_center = 0, dec_windows = 0;
  double dec_eps = 0.25;
  bool dec_rederive = false;
  dec->add_option("-i,--input", dec_in, "graph file, '-' for stdin")->required();
  dec->add_option("--center", dec_center, "center vertex");
  dec->add_option("--epsilon,--eps", dec_eps, "radius slack in (0, 1/2]");
  dec->add_option("--t,--windows", dec_windows, "staged cut windows per cone, 0 = single");
  dec->add_flag("--rederive", dec_rederive,
                "recompute shell distances after every removal and compare");
  dec->add_option("-o,--out", dec_out, "decomposition json output");
  dec->add_option("--cut-log", dec_log, "cut record json output");

  auto* str = app.add_subcommand("stretch", "measure a tree against its graph");
  std::string str_in, str_tree, str_csv;
  bool str_metric = false, str_strict = false;
  str->add_option("-i,--input", str_in, "graph file, '-' for stdin")->required();
  str->add_option("-t,--tree", str_tree, "tree json file")->required();
  str->add_flag("--metric", str_metric,
                "divide by true endpoint distances instead of edge lengths");
  str->add_option("--csv", str_csv, "per-edge csv output");
  str->add_flag("--strict", str_strict, "exit nonzero if the average exceeds its bound");

  auto* ben = app.add_subcommand("bench", "run the builtin instance suite");
  std::string ben_out = "-";
  bool ben_quick = false;
  std::uint64_t ben_seed = 90210;
  ben->add_option("-o,--out", ben_out, "csv output, '-' for stdout");
  ben->add_flag("--quick", ben_quick, "skip the larger instances");
  ben->add_option("--seed", ben_seed, "seed for the random instances");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      std::vector<std::string> comments;
      lst::WeightedMultigraph g = [&]() -> lst::WeightedMultigraph {
        if (gen_type == "path") {
          comments.push_back("generator: path n=" + std::to_string(gen_n) +
                             " len=" + lst::format_double(gen_len));
          return lst::path_graph(gen_n, gen_len);
        }
        if (gen_type == "cycle") {
          comments.push_back("generator: cycle n=" + std::to_string(gen_n) +
                             " len=" + lst::format_double(gen_len));
          return lst::cycle_graph(gen_n, gen_len);
        }
        if (gen_type == "grid") {
          comments.push_back("generator: grid rows=" + std::to_string(gen_rows) +
                             " cols=" + std::to_string(gen_cols) +
                             " len=" + lst::format_double(gen_len));
          return lst::grid_graph(gen_rows, gen_cols, gen_len);
        }
        if (gen_type == "torus") {
          comments.push_back("generator: torus rows=" + std::to_string(gen_rows) +
                             " cols=" + std::to_string(gen_cols) +
                             " len=" + lst::format_double(gen_len));
          return lst::torus_graph(gen_rows, gen_cols, gen_len);
        }
        if (gen_type == "complete") {
          comments.push_back("generator: complete n=" + std::to_string(gen_n) +
                             " len=" + lst::format_double(gen_len));
          return lst::complete_graph(gen_n, gen_len);
        }
        if (gen_type == "random") {
          comments.push_back("generator: random n=" + std::to_string(gen_n) +
                             " extra=" + std::to_string(gen_extra) +
                             " max-len=" + lst::format_double(gen_maxlen) +
                             " seed=" + std::to_string(gen_seed));
          comments.push_back(std::string("rng: ") + lst::Rng::mapping_id());
          lst::Rng rng(gen_seed);
          return lst::random_connected_multigraph(rng, gen_n, gen_extra, gen_maxlen);
        }
        if (gen_type == "gnp") {
          comments.push_back("generator: gnp n=" + std::to_string(gen_n) +
                             " p=" + lst::format_double(gen_p) +
                             " max-len=" + lst::format_double(gen_maxlen) +
                             " seed=" + std::to_string(gen_seed));
          comments.push_back(std::string("rng: ") + lst::Rng::mapping_id());
          lst::Rng rng(gen_seed);
          return lst::gnp_connected(rng, gen_n, gen_p, gen_maxlen);
        }
        throw std::runtime_error("unknown generator type '" + gen_type + "'");
      }();
      std::ostringstream ss;
      lst::write_graph(ss, g, comments);
      write_text(gen_out, ss.str());
      return 0;
    }

    if (tre->parsed()) {
      lst::WeightedMultigraph g = load_graph(tre_in);
      lst::BuildStats stats;
      lst::CutLog log;
      lst::BuildOptions opts;
      opts.stats = &stats;
      if (!tre_log.empty()) opts.decomp.log = &log;
      lst::SpanningTree t;
      if (tre_builder == "unweighted") {
        t = lst::unweighted_low_stretch_tree(g, tre_root, opts);
      } else if (tre_builder == "weighted") {
        t = lst::low_stretch_tree(g, tre_root, opts);
      } else if (tre_builder == "improved") {
        t = lst::imp_low_stretch_tree(g, tre_root, tre_windows, opts);
      } else {
        throw std::runtime_error("unknown builder '" + tre_builder + "'");
      }
      lst::CheckReport rep = lst::validate_tree(g, t);
      lst::StretchReport sr = lst::stretch_report(g, t);
      nlohmann::json summary{{"builder", tre_builder},
                             {"root", tre_root},
                             {"n", g.vertex_count()},
                             {"m", g.nonloop_edge_count()},
                             {"max_depth", stats.max_depth},
                             {"valid", rep.ok},
                             {"stretch", lst::stretch_to_json(sr)}};
      if (!tre_out.empty()) write_text(tre_out, lst::tree_to_json(t).dump(2) + "\n");
      if (!tre_log.empty()) write_text(tre_log, lst::cut_log_to_json(log).dump(2) + "\n");
      std::cout << summary.dump(2) << '\n';
      return report_failures(rep, "invalid tree");
    }

    if (dec->parsed()) {
      lst::WeightedMultigraph g = load_graph(dec_in);
      lst::CutLog log;
      lst::DecompOptions opts;
      opts.rederive_fields = dec_rederive;
      if (!dec_log.empty()) opts.log = &log;
      lst::StarDecomposition s =
          dec_windows >= 1
              ? lst::imp_star_decomp(g, dec_center, 1.0 / 3.0, dec_eps, dec_windows, 0, opts)
              : lst::star_decomp(g, dec_center, 1.0 / 3.0, dec_eps, opts);
      lst::CheckReport rep = lst::validate_star_decomposition(g, s, 1.0 / 3.0, dec_eps);
      nlohmann::json sizes = nlohmann::json::array();
      for (const auto& part : s.parts) sizes.push_back(part.size());
      nlohmann::json summary{{"center", s.center}, {"radius", s.radius},
                             {"r0", s.r0},         {"parts", s.parts.size()},
                             {"part_sizes", sizes}, {"valid", rep.ok}};
      if (!dec_out.empty()) write_text(dec_out, lst::star_to_json(s).dump(2) + "\n");
      if (!dec_log.empty()) write_text(dec_log, lst::cut_log_to_json(log).dump(2) + "\n");
      std::cout << summary.dump(2) << '\n';
      return report_failures(rep, "invalid decomposition");
    }

    if (str->parsed()) {
      lst::WeightedMultigraph g = load_graph(str_in);
      lst::SpanningTree t = lst::tree_from_json(g, load_json(str_tree));
      lst::CheckReport rep = lst::validate_tree(g, t);
      if (!rep.ok) return report_failures(rep, "invalid tree");
      std::vector<double> denom;
      const std::vector<double>* dp = nullptr;
      if (str_metric) {
        denom = lst::metric_edge_distances(g);
        dp = &denom;
      }
      lst::StretchReport sr = lst::stretch_report(g, t, dp);
      if (!str_csv.empty()) {
        std::ostringstream ss;
        lst::write_stretch_csv(ss, g, t, sr);
        write_text(str_csv, ss.str());
      }
      double bound = lst::average_stretch_bound(g.vertex_count(), g.nonloop_edge_count());
      bool within = sr.average <= bound * (1.0 + 1e-9);
      nlohmann::json summary = lst::stretch_to_json(sr);
      summary["metric_denominators"] = str_metric;
      summary["bound"] = bound;
      summary["within_bound"] = within;
      std::cout << summary.dump(2) << '\n';
      return (str_strict && !within) ? 1 : 0;
    }

    if (ben->parsed()) {
      lst::BenchOptions opts;
      opts.quick = ben_quick;
      opts.seed = ben_seed;
      std::vector<lst::BenchRecord> recs = lst::run_benchmark_suite(opts);
      std::ostringstream ss;
      lst::write_bench_csv(ss, recs);
      write_text(ben_out, ss.str());
      if (!lst::all_within_bounds(recs)) {
        std::cerr << "bound check failed\n";
        return 1;
      }
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return 2;
  }
  return 0;
}
