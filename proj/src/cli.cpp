#include "mec/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "mec/bench.hpp"
#include "mec/counting.hpp"
#include "mec/formula.hpp"
#include "mec/graph_file.hpp"
#include "mec/testkit.hpp"

namespace mec::cli {

namespace {

constexpr const char* kDirectedNote =
    "Directed edges ('u > v') only separate chain components; the input is not "
    "checked to be the essential graph of any equivalence class.";

// Rejects partially directed cycles and non-chordal chain components.
void require_essential_shape(const ChainGraph& g) {
  if (!is_chain_graph(g)) throw InvalidGraphError("input has a partially directed cycle");
  require_chordal_components(g);
}

UndirectedGraph require_undirected(const ChainGraph& g) {
  if (g.directed_edge_count() != 0) throw InvalidGraphError("expected an undirected graph, found directed edges");
  const UndirectedGraph u = g.undirected_part();
  if (!is_chordal(u)) throw InvalidGraphError("graph is not chordal");
  return u;
}

int cmd_size(const std::string& path, const std::string& engine, std::ostream& out, std::ostream& err) {
  const ChainGraph g = read_graph_file(path);
  require_essential_shape(g);
  if (engine == "formula") {
    out << size_formula_based(g) << '\n';
  } else if (engine == "benchmark") {
    out << size_benchmark(g) << '\n';
  } else {
    const BigCount f = size_formula_based(g);
    const BigCount b = size_benchmark(g);
    out << "formula: " << f << '\n' << "benchmark: " << b << '\n';
    if (f != b) {
      err << "engines disagree\n";
      return kDisagreement;
    }
  }
  return kOk;
}

int cmd_formula(const std::string& path, const std::optional<std::size_t>& at, std::ostream& out) {
  const UndirectedGraph u = require_undirected(read_graph_file(path));
  const CoreDecomposition core = core_decomposition(u);
  const SizePolynomial poly = size_f(core.core);
  out << "core: p=" << core.core.vertex_count() << " n=" << core.core.edge_count() << " m=" << core.dominating_count
      << '\n';
  out << format_polynomial(poly) << '\n';
  if (at) out << evaluate(poly, *at) << '\n';
  return kOk;
}

int cmd_core(const std::string& path, std::ostream& out) {
  const UndirectedGraph u = require_undirected(read_graph_file(path));
  const CoreDecomposition core = core_decomposition(u);
  out << "# dominating: m=" << core.dominating_count;
  for (Vertex v : core.dominating_vertices) out << ' ' << v;
  out << "\n# core vertices (input labels):";
  for (Vertex v : core.core_vertices) out << ' ' << v;
  out << '\n' << format_graph_file(core.core);
  return kOk;
}

std::string sample_header(std::size_t p, std::size_t n, std::uint64_t seed) {
  return "# random chordal p=" + std::to_string(p) + " n=" + std::to_string(n) + " seed=" + std::to_string(seed) + "\n";
}

int cmd_gen(std::size_t p, std::size_t n, std::uint64_t seed, std::size_t count, const std::string& out_dir,
            std::ostream& out) {
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t s = seed + i;
    const std::string text = sample_header(p, n, s) + format_graph_file(testkit::random_chordal(p, n, s));
    if (out_dir.empty()) {
      if (i) out << '\n';
      out << text;
      continue;
    }
    const auto file = std::filesystem::path(out_dir) / ("graph_" + std::to_string(i) + ".txt");
    std::ofstream f(file);
    if (!(f << text)) throw IoError("cannot write " + file.string());
    out << file.string() << '\n';
  }
  return kOk;
}

// Oracle product over chain components, when every component is small enough.
std::optional<BigCount> oracle_size(const ChainGraph& g) {
  BigCount product = 1;
  for (const UndirectedGraph& c : chain_components(g)) {
    if (c.vertex_count() > testkit::kOracleMaxVertices) return std::nullopt;
    product *= testkit::oracle_count(c);
  }
  return product;
}

bool check_one(const std::string& label, const ChainGraph& g, std::ostream& out) {
  require_essential_shape(g);
  const BigCount f = size_formula_based(g);
  const BigCount b = size_benchmark(g);
  const std::optional<BigCount> o = oracle_size(g);
  const bool ok = f == b && (!o || *o == f);
  out << label << ": oracle=" << (o ? o->get_str() : std::string("skipped")) << " formula=" << f
      << " benchmark=" << b << (ok ? " OK" : " MISMATCH") << '\n';
  return ok;
}

int cmd_check(const std::string& path, const std::vector<std::uint64_t>& random, std::ostream& out,
              std::ostream& err) {
  bool ok = true;
  if (!path.empty()) ok = check_one(path, read_graph_file(path), out);
  if (!random.empty()) {
    const std::size_t p = random[0], n = random[1];
    const std::uint64_t seed = random[2];
    for (std::uint64_t i = 0; i < random[3]; ++i) {
      const std::string label = "p=" + std::to_string(p) + " n=" + std::to_string(n) + " seed=" + std::to_string(seed + i);
      ok = check_one(label, ChainGraph::from_undirected(testkit::random_chordal(p, n, seed + i)), out) && ok;
    }
  }
  if (!ok) err << "disagreement found\n";
  return ok ? kOk : kDisagreement;
}

int cmd_bench(const BenchConfig& config, const std::string& out_path, std::ostream& out, std::ostream& err) {
  if (config.min_edges > config.max_edges || config.max_edges > config.vertices * (config.vertices - 1) / 2 ||
      config.min_edges + 1 < config.vertices)
    throw InputError("bench: edge range must lie within [p-1, p(p-1)/2]");
  std::ofstream file(out_path);
  if (!file) throw IoError("cannot write " + out_path);
  std::vector<BenchRow> rows = run_bench_samples(config);
  const bool agree = std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.engines_agree; });
  const std::vector<BenchRow> summary = summarize(rows);
  rows.insert(rows.end(), summary.begin(), summary.end());
  write_bench_csv(file, rows);
  if (!file) throw IoError("cannot write " + out_path);
  out << "wrote " << rows.size() << " rows to " << out_path << '\n';
  if (!agree) {
    err << "engines disagree on at least one sample\n";
    return kDisagreement;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact sizes of Markov equivalence classes from essential graphs."};
  app.footer(std::string("\nGraph files: '#' starts a comment, optional 'p <count>' header, 'u v' undirected and "
                         "'u > v' directed edge lines.\n") +
             kDirectedNote +
             "\nExit codes: 0 ok, 1 disagreement, 2 parse error, 3 invalid graph, 4 I/O error.");
  app.require_subcommand(1);

  std::string path;
  std::string engine = "formula";
  auto* size = app.add_subcommand("size", "Print the size of the class represented by a graph file");
  size->add_option("path", path, "graph file")->required();
  size->add_option("--engine", engine, "formula, benchmark or both")
      ->check(CLI::IsMember({"formula", "benchmark", "both"}));

  std::optional<std::size_t> at;
  auto* formula = app.add_subcommand("formula", "Print the size polynomial of an undirected chordal graph's core");
  formula->add_option("path", path, "graph file")->required();
  formula->add_option("--at", at, "also evaluate the polynomial at this m");

  auto* core = app.add_subcommand("core", "Print the dominating vertices and the core graph");
  core->add_option("path", path, "graph file")->required();

  std::size_t vertices = 0, edges = 0, count = 1;
  std::uint64_t seed = 1;
  std::string out_dir;
  auto* gen = app.add_subcommand("gen", "Generate random connected chordal graphs");
  gen->add_option("--vertices", vertices, "vertex count")->required();
  gen->add_option("--edges", edges, "edge count")->required();
  gen->add_option("--seed", seed, "seed of the first sample; sample i uses seed+i");
  gen->add_option("--count", count, "number of graphs");
  gen->add_option("--out-dir", out_dir, "write graph_<i>.txt files here instead of stdout");

  std::vector<std::uint64_t> random;
  auto* check = app.add_subcommand("check", "Compare oracle, formula and benchmark counts");
  check->add_option("path", path, "graph file");
  check->add_option("--random", random, "P N SEED COUNT")->expected(4);

  BenchConfig config;
  std::string csv;
  auto* bench = app.add_subcommand("bench", "Time both engines on random graphs and write a CSV");
  bench->add_option("--vertices", config.vertices, "vertex count")->required();
  bench->add_option("--min-edges", config.min_edges, "smallest edge count")->required();
  bench->add_option("--max-edges", config.max_edges, "largest edge count")->required();
  bench->add_option("--samples", config.samples, "samples per edge count")->required();
  bench->add_option("--seed", config.seed, "base seed; sample i uses seed+i");
  bench->add_option("--threads", config.threads, "worker threads");
  bench->add_option("--out", csv, "CSV output path")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (check->parsed() && path.empty() && random.empty())
      throw CLI::ValidationError("check", "give a graph file or --random P N SEED COUNT");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (size->parsed()) return cmd_size(path, engine, out, err);
    if (formula->parsed()) return cmd_formula(path, at, out);
    if (core->parsed()) return cmd_core(path, out);
    if (gen->parsed()) return cmd_gen(vertices, edges, seed, count, out_dir, out);
    if (check->parsed()) return cmd_check(path, random, out, err);
    if (bench->parsed()) return cmd_bench(config, csv, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidGraphError& e) {
    err << "invalid graph: " << e.what() << '\n';
    return kInvalidGraph;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kIoError;
  } catch (const InputError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kParseError;
  }
  return kOk;
}

}  // namespace mec::cli
