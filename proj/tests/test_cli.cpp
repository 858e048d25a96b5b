#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "mec/cli.hpp"
#include "mec/graph_file.hpp"
#include "test_support.hpp"

using namespace mec;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("mecsize_test_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const fs::path file = path_ / name;
    std::ofstream(file) << text;
    return file.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("graph file parsing") {
  const ChainGraph g = parse_graph_text("# header\np 4\n0 1\n1 > 2\n  # indented comment\n\n2 3\n");
  CHECK(g.vertex_count() == 4);
  CHECK(g.undirected_edges() == std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK(g.directed_edges() == std::vector<Edge>{{1, 2}});
  CHECK(parse_graph_text("0 3\n").vertex_count() == 4);
  CHECK(parse_graph_text("").vertex_count() == 0);
  CHECK(parse_graph_text("p 3\n").vertex_count() == 3);
  const ChainGraph trailing = parse_graph_text("p 6   # six\n0 1 # edge\n2 > 3#arc\n");
  CHECK(trailing.vertex_count() == 6);
  CHECK(trailing.undirected_edges() == std::vector<Edge>{{0, 1}});
  CHECK(trailing.directed_edges() == std::vector<Edge>{{2, 3}});
}

TEST_CASE("graph file errors carry line numbers") {
  const auto line_of = [](const std::string& text) {
    try {
      parse_graph_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(line_of("p 3\n0 1\n1 1\n") == 3);
  CHECK(line_of("p 3\n0 5\n") == 2);
  CHECK(line_of("0 1\n1 > 0\n") == 2);
  CHECK(line_of("0 1\np 3\n") == 2);
  CHECK(line_of("p 3\np 3\n") == 2);
  CHECK(line_of("0 x\n") == 1);
  CHECK(line_of("0 1 2\n") == 1);
  CHECK(line_of("p -1\n") == 1);
}

TEST_CASE("graph file round trip") {
  ChainGraph g(5);
  g.add_undirected(3, 1);
  g.add_directed(4, 0);
  g.add_undirected(0, 2);
  CHECK(format_graph_file(g) == "p 5\n0 2\n1 3\n4 > 0\n");
  CHECK(parse_graph_text(format_graph_file(g)) == g);
}

TEST_CASE("size command") {
  TempDir dir;
  CHECK(run({"size", dir.write("k5", format_graph_file(UndirectedGraph::complete(5)))}).out == "120\n");
  const std::string path3 = dir.write("p3", "0 1\n1 2\n");
  CHECK(run({"size", path3}).out == "3\n");
  CHECK(run({"size", path3, "--engine", "benchmark"}).out == "3\n");
  const Result both = run({"size", path3, "--engine", "both"});
  CHECK(both.code == cli::kOk);
  CHECK(both.out == "formula: 3\nbenchmark: 3\n");
  const Result cyc = run({"size", dir.write("c4", "p 5\n4 > 0\n0 1\n1 2\n2 3\n3 0\n")});
  CHECK(cyc.code == cli::kInvalidGraph);
  CHECK(cyc.err.find("{0 1 2 3}") != std::string::npos);
  const Result loop = run({"size", dir.write("pdc", "0 > 1\n1 2\n2 > 0\n")});
  CHECK(loop.code == cli::kInvalidGraph);
  const Result parse = run({"size", dir.write("bad", "p 3\n0 1\n1 1\n")});
  CHECK(parse.code == cli::kParseError);
  CHECK(parse.err.find("line 3") != std::string::npos);
  CHECK(run({"size", dir.file("missing")}).code == cli::kIoError);
  CHECK(run({"size", path3, "--engine", "guess"}).code == cli::kParseError);
  CHECK(run({}).code == cli::kParseError);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("formula command") {
  TempDir dir;
  CHECK(lines(run({"formula", dir.write("i2", "p 2\n")}).out) ==
        std::vector<std::string>{"core: p=2 n=0 m=0", "(2*m + 1) * m!"});
  CHECK(lines(run({"formula", dir.write("p3", "0 1\n1 2\n"), "--at", "1"}).out) ==
        std::vector<std::string>{"core: p=2 n=0 m=1", "(2*m + 1) * m!", "3"});
  CHECK(lines(run({"formula", dir.write("k4", format_graph_file(UndirectedGraph::complete(4))), "--at", "4"}).out) ==
        std::vector<std::string>{"core: p=0 n=0 m=4", "(1) * m!", "24"});
  CHECK(run({"formula", dir.write("d", "0 > 1\n")}).code == cli::kInvalidGraph);
}

TEST_CASE("core command") {
  TempDir dir;
  const Result r = run({"core", dir.write("p3", "0 1\n1 2\n")});
  CHECK(r.code == cli::kOk);
  CHECK(parse_graph_text(r.out) == ChainGraph(2));
  CHECK(r.out.find("m=1 1") != std::string::npos);
}

TEST_CASE("gen output re-parses to the generated graph") {
  const Result one = run({"gen", "--vertices", "9", "--edges", "14", "--seed", "5"});
  REQUIRE(one.code == cli::kOk);
  CHECK(parse_graph_text(one.out) == ChainGraph::from_undirected(testkit::random_chordal(9, 14, 5)));
  TempDir dir;
  const Result many = run({"gen", "--vertices", "7", "--edges", "10", "--seed", "3", "--count", "3", "--out-dir",
                           dir.file("")});
  REQUIRE(many.code == cli::kOk);
  const auto files = lines(many.out);
  REQUIRE(files.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(read_graph_file(files[i]) == ChainGraph::from_undirected(testkit::random_chordal(7, 10, 3 + i)));
  CHECK(run({"gen", "--vertices", "4", "--edges", "9"}).code == cli::kParseError);
}

TEST_CASE("check command") {
  TempDir dir;
  const Result file = run({"check", dir.write("p3", "0 1\n1 2\n")});
  CHECK(file.code == cli::kOk);
  CHECK(file.out.find("oracle=3 formula=3 benchmark=3 OK") != std::string::npos);
  const Result random = run({"check", "--random", "7", "12", "1", "5"});
  CHECK(random.code == cli::kOk);
  CHECK(lines(random.out).size() == 5);
  const Result big = run({"check", "--random", "12", "30", "1", "1"});
  CHECK(big.out.find("oracle=skipped") != std::string::npos);
  CHECK(run({"check"}).code == cli::kParseError);
}

TEST_CASE("bench command") {
  TempDir dir;
  const std::string csv = dir.file("bench.csv");
  const Result r = run({"bench", "--vertices", "8", "--min-edges", "10", "--max-edges", "12", "--samples", "2",
                        "--seed", "4", "--out", csv});
  REQUIRE(r.code == cli::kOk);
  std::ifstream in(csv);
  std::stringstream text;
  text << in.rdbuf();
  const auto rows = lines(text.str());
  REQUIRE(rows.size() == 1 + 3 * 2 + 3 * 4);
  CHECK(rows[0] == "p,n,sample_index,seed,size,t_benchmark_ns,t_formula_ns");
  CHECK(rows[1].rfind("8,10,0,4,", 0) == 0);
  CHECK(rows[2].rfind("8,10,1,5,", 0) == 0);
  CHECK(rows.back().find(",-1,") != std::string::npos);
  CHECK(run({"bench", "--vertices", "8", "--min-edges", "3", "--max-edges", "12", "--samples", "1", "--out", csv})
            .code == cli::kParseError);
  CHECK(run({"bench", "--vertices", "8", "--min-edges", "10", "--max-edges", "10", "--samples", "1", "--out",
             dir.file("no/such/dir.csv")})
            .code == cli::kIoError);
}
