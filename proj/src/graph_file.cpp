#include "mec/graph_file.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace mec {

namespace {

// Whitespace tokens before any '#'.
std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line.substr(0, line.find('#')));
  for (std::string t; in >> t;) tokens.push_back(t);
  return tokens;
}

std::size_t parse_index(const std::string& token, std::size_t line) {
  std::size_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ParseError(line, "expected a nonnegative integer, got '" + token + "'");
  return value;
}

struct PendingEdge {
  Vertex u;
  Vertex v;
  bool directed;
  std::size_t line;
};

}  // namespace

ChainGraph parse_graph_file(std::istream& in) {
  std::optional<std::size_t> header;
  std::vector<PendingEdge> edges;
  std::size_t line_no = 0;
  std::size_t max_label = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    const std::vector<std::string> tokens = split(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "p") {
      if (tokens.size() != 2) throw ParseError(line_no, "header must be 'p <vertex_count>'");
      if (header) throw ParseError(line_no, "duplicate header");
      if (!edges.empty()) throw ParseError(line_no, "header must precede edge lines");
      header = parse_index(tokens[1], line_no);
      continue;
    }
    PendingEdge e{};
    e.line = line_no;
    if (tokens.size() == 2) {
      e.directed = false;
    } else if (tokens.size() == 3 && tokens[1] == ">") {
      e.directed = true;
    } else {
      throw ParseError(line_no, "expected 'u v' or 'u > v'");
    }
    e.u = parse_index(tokens.front(), line_no);
    e.v = parse_index(tokens.back(), line_no);
    if (e.u == e.v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(e.u));
    max_label = std::max({max_label, e.u, e.v});
    edges.push_back(e);
  }

  const std::size_t p = header ? *header : (edges.empty() ? 0 : max_label + 1);
  ChainGraph g(p);
  for (const PendingEdge& e : edges) {
    if (e.u >= p || e.v >= p)
      throw ParseError(e.line, "vertex " + std::to_string(std::max(e.u, e.v)) + " out of range for p=" +
                                   std::to_string(p));
    if (g.adjacent(e.u, e.v))
      throw ParseError(e.line, "duplicate edge between " + std::to_string(e.u) + " and " + std::to_string(e.v));
    if (e.directed)
      g.add_directed(e.u, e.v);
    else
      g.add_undirected(e.u, e.v);
  }
  return g;
}

ChainGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph_file(in);
}

ChainGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return parse_graph_file(in);
}

std::string format_graph_file(const ChainGraph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << '\n';
  for (const Edge& e : g.undirected_edges()) out << e.u << ' ' << e.v << '\n';
  for (const Edge& e : g.directed_edges()) out << e.u << " > " << e.v << '\n';
  return out.str();
}

std::string format_graph_file(const UndirectedGraph& g) { return format_graph_file(ChainGraph::from_undirected(g)); }

}  // namespace mec
