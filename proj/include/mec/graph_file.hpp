#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "mec/chain_graph.hpp"
#include "mec/errors.hpp"

namespace mec {

// Text format, one item per line:
//   # comment
//   p <vertex_count>      optional; must precede all edge lines
//   u v                   undirected edge
//   u > v                 directed edge u -> v
// Without a header the vertex count is one more than the largest label used.

class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ChainGraph parse_graph_file(std::istream& in);
ChainGraph parse_graph_text(const std::string& text);
ChainGraph read_graph_file(const std::string& path);

/// Header line, then undirected edges, then directed edges, each sorted.
std::string format_graph_file(const ChainGraph& g);
std::string format_graph_file(const UndirectedGraph& g);

}  // namespace mec
