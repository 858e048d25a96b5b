#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mec/vertex_set.hpp"

namespace mec {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple labeled undirected graph over vertices 0..p-1, stored as one
/// adjacency bitset per vertex.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::size_t vertex_count);
  /// Throws InputError on self-loops, duplicates or out-of-range labels.
  UndirectedGraph(std::size_t vertex_count, std::span<const Edge> edges);

  static UndirectedGraph complete(std::size_t vertex_count);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].contains(v); }
  const VertexSet& neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].count(); }

  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
  VertexSet empty_set() const { return VertexSet(vertex_count()); }

  /// Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Induced subgraph relabeled compactly; vertices[i] is the original label of
/// new vertex i, in increasing order.
struct InducedSubgraph {
  UndirectedGraph graph;
  std::vector<Vertex> vertices;
};

struct CoreDecomposition {
  UndirectedGraph core;
  std::size_t dominating_count = 0;
  std::vector<Vertex> dominating_vertices;
  // core vertex i was vertex core_vertices[i] of the input
  std::vector<Vertex> core_vertices;
};

struct CoreValidation {
  bool chordal = false;
  bool no_dominating_vertex = false;
  bool complement_connected = false;
  bool complement_edges_linked = false;

  bool all() const { return chordal && no_dominating_vertex && complement_connected && complement_edges_linked; }
};

enum class GraphClass { null, tree, tree_plus, isolated_edges, general };

const char* to_string(GraphClass c);

/// Maximum-cardinality search visit order (first visited first).
std::vector<Vertex> mcs_order(const UndirectedGraph& g);

/// Chordality via MCS: the reversed visit order is a perfect elimination
/// ordering iff g is chordal.
bool is_chordal(const UndirectedGraph& g);

/// Components as sorted vertex lists, ordered by their smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const UndirectedGraph& g);

/// The null graph counts as connected.
bool is_connected(const UndirectedGraph& g);

VertexSet dominating_vertices(const UndirectedGraph& g);
VertexSet isolated_vertices(const UndirectedGraph& g);

CoreDecomposition core_decomposition(const UndirectedGraph& g);

UndirectedGraph complement(const UndirectedGraph& g);

CoreValidation validate_core_graph(const UndirectedGraph& g);

InducedSubgraph induced_subgraph(const UndirectedGraph& g, std::span<const Vertex> s);
InducedSubgraph induced_subgraph(const UndirectedGraph& g, const VertexSet& s);

/// K^{m+}: g plus m new vertices (labels p..p+m-1) adjacent to everything.
UndirectedGraph add_dominating_vertices(const UndirectedGraph& g, std::size_t m);

GraphClass classify(const UndirectedGraph& g);

/// Labeled (not isomorphism-invariant) byte encoding of (p, edge set).
std::string canonical_key(const UndirectedGraph& g);

}  // namespace mec
