#pragma once

#include <cstddef>
#include <vector>

#include "mec/graph.hpp"

namespace mec {

/// Mixed graph with undirected edges and directed edges (tail -> head).
/// Each vertex pair carries at most one edge of either kind.
class ChainGraph {
 public:
  ChainGraph() = default;
  explicit ChainGraph(std::size_t vertex_count);
  static ChainGraph from_undirected(const UndirectedGraph& g);

  std::size_t vertex_count() const { return undirected_.size(); }
  std::size_t undirected_edge_count() const { return undirected_count_; }
  std::size_t directed_edge_count() const { return directed_count_; }

  void add_undirected(Vertex u, Vertex v);
  void add_directed(Vertex tail, Vertex head);
  /// Turns the undirected edge from-to into from -> to.
  void orient(Vertex from, Vertex to);

  bool has_undirected(Vertex u, Vertex v) const { return undirected_[u].contains(v); }
  bool has_directed(Vertex tail, Vertex head) const { return children_[tail].contains(head); }
  bool adjacent(Vertex u, Vertex v) const {
    return has_undirected(u, v) || has_directed(u, v) || has_directed(v, u);
  }

  const VertexSet& undirected_neighbors(Vertex v) const { return undirected_[v]; }
  const VertexSet& parents(Vertex v) const { return parents_[v]; }
  const VertexSet& children(Vertex v) const { return children_[v]; }

  UndirectedGraph undirected_part() const;
  UndirectedGraph skeleton() const;
  std::vector<Edge> undirected_edges() const;
  /// Edges as (tail, head), sorted.
  std::vector<Edge> directed_edges() const;

  friend bool operator==(const ChainGraph& a, const ChainGraph& b) {
    return a.undirected_ == b.undirected_ && a.children_ == b.children_;
  }

 private:
  void check_pair(Vertex u, Vertex v) const;

  std::vector<VertexSet> undirected_;
  std::vector<VertexSet> parents_;
  std::vector<VertexSet> children_;
  std::size_t undirected_count_ = 0;
  std::size_t directed_count_ = 0;
};

/// v-rooted essential graph plus its chain components.
struct RootedDecomposition {
  ChainGraph rooted_graph;
  std::vector<UndirectedGraph> components;
  // original labels of each component's vertices, parallel to `components`
  std::vector<std::vector<Vertex>> component_vertices;
};

/// Vertex sets of the undirected-skeleton components that carry at least one edge.
std::vector<std::vector<Vertex>> chain_component_vertices(const ChainGraph& cg);

std::vector<UndirectedGraph> chain_components(const ChainGraph& cg);

/// True iff cg has no partially directed cycle.
bool is_chain_graph(const ChainGraph& cg);

/// Directed part only; undirected edges are ignored.
bool is_acyclic(const ChainGraph& dg);

/// Unshielded colliders a -> b <- c. Requires a fully directed acyclic input.
std::size_t count_v_structures(const ChainGraph& dag);

/// Layered orientation sweep from root v (ChainCom). u must be a connected
/// chordal graph.
RootedDecomposition chain_com(const UndirectedGraph& u, Vertex v);

namespace detail {
// chain_com without the connected/chordal precondition checks
RootedDecomposition chain_com_unchecked(const UndirectedGraph& u, Vertex v);
}  // namespace detail

}  // namespace mec
