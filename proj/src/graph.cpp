#include "mec/graph.hpp"

#include <algorithm>
#include <cstring>

#include "mec/errors.hpp"

namespace mec {

UndirectedGraph::UndirectedGraph(std::size_t vertex_count)
    : adjacency_(vertex_count, VertexSet(vertex_count)) {}

UndirectedGraph::UndirectedGraph(std::size_t vertex_count, std::span<const Edge> edges)
    : UndirectedGraph(vertex_count) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

UndirectedGraph UndirectedGraph::complete(std::size_t vertex_count) {
  UndirectedGraph g(vertex_count);
  for (Vertex v = 0; v < vertex_count; ++v) {
    g.adjacency_[v] = VertexSet::full(vertex_count);
    g.adjacency_[v].erase(v);
  }
  g.edge_count_ = vertex_count * (vertex_count ? vertex_count - 1 : 0) / 2;
  return g;
}

void UndirectedGraph::check_vertex(Vertex v) const {
  if (v >= vertex_count())
    throw InputError("vertex " + std::to_string(v) + " out of range for p=" + std::to_string(vertex_count()));
}

void UndirectedGraph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
  if (adjacent(u, v)) throw InputError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
  ++edge_count_;
}

void UndirectedGraph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (!adjacent(u, v)) throw InputError("no edge " + std::to_string(u) + "-" + std::to_string(v));
  adjacency_[u].erase(v);
  adjacency_[v].erase(u);
  --edge_count_;
}

std::vector<Edge> UndirectedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v = adjacency_[u].next(u + 1); v != VertexSet::npos; v = adjacency_[u].next(v + 1))
      out.push_back({u, v});
  return out;
}

const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::null: return "null";
    case GraphClass::tree: return "tree";
    case GraphClass::tree_plus: return "tree-plus";
    case GraphClass::isolated_edges: return "isolated-edges";
    case GraphClass::general: return "general";
  }
  return "?";
}

std::vector<Vertex> mcs_order(const UndirectedGraph& g) {
  const std::size_t p = g.vertex_count();
  std::vector<std::size_t> weight(p, 0);
  std::vector<bool> numbered(p, false);
  std::vector<Vertex> order;
  order.reserve(p);
  for (std::size_t step = 0; step < p; ++step) {
    Vertex best = VertexSet::npos;
    for (Vertex v = 0; v < p; ++v)
      if (!numbered[v] && (best == VertexSet::npos || weight[v] > weight[best])) best = v;
    numbered[best] = true;
    order.push_back(best);
    for (Vertex w : g.neighbors(best))
      if (!numbered[w]) ++weight[w];
  }
  return order;
}

bool is_chordal(const UndirectedGraph& g) {
  const std::size_t p = g.vertex_count();
  const std::vector<Vertex> order = mcs_order(g);
  VertexSet visited(p);
  for (Vertex v : order) {
    // Neighbors visited earlier must form a clique; it is enough to check
    // that they all hang off the latest-visited one.
    const VertexSet earlier = g.neighbors(v) & visited;
    if (!earlier.empty()) {
      Vertex latest = VertexSet::npos;
      for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (earlier.contains(*it)) {
          latest = *it;
          break;
        }
      VertexSet rest = earlier;
      rest.erase(latest);
      if (!rest.is_subset_of(g.neighbors(latest))) return false;
    }
    visited.insert(v);
  }
  return true;
}

std::vector<std::vector<Vertex>> connected_components(const UndirectedGraph& g) {
  const std::size_t p = g.vertex_count();
  std::vector<std::vector<Vertex>> out;
  VertexSet unseen = g.all_vertices();
  while (!unseen.empty()) {
    VertexSet comp(p);
    VertexSet frontier(p);
    frontier.insert(unseen.first());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet next(p);
      for (Vertex v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
    }
    unseen -= comp;
    out.push_back(comp.to_vector());
  }
  return out;
}

bool is_connected(const UndirectedGraph& g) { return connected_components(g).size() <= 1; }

VertexSet dominating_vertices(const UndirectedGraph& g) {
  VertexSet out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) + 1 == g.vertex_count()) out.insert(v);
  return out;
}

VertexSet isolated_vertices(const UndirectedGraph& g) {
  VertexSet out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.neighbors(v).empty()) out.insert(v);
  return out;
}

CoreDecomposition core_decomposition(const UndirectedGraph& g) {
  // Removing a dominating vertex never creates a new one, so one pass is enough.
  const VertexSet dominating = dominating_vertices(g);
  InducedSubgraph rest = induced_subgraph(g, g.all_vertices() - dominating);
  CoreDecomposition out;
  out.core = std::move(rest.graph);
  out.core_vertices = std::move(rest.vertices);
  out.dominating_vertices = dominating.to_vector();
  out.dominating_count = out.dominating_vertices.size();
  return out;
}

UndirectedGraph complement(const UndirectedGraph& g) {
  const std::size_t p = g.vertex_count();
  UndirectedGraph out(p);
  for (Vertex u = 0; u < p; ++u)
    for (Vertex v = u + 1; v < p; ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

CoreValidation validate_core_graph(const UndirectedGraph& g) {
  CoreValidation r;
  r.chordal = is_chordal(g);
  r.no_dominating_vertex = dominating_vertices(g).empty();
  const UndirectedGraph c = complement(g);
  r.complement_connected = is_connected(c);
  r.complement_edges_linked = true;
  const std::vector<Edge> ce = c.edges();
  for (std::size_t i = 0; i < ce.size() && r.complement_edges_linked; ++i)
    for (std::size_t j = i + 1; j < ce.size(); ++j) {
      const Edge a = ce[i];
      const Edge b = ce[j];
      const bool share = a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
      const bool joined = c.adjacent(a.u, b.u) || c.adjacent(a.u, b.v) || c.adjacent(a.v, b.u) ||
                          c.adjacent(a.v, b.v);
      if (!share && !joined) {
        r.complement_edges_linked = false;
        break;
      }
    }
  return r;
}

InducedSubgraph induced_subgraph(const UndirectedGraph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.vertices = s.to_vector();
  const std::size_t q = out.vertices.size();
  out.graph = UndirectedGraph(q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j)
      if (g.adjacent(out.vertices[i], out.vertices[j])) out.graph.add_edge(i, j);
  return out;
}

InducedSubgraph induced_subgraph(const UndirectedGraph& g, std::span<const Vertex> s) {
  VertexSet set(g.vertex_count());
  for (Vertex v : s) {
    if (v >= g.vertex_count())
      throw InputError("induced_subgraph: vertex " + std::to_string(v) + " not in graph");
    set.insert(v);
  }
  return induced_subgraph(g, set);
}

UndirectedGraph add_dominating_vertices(const UndirectedGraph& g, std::size_t m) {
  const std::size_t p = g.vertex_count();
  UndirectedGraph out(p + m);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (Vertex d = p; d < p + m; ++d)
    for (Vertex v = 0; v < d; ++v) out.add_edge(v, d);
  return out;
}

GraphClass classify(const UndirectedGraph& g) {
  const std::size_t p = g.vertex_count();
  const std::size_t n = g.edge_count();
  if (p == 0) return GraphClass::null;
  const bool connected = is_connected(g);
  if (connected && n + 1 == p) return GraphClass::tree;
  if (connected && n == p && is_chordal(g)) return GraphClass::tree_plus;
  if (p % 2 == 0) {
    bool matching = true;
    for (Vertex v = 0; v < p && matching; ++v) matching = g.degree(v) == 1;
    if (matching) return GraphClass::isolated_edges;
  }
  return GraphClass::general;
}

std::string canonical_key(const UndirectedGraph& g) {
  const std::uint64_t p = g.vertex_count();
  std::string key(sizeof p, '\0');
  std::memcpy(key.data(), &p, sizeof p);
  for (Vertex v = 0; v < p; ++v) {
    const VertexSet& row = g.neighbors(v);
    key.append(reinterpret_cast<const char*>(row.words()), row.word_count() * sizeof(std::uint64_t));
  }
  return key;
}

}  // namespace mec
