#include "mec/chain_graph.hpp"

#include <string>

#include "mec/errors.hpp"

namespace mec {

ChainGraph::ChainGraph(std::size_t vertex_count)
    : undirected_(vertex_count, VertexSet(vertex_count)),
      parents_(vertex_count, VertexSet(vertex_count)),
      children_(vertex_count, VertexSet(vertex_count)) {}

ChainGraph ChainGraph::from_undirected(const UndirectedGraph& g) {
  ChainGraph cg(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) cg.undirected_[v] = g.neighbors(v);
  cg.undirected_count_ = g.edge_count();
  return cg;
}

void ChainGraph::check_pair(Vertex u, Vertex v) const {
  if (u >= vertex_count() || v >= vertex_count())
    throw InputError("vertex out of range for p=" + std::to_string(vertex_count()));
  if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
  if (adjacent(u, v))
    throw InputError("duplicate edge between " + std::to_string(u) + " and " + std::to_string(v));
}

void ChainGraph::add_undirected(Vertex u, Vertex v) {
  check_pair(u, v);
  undirected_[u].insert(v);
  undirected_[v].insert(u);
  ++undirected_count_;
}

void ChainGraph::add_directed(Vertex tail, Vertex head) {
  check_pair(tail, head);
  children_[tail].insert(head);
  parents_[head].insert(tail);
  ++directed_count_;
}

void ChainGraph::orient(Vertex from, Vertex to) {
  if (from >= vertex_count() || to >= vertex_count() || !has_undirected(from, to))
    throw InputError("orient: no undirected edge " + std::to_string(from) + "-" + std::to_string(to));
  undirected_[from].erase(to);
  undirected_[to].erase(from);
  --undirected_count_;
  children_[from].insert(to);
  parents_[to].insert(from);
  ++directed_count_;
}

UndirectedGraph ChainGraph::undirected_part() const {
  UndirectedGraph g(vertex_count());
  for (const Edge& e : undirected_edges()) g.add_edge(e.u, e.v);
  return g;
}

UndirectedGraph ChainGraph::skeleton() const {
  UndirectedGraph g = undirected_part();
  for (const Edge& e : directed_edges()) g.add_edge(e.u, e.v);
  return g;
}

std::vector<Edge> ChainGraph::undirected_edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v = undirected_[u].next(u + 1); v != VertexSet::npos; v = undirected_[u].next(v + 1))
      out.push_back({u, v});
  return out;
}

std::vector<Edge> ChainGraph::directed_edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : children_[u]) out.push_back({u, v});
  return out;
}

std::vector<std::vector<Vertex>> chain_component_vertices(const ChainGraph& cg) {
  std::vector<std::vector<Vertex>> out;
  for (auto& comp : connected_components(cg.undirected_part()))
    if (comp.size() > 1) out.push_back(std::move(comp));
  return out;
}

std::vector<UndirectedGraph> chain_components(const ChainGraph& cg) {
  const UndirectedGraph und = cg.undirected_part();
  std::vector<UndirectedGraph> out;
  for (const auto& comp : chain_component_vertices(cg))
    out.push_back(induced_subgraph(und, std::span<const Vertex>(comp)).graph);
  return out;
}

namespace {

// Kahn's algorithm over an explicit successor list.
bool acyclic(const std::vector<VertexSet>& succ) {
  const std::size_t p = succ.size();
  std::vector<std::size_t> indegree(p, 0);
  for (const VertexSet& s : succ)
    for (Vertex v : s) ++indegree[v];
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < p; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    ++seen;
    for (Vertex w : succ[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  return seen == p;
}

}  // namespace

bool is_acyclic(const ChainGraph& dg) {
  std::vector<VertexSet> succ;
  succ.reserve(dg.vertex_count());
  for (Vertex v = 0; v < dg.vertex_count(); ++v) succ.push_back(dg.children(v));
  return acyclic(succ);
}

bool is_chain_graph(const ChainGraph& cg) {
  // Partially directed cycles exist iff a directed edge stays inside one
  // undirected component, or the component quotient graph has a cycle.
  const auto comps = connected_components(cg.undirected_part());
  std::vector<std::size_t> comp_of(cg.vertex_count());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (Vertex v : comps[c]) comp_of[v] = c;
  std::vector<VertexSet> succ(comps.size(), VertexSet(comps.size()));
  for (const Edge& e : cg.directed_edges()) {
    if (comp_of[e.u] == comp_of[e.v]) return false;
    succ[comp_of[e.u]].insert(comp_of[e.v]);
  }
  return acyclic(succ);
}

std::size_t count_v_structures(const ChainGraph& dag) {
  if (dag.undirected_edge_count() != 0) throw InputError("count_v_structures: graph has undirected edges");
  if (!is_acyclic(dag)) throw InputError("count_v_structures: graph has a directed cycle");
  std::size_t count = 0;
  for (Vertex b = 0; b < dag.vertex_count(); ++b) {
    const VertexSet& pa = dag.parents(b);
    for (Vertex a : pa)
      for (Vertex c = pa.next(a + 1); c != VertexSet::npos; c = pa.next(c + 1))
        if (!dag.adjacent(a, c)) ++count;
  }
  return count;
}

RootedDecomposition chain_com(const UndirectedGraph& u, Vertex v) {
  if (v >= u.vertex_count())
    throw InputError("chain_com: root " + std::to_string(v) + " out of range");
  if (!is_connected(u)) throw InvalidGraphError("chain_com: graph is not connected");
  if (!is_chordal(u)) throw InvalidGraphError("chain_com: graph is not chordal");
  return detail::chain_com_unchecked(u, v);
}

namespace detail {

RootedDecomposition chain_com_unchecked(const UndirectedGraph& u, Vertex v) {
  const std::size_t p = u.vertex_count();
  RootedDecomposition out;
  ChainGraph& g = out.rooted_graph;
  g = ChainGraph::from_undirected(u);

  VertexSet frontier(p);
  frontier.insert(v);
  VertexSet remaining = u.all_vertices();
  remaining.erase(v);

  while (!remaining.empty()) {
    VertexSet layer(p);
    for (Vertex a : frontier) layer |= u.neighbors(a);
    layer &= remaining;
    if (layer.empty()) throw InvalidGraphError("chain_com: graph is not connected");

    for (Vertex a : frontier)
      for (Vertex t : u.neighbors(a) & layer) g.orient(a, t);

    // x -> y - z with x, z nonadjacent forces y -> z; sweep until stable.
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex y : layer) {
        const VertexSet candidates = g.undirected_neighbors(y) & layer;
        for (Vertex z = candidates.next(y + 1); z != VertexSet::npos; z = candidates.next(z + 1)) {
          if (!g.has_undirected(y, z)) continue;
          if (!g.parents(y).is_subset_of(u.neighbors(z))) {
            g.orient(y, z);
            changed = true;
          } else if (!g.parents(z).is_subset_of(u.neighbors(y))) {
            g.orient(z, y);
            changed = true;
          }
        }
      }
    }

    InducedSubgraph residual = induced_subgraph(g.undirected_part(), layer);
    for (const auto& comp : connected_components(residual.graph)) {
      if (comp.size() < 2) continue;
      std::vector<Vertex> labels;
      labels.reserve(comp.size());
      for (Vertex c : comp) labels.push_back(residual.vertices[c]);
      out.components.push_back(induced_subgraph(residual.graph, std::span<const Vertex>(comp)).graph);
      out.component_vertices.push_back(std::move(labels));
    }

    frontier = layer;
    remaining -= layer;
  }
  return out;
}

}  // namespace detail

}  // namespace mec
