#include "mec/testkit.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "mec/errors.hpp"

namespace mec::testkit {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("Rng::below: empty range");
  // rejection on the top of the range keeps the draw unbiased
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

BigCount oracle_count(const UndirectedGraph& u) {
  const std::size_t p = u.vertex_count();
  if (p > kOracleMaxVertices)
    throw InputError("oracle_count: p=" + std::to_string(p) + " exceeds the oracle limit of " +
                     std::to_string(kOracleMaxVertices));
  if (!is_connected(u)) throw InvalidGraphError("oracle_count: graph is not connected");
  if (!is_chordal(u)) throw InvalidGraphError("oracle_count: graph is not chordal");

  const std::vector<Edge> edges = u.edges();
  std::vector<std::uint32_t> adjacency(p, 0);
  for (const Edge& e : edges) {
    adjacency[e.u] |= 1u << e.v;
    adjacency[e.v] |= 1u << e.u;
  }

  // Bit i set iff edge i points from its smaller to its larger endpoint.
  std::unordered_set<std::uint64_t> orientations;
  std::vector<Vertex> order(p);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::vector<std::size_t> position(p);
  do {
    for (std::size_t i = 0; i < p; ++i) position[order[i]] = i;
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (position[edges[i].u] < position[edges[i].v]) code |= std::uint64_t{1} << i;
    orientations.insert(code);
  } while (std::next_permutation(order.begin(), order.end()));

  std::size_t count = 0;
  std::vector<std::uint32_t> parents(p);
  for (std::uint64_t code : orientations) {
    std::fill(parents.begin(), parents.end(), 0u);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const bool forward = (code >> i) & 1u;
      const Vertex tail = forward ? edges[i].u : edges[i].v;
      const Vertex head = forward ? edges[i].v : edges[i].u;
      parents[head] |= 1u << tail;
    }
    bool collider = false;
    for (Vertex b = 0; b < p && !collider; ++b)
      for (Vertex a = 0; a < p && !collider; ++a)
        if ((parents[b] >> a) & 1u)
          // another parent of b not adjacent to a
          collider = (parents[b] & ~adjacency[a] & ~(1u << a)) != 0;
    if (!collider) ++count;
  }
  return BigCount(static_cast<unsigned long>(count));
}

BigCount oracle_extension_count(const UndirectedGraph& k, std::size_t m) {
  if (k.vertex_count() + m > kOracleMaxVertices)
    throw InputError("oracle_extension_count: p+m exceeds the oracle limit");
  if (!is_chordal(k)) throw InvalidGraphError("oracle_extension_count: graph is not chordal");
  const UndirectedGraph extended = add_dominating_vertices(k, m);
  BigCount product = 1;
  for (const auto& comp : connected_components(extended))
    product *= oracle_count(induced_subgraph(extended, std::span<const Vertex>(comp)).graph);
  return product;
}

UndirectedGraph random_chordal(std::size_t p, std::size_t n, std::uint64_t seed) {
  if (p < 1 || n + 1 < p || n > p * (p - 1) / 2)
    throw InputError("random_chordal: no connected graph with p=" + std::to_string(p) + " and n=" +
                     std::to_string(n));
  Rng rng(seed);
  UndirectedGraph g(p);

  std::vector<Vertex> isolated(p);
  std::iota(isolated.begin(), isolated.end(), Vertex{0});
  std::vector<Vertex> connected;
  auto take_isolated = [&] {
    const std::size_t i = rng.below(isolated.size());
    const Vertex v = isolated[i];
    isolated.erase(isolated.begin() + static_cast<std::ptrdiff_t>(i));
    return v;
  };
  connected.push_back(take_isolated());
  while (!isolated.empty()) {
    const Vertex a = connected[rng.below(connected.size())];
    const Vertex b = take_isolated();
    g.add_edge(a, b);
    connected.push_back(b);
  }

  // Drawing absent edges uniformly until one keeps the graph chordal is the
  // same as scanning a uniform shuffle of them.
  while (g.edge_count() < n) {
    std::vector<Edge> absent = complement(g).edges();
    rng.shuffle(absent);
    bool inserted = false;
    for (const Edge& e : absent) {
      g.add_edge(e.u, e.v);
      if (is_chordal(g)) {
        inserted = true;
        break;
      }
      g.remove_edge(e.u, e.v);
    }
    if (!inserted) throw InvariantError("random_chordal: no chordal edge insertion available");
  }
  return g;
}

namespace {

Fixture fixture(std::string name, std::size_t p, std::vector<Edge> edges, SizePolynomial poly) {
  return {std::move(name), UndirectedGraph(p, edges), std::move(poly), std::nullopt};
}

}  // namespace

std::vector<Fixture> table2_fixtures() {
  // Vertex labels follow the drawings left to right; coefficients are listed
  // from the constant term up.
  std::vector<Fixture> out;
  out.push_back(fixture("id1", 2, {}, {1, 2}));
  out.push_back(fixture("id2", 3, {{0, 1}}, {2, 5, 1}));
  out.push_back(fixture("id3", 3, {}, {1, 3}));
  out.push_back(fixture("id4", 4, {{0, 1}, {1, 2}, {2, 3}}, {4, 7, 3}));
  out.push_back(fixture("id5", 4, {{0, 1}, {0, 2}, {1, 2}}, {6, 17, 6, 1}));
  out.push_back(fixture("id6", 4, {{0, 1}, {2, 3}}, {4, 12, 4}));
  out.push_back(fixture("id7", 4, {{0, 1}, {1, 2}}, {3, 8, 2}));
  // (m+1)(m+4)(2m+3)
  out.push_back(fixture("id8", 5, {{0, 3}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}}, {12, 23, 13, 2}));
  // 24m + (m+4)(m+3)(m+2)(m+1)
  out.push_back(fixture("id9", 5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}, {24, 74, 35, 10, 1}));
  out.push_back(fixture("id10", 4, {{0, 1}}, {2, 7, 1}));
  out.push_back(fixture("id11", 5, {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}}, {10, 29, 11, 2}));
  out.push_back(fixture("id12", 5, {{0, 1}, {1, 2}, {1, 4}, {2, 4}, {3, 4}}, {10, 19, 10, 1}));
  out.push_back(fixture("id13", 5, {{0, 3}, {1, 2}, {1, 4}, {2, 4}, {3, 4}}, {10, 19, 10, 1}));
  out.push_back(fixture("id14", 6,
                        {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}},
                        {40, 82, 55, 14, 1}));
  // (m+1)(2m+3)(m^2+7m+16)
  out.push_back(fixture("id15", 6,
                        {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}},
                        {48, 101, 70, 19, 2}));
  // 120m + (m+5)(m+4)(m+3)(m+2)(m+1)
  out.push_back(fixture("id16", 6,
                        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
                        {120, 394, 225, 85, 15, 1}));
  return out;
}

std::vector<Fixture> table1_fixtures() {
  std::vector<Fixture> out;
  out.push_back(fixture("null", 0, {}, {1}));
  out.push_back(fixture("two-isolated", 2, {}, {1, 2}));
  out.push_back(fixture("edge-plus-vertex", 3, {{0, 1}}, {2, 5, 1}));
  out.push_back(fixture("three-isolated", 3, {}, {1, 3}));
  out.push_back(fixture("path4", 4, {{0, 1}, {1, 2}, {2, 3}}, {4, 7, 3}));
  out.push_back(fixture("triangle-plus-vertex", 4, {{0, 1}, {0, 2}, {1, 2}}, {6, 17, 6, 1}));
  return out;
}

}  // namespace mec::testkit
