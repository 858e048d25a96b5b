#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mec/graph.hpp"
#include "mec/numeric.hpp"
#include "mec/polynomial.hpp"

namespace mec::testkit {

/// Largest graph the brute-force oracle accepts.
inline constexpr std::size_t kOracleMaxVertices = 9;

/// Seeded generator: std::mt19937_64 (fully specified by the standard) with a
/// portable bounded draw, so corpora match across platforms and toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Counts the distinct acyclic orientations of u without v-structures by
/// orienting along every vertex permutation. u must be connected and chordal
/// with at most kOracleMaxVertices vertices.
BigCount oracle_count(const UndirectedGraph& u);

/// oracle count of K^{m+}, built explicitly. With m = 0 and a disconnected
/// k, the per-component counts are multiplied.
BigCount oracle_extension_count(const UndirectedGraph& k, std::size_t m);

/// Random connected chordal graph: a random tree grown from a random vertex,
/// then uniformly random absent edges kept only while the graph stays chordal.
UndirectedGraph random_chordal(std::size_t p, std::size_t n, std::uint64_t seed);

struct Fixture {
  std::string name;
  UndirectedGraph graph;
  std::optional<SizePolynomial> expected_polynomial;
  std::optional<BigCount> expected_size;
};

/// The sixteen core graphs with at most five missing edges and their
/// polynomials P(m) = f(K, m) / m!, fully expanded.
std::vector<Fixture> table2_fixtures();

/// Core graphs of UCCGs with at most three missing edges.
std::vector<Fixture> table1_fixtures();

}  // namespace mec::testkit
