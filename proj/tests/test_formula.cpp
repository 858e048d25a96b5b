#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mec/counting.hpp"
#include "mec/errors.hpp"
#include "mec/formula.hpp"
#include "test_support.hpp"

using namespace mec;
using mec::test::graph;

namespace {

SizePolynomial from_gamma_values(const std::vector<Rational>& gamma) { return SizePolynomial(gamma); }

// g(K,m) = [f(K,m) - m f(K,m-1)] / m!, with f from brute-force enumeration of K^{m+}
Rational oracle_g(const UndirectedGraph& k, std::size_t m) {
  const BigCount fm = testkit::oracle_extension_count(k, m);
  const BigCount prev = m == 0 ? BigCount(0) : testkit::oracle_extension_count(k, m - 1);
  return Rational(fm - BigCount(static_cast<unsigned long>(m)) * prev) / Rational(factorial(m));
}

UndirectedGraph random_chordal_k(std::uint64_t seed, std::size_t max_p) {
  const std::size_t p = 1 + seed % max_p;
  return test::random_chordal_forest(p, seed);
}

}  // namespace

TEST_CASE("size_f examples") {
  CHECK(size_f(UndirectedGraph(2)) == SizePolynomial{1, 2});
  CHECK(size_f(graph(3, {{0, 1}})) == SizePolynomial{2, 5, 1});
  CHECK(size_f(graph(4, {{0, 1}, {1, 2}, {0, 2}})) == SizePolynomial{6, 17, 6, 1});
  CHECK(size_f(UndirectedGraph()) == SizePolynomial{1});
  CHECK(size_f(UndirectedGraph::complete(3)) == SizePolynomial{6, 11, 6, 1});
  CHECK_THROWS_AS(size_f(test::cycle(4)), InvalidGraphError);
}

TEST_CASE("size_f reproduces the published core-graph formulas") {
  for (const auto& f : testkit::table2_fixtures()) {
    CAPTURE(f.name);
    REQUIRE(f.expected_polynomial);
    CHECK(size_f(f.graph) == *f.expected_polynomial);
  }
}

TEST_CASE("closed_form") {
  CHECK(closed_form(GraphClass::null, 0) == SizePolynomial{1});
  CHECK(closed_form(GraphClass::tree, 3) == SizePolynomial{3, 5, 2});
  CHECK(closed_form(GraphClass::isolated_edges, 4) == SizePolynomial{4, 12, 4});
  CHECK(closed_form(GraphClass::tree_plus, 3) == SizePolynomial{6, 11, 6, 1});
  CHECK_THROWS_AS(closed_form(GraphClass::null, 2), InputError);
  CHECK_THROWS_AS(closed_form(GraphClass::isolated_edges, 3), InputError);
  CHECK_THROWS_AS(closed_form(GraphClass::general, 5), InputError);
}

TEST_CASE("closed forms agree with the general derivation") {
  // size_gf skips the classification shortcut
  for (std::size_t p = 2; p <= 8; ++p) {
    CHECK(size_gf(test::path(p)) == closed_form(GraphClass::tree, p));
    CHECK(size_gf(test::star(p - 1)) == closed_form(GraphClass::tree, p));
  }
  for (std::size_t p = 3; p <= 8; ++p) {
    UndirectedGraph g = test::path(p);
    g.add_edge(0, 2);
    CHECK(size_gf(g) == closed_form(GraphClass::tree_plus, p));
  }
  for (std::size_t p = 2; p <= 10; p += 2) {
    UndirectedGraph g(p);
    for (Vertex v = 0; v < p; v += 2) g.add_edge(v, v + 1);
    CHECK(size_gf(g) == closed_form(GraphClass::isolated_edges, p));
  }
}

TEST_CASE("g_polynomial") {
  SUBCASE("trees") {
    for (std::size_t p = 2; p <= 7; ++p) {
      const auto q = static_cast<long>(p);
      CHECK(from_gamma_values(g_polynomial(test::path(p)).gamma) == SizePolynomial{q, 2 * (q - 1)});
    }
  }
  SUBCASE("two isolated vertices") {
    CHECK(g_polynomial(UndirectedGraph(2)).gamma == std::vector<Rational>{2});
  }
  SUBCASE("triangle against enumeration") {
    const UndirectedGraph k = UndirectedGraph::complete(3);
    const SizePolynomial g = from_gamma_values(g_polynomial(k).gamma);
    for (std::size_t m = 0; m <= 5; ++m) CHECK(g.at(m) == oracle_g(k, m));
    CHECK(g == SizePolynomial{6, 9, 3});
  }
  SUBCASE("random graphs against enumeration") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const UndirectedGraph k = random_chordal_k(seed, 5);
      CAPTURE(seed);
      const SizePolynomial g = from_gamma_values(g_polynomial(k).gamma);
      // at m = 0 a disconnected K has no single root, so the identity starts at m = 1
      for (std::size_t m = 1; m + k.vertex_count() <= 8; ++m) CHECK(g.at(m) == oracle_g(k, m));
    }
  }
}

TEST_CASE("coefficient system") {
  const CoefficientSystem s = CoefficientSystem::from_gamma({1, 2, 3, 0});
  CHECK(s.dimension() == 3);
  CHECK(s.at(1, 1) == 1);
  CHECK(s.at(1, 2) == -1);
  CHECK(s.at(1, 3) == 1);
  CHECK(s.at(2, 2) == 2);
  CHECK(s.at(2, 3) == -3);
  CHECK(s.at(3, 3) == 3);
  CHECK(s.at(2, 1) == 0);
}

TEST_CASE("solve_beta") {
  for (long p = 2; p <= 9; ++p) {
    const auto s = CoefficientSystem::from_gamma({Rational(p), Rational(2 * (p - 1))});
    CHECK(solve_beta(s, BigCount(p)) == SizePolynomial{p, 2 * p - 1, p - 1});
  }
  CHECK(solve_beta(CoefficientSystem::from_gamma({2}), 1) == SizePolynomial{1, 2});
  CHECK(solve_beta(CoefficientSystem::from_gamma({0, 0}), 1) == SizePolynomial{1});
}

TEST_CASE("solve_beta inverts the recurrence") {
  // P(m) m! - m P(m-1)(m-1)! = g(m) m!  <=>  P(m) - P(m-1) = g(m) for every m >= 1
  const std::vector<std::vector<Rational>> gammas{{3}, {1, 4}, {2, 0, 5}, {Rational(1, 2), 7, 1, 2}};
  for (const auto& gamma : gammas) {
    const SizePolynomial g(gamma);
    const SizePolynomial p = solve_beta(CoefficientSystem::from_gamma(gamma), 5);
    CHECK(p.at(0) == 5);
    for (long m = 1; m <= 8; ++m) CHECK(p.at(m) - p.at(m - 1) == g.at(m));
  }
}

TEST_CASE("size_gf") {
  CHECK(size_gf(test::path(4)) == SizePolynomial{4, 7, 3});
  CHECK(size_gf(graph(4, {{0, 1}, {2, 3}})) == SizePolynomial{4, 12, 4});
  CHECK(size_gf(graph(5, {{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}})) == SizePolynomial{10, 29, 11, 2});
}

TEST_CASE("size_formula_based") {
  CHECK(size_formula_based(ChainGraph::from_undirected(UndirectedGraph::complete(6))) == 720);
  CHECK(size_formula_based(ChainGraph::from_undirected(test::path(3))) == 3);
  for (std::size_t p = 3; p <= 12; ++p) {
    UndirectedGraph g = UndirectedGraph::complete(p);
    g.remove_edge(0, 1);
    CHECK(size_formula_based(ChainGraph::from_undirected(g)) == 2 * factorial(p - 1) - factorial(p - 2));
  }
  ChainGraph mixed(5);
  mixed.add_undirected(0, 1);
  mixed.add_directed(1, 2);
  mixed.add_undirected(2, 3);
  mixed.add_undirected(3, 4);
  CHECK(size_formula_based(mixed) == 2 * 3);
  ChainGraph bad(4);
  for (const Edge& e : test::cycle(4).edges()) bad.add_undirected(e.u, e.v);
  CHECK_THROWS_AS(size_formula_based(bad), InvalidGraphError);
}

TEST_CASE("recurrence_check") {
  CHECK(recurrence_check(UndirectedGraph(2), SizePolynomial{1, 2}, 5));
  CHECK(recurrence_check(UndirectedGraph::complete(3), SizePolynomial{6, 11, 6, 1}, 5));
  CHECK_FALSE(recurrence_check(UndirectedGraph(2), SizePolynomial{1, 3}, 5));
  for (const auto& f : testkit::table2_fixtures()) {
    CAPTURE(f.name);
    SizePolynomial perturbed = *f.expected_polynomial + SizePolynomial{0, 1};
    CHECK(recurrence_check(f.graph, *f.expected_polynomial, 5));
    CHECK_FALSE(recurrence_check(f.graph, perturbed, 5));
  }
}

TEST_CASE("derived polynomials match enumeration of explicit extensions") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const UndirectedGraph k = random_chordal_k(seed, 6);
    CAPTURE(seed);
    const SizePolynomial poly = size_f(k);
    for (std::size_t m = 0; m <= 3 && k.vertex_count() + m <= 9; ++m)
      CHECK(evaluate(poly, m) == testkit::oracle_extension_count(k, m));
  }
}

TEST_CASE("shift law on explicit extensions") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const UndirectedGraph k = random_chordal_k(seed, 6);
    const SizePolynomial poly = size_f(k);
    for (std::size_t extra = 0; extra <= 3; ++extra) {
      const SizePolynomial extended = size_f(add_dominating_vertices(k, extra));
      for (std::size_t m = 0; m <= 4; ++m) CHECK(evaluate(poly, m + extra) == evaluate(extended, m));
    }
  }
}

TEST_CASE("derived polynomials are positive, satisfy the recurrence and start at the class size") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const UndirectedGraph k = random_chordal_k(seed, 9);
    CAPTURE(seed);
    const SizePolynomial poly = size_f(k);
    CHECK(poly.is_integral());
    for (long m = 0; m <= 10; ++m) CHECK(poly.at(m) > 0);
    CHECK(recurrence_check(k, poly, 5));
    CHECK(BigCount(poly.at(0).get_num()) == size_benchmark(ChainGraph::from_undirected(k)));
  }
}

TEST_CASE("engines agree on larger graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t p = 10 + seed % 6;
    const std::size_t n = p - 1 + (seed * 37) % (p * (p - 1) / 2 - p + 2);
    const UndirectedGraph g = testkit::random_chordal(p, n, seed);
    CHECK(size_uccg_formula(g) == size_uccg_benchmark(g));
  }
}

TEST_CASE("engine memo is reused across calls") {
  FormulaEngine engine;
  const UndirectedGraph g = testkit::random_chordal(9, 20, 3);
  const BigCount first = engine.size_uccg(g);
  const std::size_t entries = engine.memo_entries();
  CHECK(entries > 0);
  CHECK(engine.size_uccg(g) == first);
  CHECK(engine.memo_entries() == entries);
}
