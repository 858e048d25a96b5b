#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "mec/chain_graph.hpp"
#include "mec/graph.hpp"
#include "mec/numeric.hpp"
#include "mec/polynomial.hpp"

namespace mec {

/// Upper-triangular system A beta = gamma linking the increment polynomial
/// g(K, m) = sum_i gamma_i m^{i-1} to the coefficients beta_1..beta_{d+1} of
/// P(m). Entries a_ij = (-1)^{j-i} binom(j, i-1) for i <= j (1-based).
struct CoefficientSystem {
  std::vector<Rational> gamma;
  std::vector<std::vector<BigCount>> a;

  static CoefficientSystem from_gamma(std::vector<Rational> gamma);
  std::size_t dimension() const { return gamma.size(); }
  /// 1-based access, zero below the diagonal.
  const BigCount& at(std::size_t i, std::size_t j) const { return a[i - 1][j - 1]; }
};

/// Explicit polynomial for the four special classes: null, tree, tree-plus
/// and perfect matchings. Throws InputError for an invalid (class, p) pair.
SizePolynomial closed_form(GraphClass c, std::size_t p);

/// Back-substitution: beta_0 = size0, then beta_{d+1} down to beta_1.
SizePolynomial solve_beta(const CoefficientSystem& system, const BigCount& size0);

/// Derives size polynomials and class sizes for chordal graphs. One engine
/// holds one memo table (polynomials and counts, keyed by labeled graph);
/// use a fresh engine per top-level computation.
class FormulaEngine {
 public:
  /// f(K, m) / m! for a chordal K (any vertex count, possibly disconnected).
  SizePolynomial size_f(const UndirectedGraph& k);
  /// The general branch: g(K, m) followed by solve_beta.
  SizePolynomial size_gf(const UndirectedGraph& k);
  /// g(K, m) = (1/m!) sum_v f(K_{N_v}, m) Size(K^{(v)}) / Size(K_{N_v}),
  /// evaluated per connected component.
  CoefficientSystem g_polynomial(const UndirectedGraph& k);

  /// Size of a UCCG through its core graph and dominating-vertex count.
  BigCount size_uccg(const UndirectedGraph& u);
  /// Size of a chordal graph: product over its connected components.
  BigCount size_chordal(const UndirectedGraph& k);
  /// Size(K^{(v)}) for a chordal K: the rooted size of v's component times
  /// the sizes of the other components.
  BigCount rooted_size(const UndirectedGraph& k, Vertex v);
  /// Product over chain components of size_uccg.
  BigCount size(const ChainGraph& cg);

  std::size_t memo_entries() const { return memo_.size(); }

 private:
  struct Increment {
    CoefficientSystem system;
    BigCount size;
  };

  SizePolynomial size_f_impl(const UndirectedGraph& k);
  SizePolynomial size_gf_impl(const UndirectedGraph& k);
  Increment increment(const UndirectedGraph& k);
  BigCount size_uccg_impl(const UndirectedGraph& u);
  BigCount size_chordal_impl(const UndirectedGraph& k);
  BigCount rooted_size_connected(const UndirectedGraph& u, Vertex v);

  std::unordered_map<std::string, std::variant<SizePolynomial, BigCount>> memo_;
};

// One-shot entry points; each runs on a fresh FormulaEngine.
SizePolynomial size_f(const UndirectedGraph& k);
SizePolynomial size_gf(const UndirectedGraph& k);
CoefficientSystem g_polynomial(const UndirectedGraph& k);
BigCount size_uccg_formula(const UndirectedGraph& u);
BigCount size_formula_based(const ChainGraph& cg);

/// Checks f(K,0) = Size(K) and, for m = 1..m_max,
/// f(K,m) = m f(K,m-1) + sum_v f(K_{N_v},m) Size(K^{(v)}) / Size(K_{N_v})
/// exactly, with poly standing in for f(K, .).
bool recurrence_check(const UndirectedGraph& k, const SizePolynomial& poly, std::size_t m_max);

}  // namespace mec
