#include "mec/formula.hpp"

#include "mec/counting.hpp"
#include "mec/errors.hpp"

namespace mec {

namespace {

void require_chordal(const UndirectedGraph& k) {
  if (!is_chordal(k)) throw InvalidGraphError("graph is not chordal");
}

void require_uccg(const UndirectedGraph& u) {
  if (!is_connected(u)) throw InvalidGraphError("graph is not connected");
  require_chordal(u);
}

Rational as_rational(std::size_t x) { return Rational(static_cast<unsigned long>(x)); }

}  // namespace

CoefficientSystem CoefficientSystem::from_gamma(std::vector<Rational> gamma) {
  while (!gamma.empty() && gamma.back() == 0) gamma.pop_back();
  CoefficientSystem s;
  const std::size_t n = gamma.size();
  s.gamma = std::move(gamma);
  s.a.assign(n, std::vector<BigCount>(n, BigCount(0)));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) {
      BigCount entry = binomial(j, i - 1);
      if ((j - i) % 2) entry = -entry;
      s.a[i - 1][j - 1] = entry;
    }
  return s;
}

SizePolynomial closed_form(GraphClass c, std::size_t p) {
  const long q = static_cast<long>(p);
  switch (c) {
    case GraphClass::null:
      if (p != 0) break;
      return SizePolynomial{1};
    case GraphClass::tree:
      if (p < 1) break;
      return SizePolynomial{q, 2 * q - 1, q - 1};
    case GraphClass::tree_plus:
      if (p < 3) break;
      return SizePolynomial{2 * q, 4 * q - 1, 2 * q, 1};
    case GraphClass::isolated_edges: {
      if (p < 2 || p % 2) break;
      BigCount scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 2, p / 2 - 1);
      return SizePolynomial{2, 3 * q / 2, q / 2} * Rational(scale);
    }
    case GraphClass::general:
      break;
  }
  throw InputError(std::string("closed_form: no closed form for class ") + to_string(c) + " with p=" +
                   std::to_string(p));
}

SizePolynomial solve_beta(const CoefficientSystem& system, const BigCount& size0) {
  const std::size_t n = system.dimension();
  std::vector<Rational> beta(n + 1, Rational(0));
  beta[0] = size0;
  for (std::size_t i = n; i >= 1; --i) {
    Rational rhs = system.gamma[i - 1];
    for (std::size_t j = i + 1; j <= n; ++j) rhs -= Rational(system.at(i, j)) * beta[j];
    beta[i] = rhs / Rational(system.at(i, i));
  }
  return SizePolynomial(std::move(beta));
}

SizePolynomial FormulaEngine::size_f(const UndirectedGraph& k) {
  require_chordal(k);
  return size_f_impl(k);
}

SizePolynomial FormulaEngine::size_gf(const UndirectedGraph& k) {
  require_chordal(k);
  return size_gf_impl(k);
}

CoefficientSystem FormulaEngine::g_polynomial(const UndirectedGraph& k) {
  require_chordal(k);
  return increment(k).system;
}

BigCount FormulaEngine::size_uccg(const UndirectedGraph& u) {
  require_uccg(u);
  return size_uccg_impl(u);
}

BigCount FormulaEngine::size_chordal(const UndirectedGraph& k) {
  require_chordal(k);
  return size_chordal_impl(k);
}

BigCount FormulaEngine::rooted_size(const UndirectedGraph& k, Vertex v) {
  require_chordal(k);
  if (v >= k.vertex_count()) throw InputError("root " + std::to_string(v) + " out of range");
  BigCount product = 1;
  for (const auto& comp : connected_components(k)) {
    const InducedSubgraph sub = induced_subgraph(k, std::span<const Vertex>(comp));
    bool holds_root = false;
    Vertex local = 0;
    for (; local < comp.size(); ++local)
      if (comp[local] == v) {
        holds_root = true;
        break;
      }
    product *= holds_root ? rooted_size_connected(sub.graph, local) : size_chordal_impl(sub.graph);
  }
  return product;
}

BigCount FormulaEngine::size(const ChainGraph& cg) {
  require_chordal_components(cg);
  BigCount product = 1;
  for (const UndirectedGraph& c : chain_components(cg)) product *= size_uccg_impl(c);
  return product;
}

SizePolynomial FormulaEngine::size_f_impl(const UndirectedGraph& k) {
  std::string key = "P" + canonical_key(k);
  if (auto it = memo_.find(key); it != memo_.end()) return std::get<SizePolynomial>(it->second);

  SizePolynomial result;
  const GraphClass cls = classify(k);
  const VertexSet dominating = dominating_vertices(k);
  const VertexSet isolated = isolated_vertices(k);
  if (cls != GraphClass::general) {
    result = closed_form(cls, k.vertex_count());
  } else if (!dominating.empty()) {
    // f(K'^{w+}, m) = f(K', m + w)
    const InducedSubgraph rest = induced_subgraph(k, k.all_vertices() - dominating);
    result = shift(size_f_impl(rest.graph), dominating.count());
  } else if (!isolated.empty()) {
    // f(K, m) = f(K', m) + j Size(K') m m!
    const InducedSubgraph rest = induced_subgraph(k, k.all_vertices() - isolated);
    const BigCount scale = size_chordal_impl(rest.graph) * static_cast<unsigned long>(isolated.count());
    result = size_f_impl(rest.graph) + SizePolynomial(std::vector<Rational>{Rational(0), Rational(scale)});
  } else {
    result = size_gf_impl(k);
  }

  if (!result.is_integral()) throw InvariantError("derived size polynomial has a non-integral coefficient");
  memo_.emplace(std::move(key), result);
  return result;
}

SizePolynomial FormulaEngine::size_gf_impl(const UndirectedGraph& k) {
  const Increment inc = increment(k);
  return solve_beta(inc.system, inc.size);
}

FormulaEngine::Increment FormulaEngine::increment(const UndirectedGraph& k) {
  struct Part {
    InducedSubgraph sub;
    std::vector<BigCount> rooted;
    BigCount total = 0;
  };
  std::vector<Part> parts;
  BigCount size_k = 1;
  for (const auto& comp : connected_components(k)) {
    Part part{induced_subgraph(k, std::span<const Vertex>(comp)), {}, 0};
    for (Vertex v = 0; v < comp.size(); ++v) {
      part.rooted.push_back(rooted_size_connected(part.sub.graph, v));
      part.total += part.rooted.back();
    }
    // sum of rooted sizes is the component's size; remember it
    memo_.try_emplace("S" + canonical_key(part.sub.graph), part.total);
    size_k *= part.total;
    parts.push_back(std::move(part));
  }

  SizePolynomial g(std::vector<Rational>{Rational(0)});
  for (const Part& part : parts) {
    const BigCount others = size_k / part.total;
    const UndirectedGraph& kj = part.sub.graph;
    for (Vertex v = 0; v < kj.vertex_count(); ++v) {
      const InducedSubgraph nbhd = induced_subgraph(kj, kj.neighbors(v));
      const Rational weight = Rational(others * part.rooted[v]) / Rational(size_chordal_impl(nbhd.graph));
      g += size_f_impl(nbhd.graph) * weight;
    }
  }

  Increment out;
  out.system = CoefficientSystem::from_gamma(g.is_zero() ? std::vector<Rational>{} : g.coefficients());
  out.size = size_k;
  return out;
}

BigCount FormulaEngine::size_uccg_impl(const UndirectedGraph& u) {
  std::string key = "S" + canonical_key(u);
  if (auto it = memo_.find(key); it != memo_.end()) return std::get<BigCount>(it->second);
  const CoreDecomposition core = core_decomposition(u);
  BigCount result = evaluate(size_f_impl(core.core), core.dominating_count);
  memo_.emplace(std::move(key), result);
  return result;
}

BigCount FormulaEngine::size_chordal_impl(const UndirectedGraph& k) {
  BigCount product = 1;
  for (const auto& comp : connected_components(k)) {
    if (comp.size() < 2) continue;
    product *= size_uccg_impl(induced_subgraph(k, std::span<const Vertex>(comp)).graph);
  }
  return product;
}

BigCount FormulaEngine::rooted_size_connected(const UndirectedGraph& u, Vertex v) {
  BigCount product = 1;
  for (const UndirectedGraph& c : detail::chain_com_unchecked(u, v).components) product *= size_uccg_impl(c);
  return product;
}

SizePolynomial size_f(const UndirectedGraph& k) { return FormulaEngine().size_f(k); }
SizePolynomial size_gf(const UndirectedGraph& k) { return FormulaEngine().size_gf(k); }
CoefficientSystem g_polynomial(const UndirectedGraph& k) { return FormulaEngine().g_polynomial(k); }
BigCount size_uccg_formula(const UndirectedGraph& u) { return FormulaEngine().size_uccg(u); }
BigCount size_formula_based(const ChainGraph& cg) { return FormulaEngine().size(cg); }

bool recurrence_check(const UndirectedGraph& k, const SizePolynomial& poly, std::size_t m_max) {
  require_chordal(k);
  FormulaEngine engine;
  if (poly.at(Rational(0)) != Rational(engine.size_chordal(k))) return false;

  struct Term {
    SizePolynomial neighborhood;
    Rational ratio;
  };
  std::vector<Term> terms;
  for (Vertex v = 0; v < k.vertex_count(); ++v) {
    const InducedSubgraph nbhd = induced_subgraph(k, k.neighbors(v));
    terms.push_back({engine.size_f(nbhd.graph),
                     Rational(engine.rooted_size(k, v)) / Rational(engine.size_chordal(nbhd.graph))});
  }

  for (std::size_t m = 1; m <= m_max; ++m) {
    const Rational mf(factorial(m));
    const Rational lhs = poly.at(as_rational(m)) * mf;
    Rational rhs = as_rational(m) * poly.at(as_rational(m - 1)) * Rational(factorial(m - 1));
    for (const Term& t : terms) rhs += t.neighborhood.at(as_rational(m)) * mf * t.ratio;
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace mec
