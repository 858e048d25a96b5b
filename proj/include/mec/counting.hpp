#pragma once

#include <cstddef>
#include <optional>

#include "mec/chain_graph.hpp"
#include "mec/graph.hpp"
#include "mec/numeric.hpp"

namespace mec {

struct BenchmarkOptions {
  /// Short-circuit on the five (p, n)-determined class sizes.
  bool closed_forms = true;
  bool memoize = true;
  /// Evaluate the top-level root summands on separate threads.
  bool parallel_roots = false;
};

/// Size of a UCCG determined by (p, n) alone, when n is p-1, p, or within two
/// edges of complete.
std::optional<BigCount> benchmark_closed_form(std::size_t p, std::size_t n);

/// Size of a UCCG by recursive rooted partition: the sum over roots v of the
/// product of the sizes of chain_com(u, v)'s chain components.
BigCount size_uccg_benchmark(const UndirectedGraph& u, const BenchmarkOptions& options = {});

/// Product of size_uccg_benchmark over the chain components of cg.
BigCount size_benchmark(const ChainGraph& cg, const BenchmarkOptions& options = {});

/// Size of the v-rooted sub-class of u: product of the sizes of the chain
/// components of chain_com(u, v).
BigCount rooted_size_benchmark(const UndirectedGraph& u, Vertex v, const BenchmarkOptions& options = {});

/// Throws InvalidGraphError naming the component unless every chain component
/// of cg is chordal.
void require_chordal_components(const ChainGraph& cg);

}  // namespace mec
