#include "mec/counting.hpp"

#include <future>
#include <string>
#include <unordered_map>

#include "mec/errors.hpp"

namespace mec {

namespace {

class BenchmarkCounter {
 public:
  explicit BenchmarkCounter(const BenchmarkOptions& options) : options_(options) {}

  BigCount size(const UndirectedGraph& u) {
    if (options_.closed_forms)
      if (auto c = benchmark_closed_form(u.vertex_count(), u.edge_count())) return *c;
    std::string key;
    if (options_.memoize) {
      key = canonical_key(u);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    BigCount total = 0;
    for (Vertex v = 0; v < u.vertex_count(); ++v) total += rooted(u, v);
    if (options_.memoize) memo_.emplace(std::move(key), total);
    return total;
  }

  BigCount rooted(const UndirectedGraph& u, Vertex v) {
    BigCount product = 1;
    for (const UndirectedGraph& c : detail::chain_com_unchecked(u, v).components) product *= size(c);
    return product;
  }

 private:
  BenchmarkOptions options_;
  std::unordered_map<std::string, BigCount> memo_;
};

void require_uccg(const UndirectedGraph& u) {
  if (!is_connected(u)) throw InvalidGraphError("graph is not connected");
  if (!is_chordal(u)) throw InvalidGraphError("graph is not chordal");
}

}  // namespace

std::optional<BigCount> benchmark_closed_form(std::size_t p, std::size_t n) {
  if (p == 0) return BigCount(1);
  const std::size_t full = p * (p - 1) / 2;
  if (n == full) return factorial(p);
  if (n + 1 == p) return BigCount(static_cast<unsigned long>(p));
  if (n == p) return BigCount(static_cast<unsigned long>(2 * p));
  if (p >= 2 && n + 1 == full) return 2 * factorial(p - 1) - factorial(p - 2);
  if (p >= 3 && n + 2 == full) {
    const unsigned long q = p;
    return BigCount(q * q - q - 4) * factorial(p - 3);
  }
  return std::nullopt;
}

BigCount size_uccg_benchmark(const UndirectedGraph& u, const BenchmarkOptions& options) {
  require_uccg(u);
  if (!options.parallel_roots || u.vertex_count() < 2) return BenchmarkCounter(options).size(u);
  if (options.closed_forms)
    if (auto c = benchmark_closed_form(u.vertex_count(), u.edge_count())) return *c;
  // one counter per root: memo tables are not shared across threads
  std::vector<std::future<BigCount>> parts;
  for (Vertex v = 0; v < u.vertex_count(); ++v)
    parts.push_back(std::async(std::launch::async, [&u, v, options] { return BenchmarkCounter(options).rooted(u, v); }));
  BigCount total = 0;
  for (auto& f : parts) total += f.get();
  return total;
}

BigCount rooted_size_benchmark(const UndirectedGraph& u, Vertex v, const BenchmarkOptions& options) {
  require_uccg(u);
  if (v >= u.vertex_count()) throw InputError("root " + std::to_string(v) + " out of range");
  return BenchmarkCounter(options).rooted(u, v);
}

void require_chordal_components(const ChainGraph& cg) {
  const UndirectedGraph und = cg.undirected_part();
  for (const auto& comp : chain_component_vertices(cg)) {
    if (is_chordal(induced_subgraph(und, std::span<const Vertex>(comp)).graph)) continue;
    std::string names;
    for (Vertex v : comp) names += (names.empty() ? "" : " ") + std::to_string(v);
    throw InvalidGraphError("chain component {" + names + "} is not chordal");
  }
}

BigCount size_benchmark(const ChainGraph& cg, const BenchmarkOptions& options) {
  require_chordal_components(cg);
  BigCount product = 1;
  for (const UndirectedGraph& c : chain_components(cg)) product *= size_uccg_benchmark(c, options);
  return product;
}

}  // namespace mec
