#include "mec/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <numeric>
#include <ostream>
#include <thread>

#include "mec/counting.hpp"
#include "mec/formula.hpp"
#include "mec/testkit.hpp"

namespace mec {

namespace {

template <class F>
std::pair<BigCount, std::int64_t> timed(F&& run) {
  run();  // warm-up, discarded
  const auto start = std::chrono::steady_clock::now();
  BigCount result = run();
  const auto stop = std::chrono::steady_clock::now();
  return {std::move(result), std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()};
}

BenchRow run_sample(std::size_t p, std::size_t n, std::size_t index, std::uint64_t seed) {
  const UndirectedGraph g = testkit::random_chordal(p, n, seed);
  auto [bench_size, t_bench] = timed([&] { return size_uccg_benchmark(g); });
  auto [formula_size, t_formula] = timed([&] { return size_uccg_formula(g); });
  BenchRow row;
  row.p = p;
  row.n = n;
  row.sample_index = static_cast<std::int64_t>(index);
  row.seed = seed;
  row.size = formula_size.get_str();
  row.t_benchmark_ns = t_bench;
  row.t_formula_ns = t_formula;
  row.engines_agree = bench_size == formula_size;
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench_samples(const BenchConfig& config) {
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t n = config.min_edges; n <= config.max_edges; ++n)
    for (std::size_t i = 0; i < config.samples; ++i) jobs.emplace_back(n, i);

  std::vector<BenchRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
      const auto [n, i] = jobs[j];
      rows[j] = run_sample(config.vertices, n, i, config.seed + i);
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  return rows;
}

std::int64_t median(std::vector<std::int64_t> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : (values[mid - 1] + values[mid]) / 2;
}

std::vector<BenchRow> summarize(const std::vector<BenchRow>& data) {
  std::map<std::size_t, std::vector<const BenchRow*>> by_n;
  for (const BenchRow& r : data) by_n[r.n].push_back(&r);

  std::vector<BenchRow> out;
  for (const auto& [n, rows] : by_n) {
    std::vector<std::int64_t> tb, tf;
    for (const BenchRow* r : rows) {
      tb.push_back(r->t_benchmark_ns);
      tf.push_back(r->t_formula_ns);
    }
    const auto count = static_cast<std::int64_t>(rows.size());
    auto stat_row = [&](const char* name, std::int64_t b, std::int64_t f) {
      BenchRow s;
      s.p = rows.front()->p;
      s.n = n;
      s.sample_index = -1;
      s.seed = rows.front()->seed;
      s.size = name;
      s.t_benchmark_ns = b;
      s.t_formula_ns = f;
      out.push_back(s);
    };
    stat_row("mean", std::accumulate(tb.begin(), tb.end(), std::int64_t{0}) / count,
             std::accumulate(tf.begin(), tf.end(), std::int64_t{0}) / count);
    stat_row("min", *std::min_element(tb.begin(), tb.end()), *std::min_element(tf.begin(), tf.end()));
    stat_row("median", median(tb), median(tf));
    stat_row("max", *std::max_element(tb.begin(), tb.end()), *std::max_element(tf.begin(), tf.end()));
  }
  return out;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "p,n,sample_index,seed,size,t_benchmark_ns,t_formula_ns\n";
  for (const BenchRow& r : rows)
    out << r.p << ',' << r.n << ',' << r.sample_index << ',' << r.seed << ',' << r.size << ',' << r.t_benchmark_ns
        << ',' << r.t_formula_ns << '\n';
}

}  // namespace mec
