#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mec {

struct BenchConfig {
  std::size_t vertices = 12;
  std::size_t min_edges = 14;
  std::size_t max_edges = 63;
  std::size_t samples = 10;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
};

struct BenchRow {
  std::size_t p = 0;
  std::size_t n = 0;
  std::int64_t sample_index = 0;  // -1 on summary rows
  std::uint64_t seed = 0;
  std::string size;               // decimal size; statistic name on summary rows
  std::int64_t t_benchmark_ns = 0;
  std::int64_t t_formula_ns = 0;
  bool engines_agree = true;
};

/// One data row per (n, sample) in (n, sample_index) order; sample i at every
/// n uses seed + i. Each engine is run once untimed, then once timed.
std::vector<BenchRow> run_bench_samples(const BenchConfig& config);

/// mean, min, median and max rows (sample_index = -1) for each n.
std::vector<BenchRow> summarize(const std::vector<BenchRow>& data);

std::int64_t median(std::vector<std::int64_t> values);

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace mec
