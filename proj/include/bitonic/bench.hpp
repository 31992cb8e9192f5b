#ifndef BITONIC_BENCH_HPP
#define BITONIC_BENCH_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bitonic/engine.hpp"

namespace bitonic {

// Columns of a benchmark row. The cpu_* strategies are plain single-threaded
// sorts; the other three run the engine under the matching launch strategy.
enum class BenchStrategy {
  cpu_quicksort,
  cpu_bitonic_sequential,
  baseline,
  shared,
  fused,
};

inline constexpr std::size_t kBenchStrategyCount = 5;

const char* bench_strategy_name(BenchStrategy strategy);

enum class OutputFormat { table, csv, json };

// Timing cells below this are flagged unreliable instead of trusted at face
// value, and never serve as a ratio denominator.
inline constexpr double kMinReliableMs = 1e-3;

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::vector<BenchStrategy> strategies;
  std::size_t block_capacity = 1024;
  unsigned workers = 1;
  std::uint64_t seed = 1;
  unsigned repetitions = 5;
  OutputFormat output_format = OutputFormat::table;
};

struct BenchCell {
  double ms = 0.0;
  bool reliable = true;
};

struct StrategyResult {
  BenchCell time;
  std::optional<Counters> counters;  // engine strategies only
};

// One Table-1-shaped row: requested size, per-strategy timing/counters for
// the strategies that ran, and quicksort time over the fastest engine
// variant when both sides were measured.
struct BenchRecord {
  std::size_t size = 0;
  std::array<std::optional<StrategyResult>, kBenchStrategyCount> results;
  std::optional<double> ratio;

  const std::optional<StrategyResult>& result(BenchStrategy s) const {
    return results[static_cast<std::size_t>(s)];
  }
  std::optional<StrategyResult>& result(BenchStrategy s) {
    return results[static_cast<std::size_t>(s)];
  }
};

// A sorted run whose output failed the sortedness or permutation check; the
// message names size, strategy, and the first violation index.
class bench_validation_error : public std::runtime_error {
 public:
  explicit bench_validation_error(const std::string& what)
      : std::runtime_error(what) {}
};

struct PaddedArray {
  KeyArray keys;
  std::size_t original_length = 0;
};

// Deterministic pseudorandom 32-bit keys: the low 32 bits of successive
// std::mt19937_64 draws, an algorithm the standard pins down exactly, so the
// same (size, seed) yields bit-identical data on every platform.
KeyArray generate_input(std::size_t size, std::uint64_t seed);

// Appends INT32_MAX up to the next power of two (at least 2). After sorting
// the padded array, its first original_length elements are the sorted
// originals.
PaddedArray pad_to_pow2(std::span<const std::int32_t> data);

// Runs every configured size x strategy cell: fresh input from the seed,
// min-of-repetitions timing (plan construction + execution; input generation
// and validation excluded), every rep validated before its timing counts.
// Throws bench_validation_error on a bad sort, config_error on bad settings.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

std::string emit_report(const std::vector<BenchRecord>& records,
                        OutputFormat format);

// "--sizes" grammar: comma list of sizes, each a decimal or 2^E, or a
// doubling range like 2^17..2^24.
std::vector<std::size_t> parse_sizes(const std::string& text);

// "--strategies" grammar: comma list of strategy names, or "all".
std::vector<BenchStrategy> parse_strategies(const std::string& text);

OutputFormat parse_output_format(const std::string& text);

}  // namespace bitonic

#endif  // BITONIC_BENCH_HPP
