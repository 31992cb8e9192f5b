#ifndef BITONIC_ENGINE_HPP
#define BITONIC_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bitonic/schedule.hpp"

namespace bitonic {

// The sequence being sorted: 32-bit signed keys, length a power of two >= 2
// whenever it enters the engine (padding to that shape happens upstream).
using KeyArray = std::vector<std::int32_t>;

// The three launch strategies. baseline dispatches one launch per step;
// shared folds every step that fits a block-local buffer into one launch per
// phase; fused additionally pairs the remaining whole-array steps two at a
// time through register temporaries.
enum class Strategy { baseline, shared, fused };

const char* strategy_name(Strategy strategy);

enum class LaunchKind {
  global_step,           // one step over the whole array
  shared_fused_block,    // a phase's trailing steps, block-local
  register_paired_step,  // two consecutive steps of one phase, 4 keys per item
};

// One barrier-separated dispatch. steps holds the covered StepSpecs in
// schedule order: exactly 1 for global_step, exactly 2 (strides 2d, d) for
// register_paired_step, and a phase's maximal fitting suffix for
// shared_fused_block. block_capacity is meaningful for shared launches only.
struct Launch {
  LaunchKind kind = LaunchKind::global_step;
  std::vector<StepSpec> steps;
  std::size_t block_capacity = 0;
};

// Ordered launch list for one strategy. Concatenating steps over all launches
// reproduces the schedule's step order exactly; fusion moves launch
// boundaries, never steps.
struct LaunchPlan {
  Strategy strategy = Strategy::baseline;
  unsigned k = 0;
  std::size_t block_capacity = 0;
  std::vector<Launch> launches;
};

// Deterministic function of (k, strategy, block_capacity): independent of key
// values and worker count. Reads/writes count elements moved against the
// global array; compare-exchanges are charged 2 reads + 2 writes
// unconditionally, swap or not.
struct Counters {
  std::uint64_t kernel_launches = 0;
  std::uint64_t global_reads = 0;
  std::uint64_t global_writes = 0;
  std::uint64_t compare_exchanges = 0;

  Counters& operator+=(const Counters& other) {
    kernel_launches += other.kernel_launches;
    global_reads += other.global_reads;
    global_writes += other.global_writes;
    compare_exchanges += other.compare_exchanges;
    return *this;
  }

  friend bool operator==(const Counters&, const Counters&) = default;
};

struct ExecutionResult {
  KeyArray keys;
  Counters counters;
};

// Derives the launch list for a schedule under one strategy.
// block_capacity must be a power of two in [2, 2^k]; throws config_error
// otherwise.
LaunchPlan build_plan(const Schedule& schedule, Strategy strategy,
                      std::size_t block_capacity);

// Counter delta charged for one launch over n elements.
Counters account(const Launch& launch, std::size_t n);

// Runs every launch of the plan in order, partitioning each launch's work
// items across `workers` and joining at a full barrier before the next
// launch. Work items within a launch touch disjoint keys, so the sorted
// output is bit-identical for every worker count. Throws invalid_size_error
// when keys.size() != 2^k, config_error when workers < 1.
ExecutionResult execute(const LaunchPlan& plan, KeyArray keys,
                        unsigned workers);

// Work-item body of a register_paired_step launch: loads the four addresses
// base, base+stride, base+2*stride, base+3*stride once, applies the
// stride-2d step's two compare-exchanges then the stride-d step's two in
// temporaries, and stores the four keys once. base must have both stride
// bits clear; all four compare-exchanges share one direction.
void register_paired_kernel(std::size_t base, std::size_t stride,
                            bool ascending, std::span<std::int32_t> keys);

// Plain single-threaded run of the full network, no launch machinery or
// counters. The CPU reference shape of the same algorithm.
void sequential_bitonic_sort(std::span<std::int32_t> keys);

}  // namespace bitonic

#endif  // BITONIC_ENGINE_HPP
