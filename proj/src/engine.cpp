#include "bitonic/engine.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <string>
#include <utility>

#include "bitonic/error.hpp"
#include "bitonic/worker_pool.hpp"

namespace bitonic {

namespace {

inline void compare_exchange(std::int32_t& x, std::int32_t& y,
                             bool ascending) {
  // Swaps only when strictly out of order; duplicates stay put.
  if (ascending ? (x > y) : (x < y)) {
    std::swap(x, y);
  }
}

// Lower index of the t-th pair of a step: t with a zero bit inserted at the
// stride's bit position.
inline std::size_t pair_base(std::size_t t, std::size_t stride) {
  const std::size_t low_mask = stride - 1;
  return ((t & ~low_mask) << 1) | (t & low_mask);
}

void run_global_step(std::int32_t* keys, const StepSpec& spec, WorkRange r) {
  const std::size_t stride = spec.stride;
  const std::size_t span = spec.merge_span;
  for (std::size_t t = r.begin; t < r.end; ++t) {
    const std::size_t i = pair_base(t, stride);
    compare_exchange(keys[i], keys[i + stride], (i & span) == 0);
  }
}

void run_register_paired(std::span<std::int32_t> keys, const Launch& launch,
                         WorkRange r) {
  const std::size_t d = launch.steps[1].stride;  // smaller of the two strides
  const std::size_t span = launch.steps[0].merge_span;
  const std::size_t low_mask = d - 1;
  for (std::size_t t = r.begin; t < r.end; ++t) {
    // t with two zero bits inserted: the base of a 4-address group.
    const std::size_t base = ((t & ~low_mask) << 2) | (t & low_mask);
    register_paired_kernel(base, d, (base & span) == 0, keys);
  }
}

// One block of a shared launch: load the block once, run the covered steps
// back to back inside the local buffer, store once. Directions still come
// from global indices, so a merge span smaller than the block behaves exactly
// as in the unfused network.
void run_shared_block(std::int32_t* keys, const Launch& launch,
                      std::size_t block, std::vector<std::int32_t>& local) {
  const std::size_t capacity = launch.block_capacity;
  const std::size_t base = block * capacity;
  std::copy_n(keys + base, capacity, local.begin());
  for (const StepSpec& spec : launch.steps) {
    const std::size_t stride = spec.stride;
    for (std::size_t t = 0; t < capacity / 2; ++t) {
      const std::size_t li = pair_base(t, stride);
      compare_exchange(local[li], local[li + stride],
                       ((base + li) & spec.merge_span) == 0);
    }
  }
  std::copy_n(local.begin(), capacity, keys + base);
}

}  // namespace

const char* strategy_name(Strategy strategy) {
  switch (strategy) {
    case Strategy::baseline:
      return "baseline";
    case Strategy::shared:
      return "shared";
    case Strategy::fused:
      return "fused";
  }
  return "?";
}

LaunchPlan build_plan(const Schedule& schedule, Strategy strategy,
                      std::size_t block_capacity) {
  const unsigned k = schedule.k;
  if (k < 1 || k > kMaxLog2Length ||
      schedule.steps.size() != static_cast<std::size_t>(k) * (k + 1) / 2) {
    throw invalid_size_error("malformed schedule");
  }
  const std::size_t n = std::size_t{1} << k;
  if (block_capacity < 2 || block_capacity > n ||
      !std::has_single_bit(block_capacity)) {
    throw config_error("block capacity must be a power of two in [2, " +
                       std::to_string(n) + "], got " +
                       std::to_string(block_capacity));
  }
  const unsigned b = static_cast<unsigned>(std::bit_width(block_capacity)) - 1;

  LaunchPlan plan;
  plan.strategy = strategy;
  plan.k = k;
  plan.block_capacity = block_capacity;

  if (strategy == Strategy::baseline) {
    plan.launches.reserve(schedule.steps.size());
    for (const StepSpec& spec : schedule.steps) {
      plan.launches.push_back(
          Launch{.kind = LaunchKind::global_step, .steps = {spec}});
    }
    return plan;
  }

  std::size_t offset = 0;  // start of the current phase in the step list
  for (unsigned phase = 1; phase <= k; ++phase) {
    // Steps of this phase run s = phase..1; those with stride >
    // block_capacity/2 (step index > b) cannot stay inside one block.
    const unsigned globals = phase > b ? phase - b : 0;
    unsigned g = 0;
    while (g < globals) {
      if (strategy == Strategy::fused && globals - g >= 2) {
        plan.launches.push_back(
            Launch{.kind = LaunchKind::register_paired_step,
                   .steps = {schedule.steps[offset + g],
                             schedule.steps[offset + g + 1]}});
        g += 2;
      } else {
        plan.launches.push_back(Launch{.kind = LaunchKind::global_step,
                                       .steps = {schedule.steps[offset + g]}});
        g += 1;
      }
    }
    Launch fused_tail{.kind = LaunchKind::shared_fused_block,
                      .steps = {},
                      .block_capacity = block_capacity};
    fused_tail.steps.assign(schedule.steps.begin() + offset + globals,
                            schedule.steps.begin() + offset + phase);
    assert(!fused_tail.steps.empty());
    plan.launches.push_back(std::move(fused_tail));
    offset += phase;
  }
  return plan;
}

Counters account(const Launch& launch, std::size_t n) {
  Counters delta;
  delta.kernel_launches = 1;
  switch (launch.kind) {
    case LaunchKind::global_step:
      assert(launch.steps.size() == 1);
      delta.global_reads = n;
      delta.global_writes = n;
      delta.compare_exchanges = n / 2;
      break;
    case LaunchKind::shared_fused_block:
      assert(!launch.steps.empty());
      // One block-load and one block-store per block covers the array once;
      // traffic inside the block buffer is not global.
      delta.global_reads = n;
      delta.global_writes = n;
      delta.compare_exchanges = (n / 2) * launch.steps.size();
      break;
    case LaunchKind::register_paired_step:
      assert(launch.steps.size() == 2);
      delta.global_reads = n;
      delta.global_writes = n;
      delta.compare_exchanges = n;  // two steps' worth
      break;
  }
  return delta;
}

ExecutionResult execute(const LaunchPlan& plan, KeyArray keys,
                        unsigned workers) {
  if (workers < 1) {
    throw config_error("worker count must be >= 1");
  }
  const std::size_t n = std::size_t{1} << plan.k;
  if (keys.size() != n) {
    throw invalid_size_error("key array length " + std::to_string(keys.size()) +
                             " does not match plan for n = " +
                             std::to_string(n));
  }

  Counters total;
  WorkerPool pool(workers);
  std::int32_t* data = keys.data();
  std::span<std::int32_t> view(data, n);

  for (const Launch& launch : plan.launches) {
    switch (launch.kind) {
      case LaunchKind::global_step: {
        const std::size_t items = n / 2;
        pool.run([&](unsigned w) {
          run_global_step(data, launch.steps.front(),
                          work_slice(items, w, workers));
        });
        break;
      }
      case LaunchKind::register_paired_step: {
        const std::size_t items = n / 4;
        pool.run([&](unsigned w) {
          run_register_paired(view, launch, work_slice(items, w, workers));
        });
        break;
      }
      case LaunchKind::shared_fused_block: {
        const std::size_t blocks = n / launch.block_capacity;
        pool.run([&](unsigned w) {
          const WorkRange r = work_slice(blocks, w, workers);
          if (r.begin == r.end) {
            return;
          }
          std::vector<std::int32_t> local(launch.block_capacity);
          for (std::size_t m = r.begin; m < r.end; ++m) {
            run_shared_block(data, launch, m, local);
          }
        });
        break;
      }
    }
    total += account(launch, n);
  }
  return ExecutionResult{std::move(keys), total};
}

void register_paired_kernel(std::size_t base, std::size_t stride,
                            bool ascending, std::span<std::int32_t> keys) {
  const std::size_t d = stride;
  assert((base & (3 * d)) == 0);
  assert(base + 3 * d < keys.size());
  std::int32_t x0 = keys[base];
  std::int32_t x1 = keys[base + d];
  std::int32_t x2 = keys[base + 2 * d];
  std::int32_t x3 = keys[base + 3 * d];
  compare_exchange(x0, x2, ascending);  // stride-2d step
  compare_exchange(x1, x3, ascending);
  compare_exchange(x0, x1, ascending);  // stride-d step
  compare_exchange(x2, x3, ascending);
  keys[base] = x0;
  keys[base + d] = x1;
  keys[base + 2 * d] = x2;
  keys[base + 3 * d] = x3;
}

void sequential_bitonic_sort(std::span<std::int32_t> keys) {
  const std::size_t n = keys.size();
  if (n < 2 || !std::has_single_bit(n)) {
    throw invalid_size_error("length must be a power of two >= 2, got " +
                             std::to_string(n));
  }
  const unsigned k = static_cast<unsigned>(std::bit_width(n)) - 1;
  std::int32_t* a = keys.data();
  for (unsigned phase = 1; phase <= k; ++phase) {
    const std::size_t span = std::size_t{1} << phase;
    for (unsigned step = phase; step >= 1; --step) {
      const std::size_t stride = std::size_t{1} << (step - 1);
      for (std::size_t t = 0; t < n / 2; ++t) {
        const std::size_t i = pair_base(t, stride);
        compare_exchange(a[i], a[i + stride], (i & span) == 0);
      }
    }
  }
}

}  // namespace bitonic
