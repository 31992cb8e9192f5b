// Test-side oracles, kept independent of the engine's execution path: steps
// are applied one compare-exchange at a time straight from step_pairs.
#ifndef BITONIC_TESTS_ORACLES_HPP
#define BITONIC_TESTS_ORACLES_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "bitonic/schedule.hpp"

namespace oracles {

inline void apply_step(std::vector<std::int32_t>& keys,
                       const bitonic::StepSpec& spec) {
  for (const bitonic::ComparePair& pair :
       bitonic::step_pairs(spec, keys.size())) {
    std::int32_t& lo = keys[pair.lo];
    std::int32_t& hi = keys[pair.hi];
    if (pair.ascending ? (lo > hi) : (lo < hi)) {
      std::swap(lo, hi);
    }
  }
}

inline void apply_schedule(std::vector<std::int32_t>& keys,
                           const bitonic::Schedule& schedule) {
  for (const bitonic::StepSpec& spec : schedule.steps) {
    apply_step(keys, spec);
  }
}

inline std::vector<std::int32_t> random_keys(std::size_t n,
                                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::int32_t> keys(n);
  for (auto& key : keys) {
    key = static_cast<std::int32_t>(static_cast<std::uint32_t>(rng()));
  }
  return keys;
}

}  // namespace oracles

#endif  // BITONIC_TESTS_ORACLES_HPP
