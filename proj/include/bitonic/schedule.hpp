#ifndef BITONIC_SCHEDULE_HPP
#define BITONIC_SCHEDULE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bitonic/error.hpp"

namespace bitonic {

// Largest supported log2(array length). 2^48 elements is far beyond anything
// allocatable and keeps every derived count (rounds, compare-exchanges,
// element traffic) comfortably inside 64 bits.
inline constexpr unsigned kMaxLog2Length = 48;

// One parallel round of the network. Phase p of a k-phase network runs its
// steps in the order s = p, p-1, ..., 1; step s compare-exchanges elements
// that are `stride` apart, and the comparison direction of a pair is decided
// by the merge_span bit of its lower index.
struct StepSpec {
  unsigned phase = 0;           // 1..k
  unsigned step = 0;            // 1..phase
  std::size_t stride = 0;       // 2^(step-1)
  std::size_t merge_span = 0;   // 2^phase
};

// The full phase/step decomposition for arrays of length 2^k. Phase p holds
// exactly p steps, so steps.size() == k(k+1)/2.
struct Schedule {
  unsigned k = 0;
  std::vector<StepSpec> steps;
};

// One compare-exchange wire: leave (keys[lo], keys[hi]) in ascending or
// descending order. lo < hi always.
struct ComparePair {
  std::size_t lo = 0;
  std::size_t hi = 0;
  bool ascending = true;
};

// Closed-form totals for a full run over 2^k keys.
struct NetworkCounts {
  std::uint64_t rounds = 0;             // k(k+1)/2
  std::uint64_t compare_exchanges = 0;  // 2^k * k(k+1)/4
};

// Builds the complete step list for arrays of length 2^k.
// Throws invalid_size_error unless 1 <= k <= kMaxLog2Length.
Schedule generate_schedule(unsigned k);

// Expands one step into its n/2 compare-exchange pairs, in increasing order
// of the lower index. Every index in [0, n) appears in exactly one pair.
// Throws invalid_size_error if n is not a power of two >= 2 or the step does
// not belong to a schedule for that n.
std::vector<ComparePair> step_pairs(const StepSpec& spec, std::size_t n);

// Round and compare-exchange totals for 2^k keys without materializing a
// schedule. Same domain as generate_schedule.
NetworkCounts predicted_counts(unsigned k);

}  // namespace bitonic

#endif  // BITONIC_SCHEDULE_HPP
