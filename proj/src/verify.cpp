#include "bitonic/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bitonic/error.hpp"
#include "bitonic/schedule.hpp"

namespace bitonic {

namespace {

constexpr std::ptrdiff_t kInsertionCutoff = 16;

void insertion_sort(std::int32_t* first, std::int32_t* last) {
  for (std::int32_t* it = first + 1; it < last; ++it) {
    const std::int32_t value = *it;
    std::int32_t* pos = it;
    while (pos > first && pos[-1] > value) {
      pos[0] = pos[-1];
      --pos;
    }
    *pos = value;
  }
}

std::int32_t median_of_three(std::int32_t a, std::int32_t b, std::int32_t c) {
  if (a < b) {
    if (b < c) return b;
    return a < c ? c : a;
  }
  if (a < c) return a;
  return b < c ? c : b;
}

void quicksort_rec(std::int32_t* first, std::int32_t* last, int depth_budget) {
  while (last - first > kInsertionCutoff) {
    if (depth_budget-- == 0) {
      std::make_heap(first, last);
      std::sort_heap(first, last);
      return;
    }
    const std::int32_t pivot =
        median_of_three(*first, first[(last - first) / 2], last[-1]);
    // Hoare partition around the pivot value.
    std::int32_t* lo = first - 1;
    std::int32_t* hi = last;
    for (;;) {
      do {
        ++lo;
      } while (*lo < pivot);
      do {
        --hi;
      } while (*hi > pivot);
      if (lo >= hi) {
        break;
      }
      std::swap(*lo, *hi);
    }
    // Recurse into the smaller side, iterate on the larger one.
    std::int32_t* mid = hi + 1;
    if (mid - first < last - mid) {
      quicksort_rec(first, mid, depth_budget);
      first = mid;
    } else {
      quicksort_rec(mid, last, depth_budget);
      last = mid;
    }
  }
  insertion_sort(first, last);
}

// Applies one compare-exchange to a packed binary vector: bit i is the key at
// index i, so an ascending pair leaves (AND, OR) at (lo, hi).
inline std::uint64_t apply_binary_pair(std::uint64_t word,
                                       const ComparePair& pair) {
  const std::uint64_t lo_bit = (word >> pair.lo) & 1;
  const std::uint64_t hi_bit = (word >> pair.hi) & 1;
  std::uint64_t min_bit = lo_bit & hi_bit;
  std::uint64_t max_bit = lo_bit | hi_bit;
  if (!pair.ascending) {
    std::swap(min_bit, max_bit);
  }
  word &= ~((std::uint64_t{1} << pair.lo) | (std::uint64_t{1} << pair.hi));
  word |= (min_bit << pair.lo) | (max_bit << pair.hi);
  return word;
}

bool binary_input_sorts(std::uint64_t word, unsigned n,
                        const std::vector<ComparePair>& pairs) {
  for (const ComparePair& pair : pairs) {
    word = apply_binary_pair(word, pair);
  }
  // Ascending-sorted means all ones sit at the top indices.
  const unsigned ones = static_cast<unsigned>(std::popcount(word));
  const std::uint64_t expected =
      ones == 0 ? 0
                : (ones >= 64 ? ~std::uint64_t{0}
                              : ((std::uint64_t{1} << ones) - 1) << (n - ones));
  return word == expected;
}

}  // namespace

void reference_quicksort(std::span<std::int32_t> data) {
  if (data.size() < 2) {
    return;
  }
  const int depth_budget =
      2 * (static_cast<int>(std::bit_width(data.size())) - 1);
  quicksort_rec(data.data(), data.data() + data.size(), depth_budget);
}

bool check_zero_one(unsigned k) {
  if (k < 1 || k > 6) {
    throw invalid_size_error("zero-one check supports k in [1, 6], got " +
                             std::to_string(k));
  }
  const unsigned n = 1u << k;
  const Schedule schedule = generate_schedule(k);
  std::vector<ComparePair> pairs;
  for (const StepSpec& spec : schedule.steps) {
    const auto step = step_pairs(spec, n);
    pairs.insert(pairs.end(), step.begin(), step.end());
  }

  if (k <= 4) {
    // n <= 16: every binary vector fits an exhaustive sweep.
    const std::uint64_t count = std::uint64_t{1} << n;
    for (std::uint64_t word = 0; word < count; ++word) {
      if (!binary_input_sorts(word, n, pairs)) {
        return false;
      }
    }
    return true;
  }

  // n = 32 or 64: 2^n is not enumerable, sample the space instead.
  std::mt19937_64 rng(0x0b17'0000u + k);
  const std::uint64_t mask =
      n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  constexpr int kSamples = 1 << 17;
  for (int i = 0; i < kSamples; ++i) {
    if (!binary_input_sorts(rng() & mask, n, pairs)) {
      return false;
    }
  }
  return true;
}

VerificationReport validate(std::span<const std::int32_t> output,
                            std::span<const std::int32_t> input) {
  VerificationReport report;
  report.sorted_ok = true;
  for (std::size_t i = 0; i + 1 < output.size(); ++i) {
    if (output[i] > output[i + 1]) {
      report.sorted_ok = false;
      report.first_violation_index = i;
      break;
    }
  }
  std::vector<std::int32_t> lhs(output.begin(), output.end());
  std::vector<std::int32_t> rhs(input.begin(), input.end());
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  report.permutation_ok = lhs == rhs;
  return report;
}

}  // namespace bitonic
