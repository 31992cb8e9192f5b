#ifndef BITONIC_VERIFY_HPP
#define BITONIC_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

namespace bitonic {

struct VerificationReport {
  bool sorted_ok = false;
  bool permutation_ok = false;
  // Present iff !sorted_ok: keys[index] > keys[index + 1].
  std::optional<std::size_t> first_violation_index;
};

// In-place ascending quicksort over any length: median-of-three pivot,
// insertion sort below 17 elements, heapsort fallback once recursion depth
// exceeds 2*log2(n). The CPU baseline every bitonic variant is compared
// against.
void reference_quicksort(std::span<std::int32_t> data);

// Certifies the network for arrays of length 2^k by driving binary inputs
// through the full schedule's compare-exchange sequence: exhaustively for
// k <= 4, by seeded random sampling for k = 5 and 6. By the 0-1 principle a
// pass means the network sorts every input of that length. Throws
// invalid_size_error for k outside [1, 6].
bool check_zero_one(unsigned k);

// Checks output for sortedness and that it is a multiset permutation of
// input.
VerificationReport validate(std::span<const std::int32_t> output,
                            std::span<const std::int32_t> input);

}  // namespace bitonic

#endif  // BITONIC_VERIFY_HPP
