#include "bitonic/schedule.hpp"

#include <bit>
#include <string>

namespace bitonic {

namespace {

void check_k(unsigned k) {
  if (k < 1 || k > kMaxLog2Length) {
    throw invalid_size_error("log2 length k must be in [1, " +
                             std::to_string(kMaxLog2Length) + "], got " +
                             std::to_string(k));
  }
}

}  // namespace

Schedule generate_schedule(unsigned k) {
  check_k(k);
  Schedule sched;
  sched.k = k;
  sched.steps.reserve(static_cast<std::size_t>(k) * (k + 1) / 2);
  for (unsigned phase = 1; phase <= k; ++phase) {
    for (unsigned step = phase; step >= 1; --step) {
      sched.steps.push_back(StepSpec{
          .phase = phase,
          .step = step,
          .stride = std::size_t{1} << (step - 1),
          .merge_span = std::size_t{1} << phase,
      });
    }
  }
  return sched;
}

std::vector<ComparePair> step_pairs(const StepSpec& spec, std::size_t n) {
  if (n < 2 || !std::has_single_bit(n)) {
    throw invalid_size_error("array length must be a power of two >= 2, got " +
                             std::to_string(n));
  }
  const unsigned k = static_cast<unsigned>(std::bit_width(n)) - 1;
  const bool well_formed =
      spec.phase >= 1 && spec.phase <= k && spec.step >= 1 &&
      spec.step <= spec.phase &&
      spec.stride == (std::size_t{1} << (spec.step - 1)) &&
      spec.merge_span == (std::size_t{1} << spec.phase);
  if (!well_formed) {
    throw invalid_size_error("step does not belong to a schedule for n = " +
                             std::to_string(n));
  }

  std::vector<ComparePair> pairs;
  pairs.reserve(n / 2);
  const std::size_t stride = spec.stride;
  const std::size_t low_mask = stride - 1;
  // The t-th pair's lower index is t with a zero bit inserted at the stride
  // bit position; its partner sits one stride above.
  for (std::size_t t = 0; t < n / 2; ++t) {
    const std::size_t lo = ((t & ~low_mask) << 1) | (t & low_mask);
    pairs.push_back(ComparePair{
        .lo = lo,
        .hi = lo + stride,
        .ascending = (lo & spec.merge_span) == 0,
    });
  }
  return pairs;
}

NetworkCounts predicted_counts(unsigned k) {
  check_k(k);
  const std::uint64_t rounds = std::uint64_t{k} * (k + 1) / 2;
  return NetworkCounts{
      .rounds = rounds,
      .compare_exchanges = (std::uint64_t{1} << (k - 1)) * rounds,
  };
}

}  // namespace bitonic
