#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "bitonic/schedule.hpp"
#include "oracles.hpp"

using namespace bitonic;

TEST_CASE("schedule for k=3 has phases of 1, 2, 3 steps") {
  const Schedule sched = generate_schedule(3);
  REQUIRE(sched.steps.size() == 6);
  unsigned per_phase[4] = {};
  for (const StepSpec& spec : sched.steps) {
    REQUIRE(spec.phase >= 1);
    REQUIRE(spec.phase <= 3);
    ++per_phase[spec.phase];
  }
  CHECK(per_phase[1] == 1);
  CHECK(per_phase[2] == 2);
  CHECK(per_phase[3] == 3);
}

TEST_CASE("smallest schedule is a single stride-1 step") {
  const Schedule sched = generate_schedule(1);
  REQUIRE(sched.steps.size() == 1);
  CHECK(sched.steps[0].phase == 1);
  CHECK(sched.steps[0].step == 1);
  CHECK(sched.steps[0].stride == 1);
  CHECK(sched.steps[0].merge_span == 2);
}

TEST_CASE("k=4 schedule: strides descend within each phase") {
  // Expanded by hand: phase p runs steps p..1 with strides 2^(p-1)..1.
  const Schedule sched = generate_schedule(4);
  REQUIRE(sched.steps.size() == 10);
  const std::vector<std::size_t> expected_strides = {1, 2, 1, 4, 2,
                                                     1, 8, 4, 2, 1};
  for (std::size_t i = 0; i < sched.steps.size(); ++i) {
    CHECK(sched.steps[i].stride == expected_strides[i]);
  }
  // Phase 4 specifically: steps 4,3,2,1 mapping to strides 8,4,2,1.
  CHECK(sched.steps[6].phase == 4);
  CHECK(sched.steps[6].merge_span == 16);
  CHECK(sched.steps[9].phase == 4);
  // Within each phase, step indices strictly decrease.
  for (std::size_t i = 1; i < sched.steps.size(); ++i) {
    if (sched.steps[i].phase == sched.steps[i - 1].phase) {
      CHECK(sched.steps[i].step == sched.steps[i - 1].step - 1);
    }
  }
}

TEST_CASE("schedule rejects k outside the supported range") {
  CHECK_THROWS_AS(generate_schedule(0), invalid_size_error);
  CHECK_THROWS_AS(generate_schedule(kMaxLog2Length + 1), invalid_size_error);
  CHECK_NOTHROW(generate_schedule(kMaxLog2Length));
}

TEST_CASE("step_pairs: phase 3 step 2 of n=8 pairs even/odd lanes, all ascending") {
  const StepSpec spec{.phase = 3, .step = 2, .stride = 2, .merge_span = 8};
  const auto pairs = step_pairs(spec, 8);
  REQUIRE(pairs.size() == 4);
  const std::size_t expected_lo[] = {0, 1, 4, 5};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(pairs[i].lo == expected_lo[i]);
    CHECK(pairs[i].hi == expected_lo[i] + 2);
    CHECK(pairs[i].ascending);
  }
}

TEST_CASE("step_pairs: n=2 yields the single ascending pair") {
  const StepSpec spec{.phase = 1, .step = 1, .stride = 1, .merge_span = 2};
  const auto pairs = step_pairs(spec, 2);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].lo == 0);
  CHECK(pairs[0].hi == 1);
  CHECK(pairs[0].ascending);
}

TEST_CASE("step_pairs: phase 1 of n=8 alternates direction per pair") {
  const StepSpec spec{.phase = 1, .step = 1, .stride = 1, .merge_span = 2};
  const auto pairs = step_pairs(spec, 8);
  REQUIRE(pairs.size() == 4);
  const bool expected_asc[] = {true, false, true, false};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(pairs[i].lo == 2 * i);
    CHECK(pairs[i].hi == 2 * i + 1);
    CHECK(pairs[i].ascending == expected_asc[i]);
  }
}

TEST_CASE("step_pairs rejects foreign steps and bad lengths") {
  const StepSpec spec{.phase = 3, .step = 2, .stride = 2, .merge_span = 8};
  CHECK_THROWS_AS(step_pairs(spec, 6), invalid_size_error);
  CHECK_THROWS_AS(step_pairs(spec, 4), invalid_size_error);  // phase 3 > k=2
  const StepSpec broken{.phase = 2, .step = 2, .stride = 1, .merge_span = 4};
  CHECK_THROWS_AS(step_pairs(broken, 8), invalid_size_error);
}

TEST_CASE("predicted_counts closed forms") {
  CHECK(predicted_counts(3).rounds == 6);
  CHECK(predicted_counts(3).compare_exchanges == 24);
  CHECK(predicted_counts(1).rounds == 1);
  CHECK(predicted_counts(1).compare_exchanges == 1);
  CHECK(predicted_counts(10).rounds == 55);
  CHECK(predicted_counts(10).compare_exchanges == 28160);
  CHECK_THROWS_AS(predicted_counts(0), invalid_size_error);
}

TEST_CASE("schedule length equals predicted rounds") {
  for (unsigned k = 1; k <= 12; ++k) {
    CHECK(generate_schedule(k).steps.size() == predicted_counts(k).rounds);
  }
}

TEST_CASE("every step's pairs partition the index space") {
  for (unsigned k = 1; k <= 6; ++k) {
    const std::size_t n = std::size_t{1} << k;
    for (const StepSpec& spec : generate_schedule(k).steps) {
      const auto pairs = step_pairs(spec, n);
      REQUIRE(pairs.size() == n / 2);
      std::vector<int> hits(n, 0);
      for (const ComparePair& pair : pairs) {
        CHECK(pair.lo < pair.hi);
        CHECK(pair.hi == pair.lo + spec.stride);
        ++hits[pair.lo];
        ++hits[pair.hi];
      }
      CHECK(std::all_of(hits.begin(), hits.end(),
                        [](int h) { return h == 1; }));
    }
  }
}

TEST_CASE("summed pair counts equal the compare-exchange closed form") {
  for (unsigned k = 1; k <= 12; ++k) {
    const std::uint64_t n = std::uint64_t{1} << k;
    const Schedule sched = generate_schedule(k);
    CHECK(sched.steps.size() * (n / 2) ==
          predicted_counts(k).compare_exchanges);
  }
}

TEST_CASE("0-1 principle: the network sorts every binary input") {
  for (unsigned k = 1; k <= 4; ++k) {
    const std::size_t n = std::size_t{1} << k;
    const Schedule sched = generate_schedule(k);
    bool all_sorted = true;
    for (std::uint64_t word = 0; word < (std::uint64_t{1} << n); ++word) {
      std::vector<std::int32_t> keys(n);
      for (std::size_t i = 0; i < n; ++i) {
        keys[i] = static_cast<std::int32_t>((word >> i) & 1);
      }
      oracles::apply_schedule(keys, sched);
      all_sorted = all_sorted && std::is_sorted(keys.begin(), keys.end());
    }
    CHECK(all_sorted);
  }
}

TEST_CASE("phase prefixes leave alternating monotone blocks") {
  for (unsigned k = 2; k <= 8; ++k) {
    const std::size_t n = std::size_t{1} << k;
    std::vector<std::int32_t> keys = oracles::random_keys(n, 90 + k);
    const Schedule sched = generate_schedule(k);
    std::size_t next = 0;
    for (unsigned p = 1; p <= k; ++p) {
      for (unsigned s = 0; s < p; ++s) {
        oracles::apply_step(keys, sched.steps[next++]);
      }
      const std::size_t block = std::size_t{1} << p;
      for (std::size_t m = 0; m < n / block; ++m) {
        const auto begin = keys.begin() + m * block;
        const auto end = begin + block;
        if (m % 2 == 0) {
          CHECK(std::is_sorted(begin, end));
        } else {
          CHECK(std::is_sorted(begin, end, std::greater<>()));
        }
      }
    }
    CHECK(std::is_sorted(keys.begin(), keys.end()));
  }
}
