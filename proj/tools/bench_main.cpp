// Benchmark harness: times quicksort and the bitonic engine variants over a
// size sweep of random 32-bit keys and reports a table/csv/json summary with
// launch and memory-traffic counters.

#include <bit>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "bitonic/bench.hpp"
#include "bitonic/error.hpp"
#include "bitonic/verify.hpp"

namespace {

unsigned resolve_workers(const std::string& text) {
  if (text == "auto") {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
  }
  try {
    std::size_t pos = 0;
    const unsigned long value = std::stoul(text, &pos);
    if (pos != text.size() || value < 1) {
      throw bitonic::config_error("bad worker count: '" + text + "'");
    }
    return static_cast<unsigned>(value);
  } catch (const bitonic::config_error&) {
    throw;
  } catch (const std::exception&) {
    throw bitonic::config_error("bad worker count: '" + text + "'");
  }
}

// Correctness pass over the configured sizes and strategies, no timing:
// network certification on binary inputs, then one validated sort per cell
// with the compare-exchange counter checked against its closed form.
int run_verify_only(const bitonic::BenchConfig& config) {
  bool all_ok = true;
  auto report = [&](const std::string& what, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    all_ok = all_ok && ok;
  };

  for (unsigned k = 1; k <= 4; ++k) {
    report("zero-one principle, k=" + std::to_string(k),
           bitonic::check_zero_one(k));
  }

  for (std::size_t size : config.sizes) {
    const bitonic::KeyArray input = bitonic::generate_input(size, config.seed);
    const bitonic::PaddedArray padded = bitonic::pad_to_pow2(input);
    const unsigned k =
        static_cast<unsigned>(std::bit_width(padded.keys.size())) - 1;

    for (bitonic::BenchStrategy strategy : config.strategies) {
      const std::string label = "size=" + std::to_string(size) + " strategy=" +
                                bitonic::bench_strategy_name(strategy);
      switch (strategy) {
        case bitonic::BenchStrategy::cpu_quicksort: {
          bitonic::KeyArray work = input;
          bitonic::reference_quicksort(work);
          const auto rep = bitonic::validate(work, input);
          report(label, rep.sorted_ok && rep.permutation_ok);
          break;
        }
        case bitonic::BenchStrategy::cpu_bitonic_sequential: {
          bitonic::KeyArray work = padded.keys;
          bitonic::sequential_bitonic_sort(work);
          const auto rep = bitonic::validate(
              {work.data(), padded.original_length}, input);
          report(label, rep.sorted_ok && rep.permutation_ok);
          break;
        }
        default: {
          const bitonic::Strategy engine_strategy =
              strategy == bitonic::BenchStrategy::baseline
                  ? bitonic::Strategy::baseline
                  : (strategy == bitonic::BenchStrategy::shared
                         ? bitonic::Strategy::shared
                         : bitonic::Strategy::fused);
          const auto plan =
              bitonic::build_plan(bitonic::generate_schedule(k),
                                  engine_strategy, config.block_capacity);
          auto result =
              bitonic::execute(plan, padded.keys, config.workers);
          const auto rep = bitonic::validate(
              {result.keys.data(), padded.original_length}, input);
          const auto expected = bitonic::predicted_counts(k);
          const bool counters_ok =
              result.counters.compare_exchanges == expected.compare_exchanges;
          report(label + " (compare-exchanges=" +
                     std::to_string(result.counters.compare_exchanges) + ")",
                 rep.sorted_ok && rep.permutation_ok && counters_ok);
          break;
        }
      }
    }
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bitonic sorting-network benchmark"};

  std::string sizes_text = "2^17..2^24";
  std::string strategies_text = "all";
  std::string workers_text = "auto";
  std::string format_text = "table";
  std::string out_path;
  bool verify_only = false;
  bitonic::BenchConfig config;

  app.add_option("--sizes", sizes_text,
                 "comma list of sizes; each a decimal, 2^E, or a doubling "
                 "range like 2^17..2^24")
      ->capture_default_str();
  app.add_option("--strategies", strategies_text,
                 "comma list of cpu-quicksort, cpu-bitonic-sequential, "
                 "baseline, shared, fused; or all")
      ->capture_default_str();
  app.add_option("--block-capacity", config.block_capacity,
                 "elements per block buffer (power of two)")
      ->capture_default_str();
  app.add_option("--workers", workers_text, "worker count, or auto")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "input generator seed")
      ->capture_default_str();
  app.add_option("--reps", config.repetitions,
                 "repetitions per cell; minimum is reported")
      ->capture_default_str();
  app.add_option("--format", format_text, "table, csv, or json")
      ->capture_default_str();
  app.add_flag("--verify-only", verify_only,
               "run the correctness suite, no timing");
  app.add_option("--out", out_path, "write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    config.sizes = bitonic::parse_sizes(sizes_text);
    config.strategies = bitonic::parse_strategies(strategies_text);
    config.workers = resolve_workers(workers_text);
    config.output_format = bitonic::parse_output_format(format_text);

    if (verify_only) {
      return run_verify_only(config);
    }

    const auto records = bitonic::run_bench(config);
    const std::string report =
        bitonic::emit_report(records, config.output_format);
    if (out_path.empty()) {
      std::cout << report;
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "cannot open output file: " << out_path << "\n";
        return 1;
      }
      out << report;
    }
    return 0;
  } catch (const bitonic::config_error& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
