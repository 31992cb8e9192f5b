#include "bitonic/bench.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <limits>
#include <random>
#include <utility>

#include "json.hpp"

#include "bitonic/error.hpp"
#include "bitonic/verify.hpp"

namespace bitonic {

namespace {

using Clock = std::chrono::steady_clock;

constexpr BenchStrategy kAllStrategies[] = {
    BenchStrategy::cpu_quicksort, BenchStrategy::cpu_bitonic_sequential,
    BenchStrategy::baseline,      BenchStrategy::shared,
    BenchStrategy::fused,
};

bool is_engine_strategy(BenchStrategy s) {
  return s == BenchStrategy::baseline || s == BenchStrategy::shared ||
         s == BenchStrategy::fused;
}

Strategy to_engine_strategy(BenchStrategy s) {
  switch (s) {
    case BenchStrategy::baseline:
      return Strategy::baseline;
    case BenchStrategy::shared:
      return Strategy::shared;
    default:
      return Strategy::fused;
  }
}

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void check_sorted_output(std::span<const std::int32_t> output,
                         std::span<const std::int32_t> input, std::size_t size,
                         BenchStrategy strategy) {
  const VerificationReport report = validate(output, input);
  if (report.sorted_ok && report.permutation_ok) {
    return;
  }
  std::string msg = "validation failed: size=" + std::to_string(size) +
                    ", strategy=" + bench_strategy_name(strategy);
  if (!report.sorted_ok) {
    msg += ", first violation index=" +
           std::to_string(*report.first_violation_index);
  }
  if (!report.permutation_ok) {
    msg += ", output is not a permutation of the input";
  }
  throw bench_validation_error(msg);
}

StrategyResult run_cell(BenchStrategy strategy, const KeyArray& input,
                        const PaddedArray& padded, const BenchConfig& config) {
  StrategyResult out;
  double best = std::numeric_limits<double>::infinity();
  const unsigned k =
      padded.keys.empty()
          ? 0
          : static_cast<unsigned>(std::bit_width(padded.keys.size())) - 1;

  for (unsigned rep = 0; rep < config.repetitions; ++rep) {
    switch (strategy) {
      case BenchStrategy::cpu_quicksort: {
        KeyArray work = input;
        const auto t0 = Clock::now();
        reference_quicksort(work);
        best = std::min(best, elapsed_ms(t0));
        check_sorted_output(work, input, input.size(), strategy);
        break;
      }
      case BenchStrategy::cpu_bitonic_sequential: {
        KeyArray work = padded.keys;
        const auto t0 = Clock::now();
        sequential_bitonic_sort(work);
        best = std::min(best, elapsed_ms(t0));
        check_sorted_output({work.data(), padded.original_length}, input,
                            input.size(), strategy);
        break;
      }
      default: {
        KeyArray work = padded.keys;
        const auto t0 = Clock::now();
        const Schedule schedule = generate_schedule(k);
        const LaunchPlan plan = build_plan(schedule, to_engine_strategy(strategy),
                                           config.block_capacity);
        ExecutionResult result =
            execute(plan, std::move(work), config.workers);
        best = std::min(best, elapsed_ms(t0));
        check_sorted_output({result.keys.data(), padded.original_length},
                            input, input.size(), strategy);
        if (rep == 0) {
          out.counters = result.counters;
        }
        break;
      }
    }
  }
  out.time = BenchCell{best, best >= kMinReliableMs};
  return out;
}

// -- report formatting ------------------------------------------------------

std::string format_double(double value, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, value);
  return buf;
}

std::uint64_t gmem(const Counters& c) {
  return c.global_reads + c.global_writes;
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\r\n") == std::string::npos) {
    return raw;
  }
  std::string quoted = "\"";
  for (char ch : raw) {
    if (ch == '"') {
      quoted += '"';
    }
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

constexpr const char* kColumnNames[] = {
    "size",           "qs_ms",         "bitonic_seq_ms", "basic_ms",
    "semi_ms",        "optimized_ms",  "ratio",          "launches_basic",
    "launches_semi",  "launches_opt",  "gmem_basic",     "gmem_semi",
    "gmem_opt",
};
constexpr std::size_t kColumnCount = std::size(kColumnNames);

// One row's cells in csv column order; empty string = cell not measured.
std::array<std::string, kColumnCount> row_cells(const BenchRecord& rec,
                                                const char* ms_fmt,
                                                bool mark_unreliable) {
  std::array<std::string, kColumnCount> cells;
  cells[0] = std::to_string(rec.size);
  const BenchStrategy timed[] = {
      BenchStrategy::cpu_quicksort, BenchStrategy::cpu_bitonic_sequential,
      BenchStrategy::baseline, BenchStrategy::shared, BenchStrategy::fused};
  for (std::size_t i = 0; i < 5; ++i) {
    if (const auto& sr = rec.result(timed[i])) {
      cells[1 + i] = format_double(sr->time.ms, ms_fmt);
      if (mark_unreliable && !sr->time.reliable) {
        cells[1 + i] += '*';
      }
    }
  }
  if (rec.ratio) {
    cells[6] = format_double(*rec.ratio, mark_unreliable ? "%.1f" : "%.9g");
  }
  const BenchStrategy engine[] = {BenchStrategy::baseline,
                                  BenchStrategy::shared, BenchStrategy::fused};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& sr = rec.result(engine[i]);
    if (sr && sr->counters) {
      cells[7 + i] = std::to_string(sr->counters->kernel_launches);
      cells[10 + i] = std::to_string(gmem(*sr->counters));
    }
  }
  return cells;
}

std::string emit_table(const std::vector<BenchRecord>& records) {
  std::vector<std::array<std::string, kColumnCount>> rows;
  rows.reserve(records.size());
  bool any_unreliable = false;
  for (const BenchRecord& rec : records) {
    rows.push_back(row_cells(rec, "%.3f", /*mark_unreliable=*/true));
    for (const auto& sr : rec.results) {
      if (sr && !sr->time.reliable) {
        any_unreliable = true;
      }
    }
  }

  std::array<std::size_t, kColumnCount> width{};
  for (std::size_t c = 0; c < kColumnCount; ++c) {
    width[c] = std::strlen(kColumnNames[c]);
    for (const auto& row : rows) {
      width[c] = std::max(width[c], row[c].size());
    }
  }

  auto append_row = [&](std::string& out, auto&& cell_at) {
    for (std::size_t c = 0; c < kColumnCount; ++c) {
      const std::string cell = cell_at(c);
      out.append(width[c] - cell.size(), ' ');
      out += cell;
      out += c + 1 == kColumnCount ? "\n" : "  ";
    }
  };

  std::string out;
  append_row(out, [](std::size_t c) { return std::string(kColumnNames[c]); });
  for (const auto& row : rows) {
    append_row(out, [&](std::size_t c) { return row[c]; });
  }
  if (any_unreliable) {
    out += "(* timing below the " + format_double(kMinReliableMs, "%.3f") +
           " ms reliability threshold)\n";
  }
  return out;
}

std::string emit_csv(const std::vector<BenchRecord>& records) {
  std::string out;
  for (std::size_t c = 0; c < kColumnCount; ++c) {
    out += csv_field(kColumnNames[c]);
    out += c + 1 == kColumnCount ? "\n" : ",";
  }
  for (const BenchRecord& rec : records) {
    const auto cells = row_cells(rec, "%.9g", /*mark_unreliable=*/false);
    for (std::size_t c = 0; c < kColumnCount; ++c) {
      out += csv_field(cells[c]);
      out += c + 1 == kColumnCount ? "\n" : ",";
    }
  }
  return out;
}

std::string emit_json(const std::vector<BenchRecord>& records) {
  nlohmann::json doc = nlohmann::json::array();
  const std::pair<BenchStrategy, const char*> timed[] = {
      {BenchStrategy::cpu_quicksort, "qs"},
      {BenchStrategy::cpu_bitonic_sequential, "bitonic_seq"},
      {BenchStrategy::baseline, "basic"},
      {BenchStrategy::shared, "semi"},
      {BenchStrategy::fused, "optimized"},
  };
  for (const BenchRecord& rec : records) {
    nlohmann::json row;
    row["size"] = rec.size;
    for (const auto& [strategy, name] : timed) {
      const auto& sr = rec.result(strategy);
      if (!sr) {
        continue;
      }
      row[std::string(name) + "_ms"] = sr->time.ms;
      row["reliable"][name] = sr->time.reliable;
      if (sr->counters) {
        row["counters"][name] = {
            {"kernel_launches", sr->counters->kernel_launches},
            {"global_reads", sr->counters->global_reads},
            {"global_writes", sr->counters->global_writes},
            {"compare_exchanges", sr->counters->compare_exchanges},
        };
      }
    }
    if (rec.ratio) {
      row["ratio"] = *rec.ratio;
    }
    // Per-variant ratios alongside the headline (fastest-variant) one.
    const auto& qs = rec.result(BenchStrategy::cpu_quicksort);
    if (qs) {
      for (const auto& [strategy, name] : timed) {
        if (!is_engine_strategy(strategy)) {
          continue;
        }
        const auto& sr = rec.result(strategy);
        if (sr && sr->time.reliable) {
          row["ratios"][name] = qs->time.ms / sr->time.ms;
        }
      }
    }
    doc.push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

std::size_t parse_size_token(const std::string& token) {
  try {
    std::size_t pos = 0;
    std::size_t value = 0;
    if (token.rfind("2^", 0) == 0) {
      const unsigned long exponent = std::stoul(token.substr(2), &pos);
      pos += 2;
      if (exponent > kMaxLog2Length) {
        throw config_error("size exponent too large: " + token);
      }
      value = std::size_t{1} << exponent;
    } else {
      value = std::stoull(token, &pos);
    }
    if (pos != token.size()) {
      throw config_error("bad size token: '" + token + "'");
    }
    return value;
  } catch (const config_error&) {
    throw;
  } catch (const std::exception&) {
    throw config_error("bad size token: '" + token + "'");
  }
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> tokens;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    std::size_t lo = start;
    std::size_t hi = end;
    while (lo < hi && text[lo] == ' ') ++lo;
    while (hi > lo && text[hi - 1] == ' ') --hi;
    tokens.push_back(text.substr(lo, hi - lo));
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return tokens;
}

}  // namespace

const char* bench_strategy_name(BenchStrategy strategy) {
  switch (strategy) {
    case BenchStrategy::cpu_quicksort:
      return "cpu-quicksort";
    case BenchStrategy::cpu_bitonic_sequential:
      return "cpu-bitonic-sequential";
    case BenchStrategy::baseline:
      return "baseline";
    case BenchStrategy::shared:
      return "shared";
    case BenchStrategy::fused:
      return "fused";
  }
  return "?";
}

KeyArray generate_input(std::size_t size, std::uint64_t seed) {
  if (size < 1) {
    throw invalid_size_error("input size must be >= 1");
  }
  std::mt19937_64 rng(seed);
  KeyArray keys(size);
  for (std::int32_t& key : keys) {
    key = static_cast<std::int32_t>(static_cast<std::uint32_t>(rng()));
  }
  return keys;
}

PaddedArray pad_to_pow2(std::span<const std::int32_t> data) {
  if (data.empty()) {
    throw invalid_size_error("cannot pad an empty sequence");
  }
  const std::size_t padded_len = std::max<std::size_t>(2, std::bit_ceil(data.size()));
  PaddedArray out;
  out.original_length = data.size();
  out.keys.reserve(padded_len);
  out.keys.assign(data.begin(), data.end());
  out.keys.resize(padded_len, std::numeric_limits<std::int32_t>::max());
  return out;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.sizes.empty()) {
    throw config_error("no sizes configured");
  }
  for (std::size_t size : config.sizes) {
    if (size < 2) {
      throw config_error("sizes must be >= 2, got " + std::to_string(size));
    }
  }
  if (config.strategies.empty()) {
    throw config_error("no strategies configured");
  }
  if (config.repetitions < 1) {
    throw config_error("repetitions must be >= 1");
  }
  if (config.workers < 1) {
    throw config_error("workers must be >= 1");
  }

  std::vector<std::size_t> sizes = config.sizes;
  std::sort(sizes.begin(), sizes.end());

  const bool needs_padded =
      std::any_of(config.strategies.begin(), config.strategies.end(),
                  [](BenchStrategy s) {
                    return s != BenchStrategy::cpu_quicksort;
                  });

  std::vector<BenchRecord> records;
  records.reserve(sizes.size());
  for (std::size_t size : sizes) {
    const KeyArray input = generate_input(size, config.seed);
    PaddedArray padded;
    if (needs_padded) {
      padded = pad_to_pow2(input);
    }

    BenchRecord rec;
    rec.size = size;
    for (BenchStrategy strategy : kAllStrategies) {
      if (std::find(config.strategies.begin(), config.strategies.end(),
                    strategy) == config.strategies.end()) {
        continue;
      }
      rec.result(strategy) = run_cell(strategy, input, padded, config);
    }

    const auto& qs = rec.result(BenchStrategy::cpu_quicksort);
    double best = std::numeric_limits<double>::infinity();
    for (BenchStrategy strategy :
         {BenchStrategy::baseline, BenchStrategy::shared,
          BenchStrategy::fused}) {
      if (const auto& sr = rec.result(strategy)) {
        best = std::min(best, sr->time.ms);
      }
    }
    if (qs && best >= kMinReliableMs &&
        best != std::numeric_limits<double>::infinity()) {
      rec.ratio = qs->time.ms / best;
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::string emit_report(const std::vector<BenchRecord>& records,
                        OutputFormat format) {
  if (records.empty()) {
    throw config_error("no records to report");
  }
  switch (format) {
    case OutputFormat::table:
      return emit_table(records);
    case OutputFormat::csv:
      return emit_csv(records);
    case OutputFormat::json:
      return emit_json(records);
  }
  throw config_error("unknown output format");
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  for (const std::string& token : split_commas(text)) {
    if (token.empty()) {
      throw config_error("empty size token in '" + text + "'");
    }
    const std::size_t dots = token.find("..");
    if (dots == std::string::npos) {
      sizes.push_back(parse_size_token(token));
      continue;
    }
    const std::size_t lo = parse_size_token(token.substr(0, dots));
    const std::size_t hi = parse_size_token(token.substr(dots + 2));
    if (lo < 1 || lo > hi) {
      throw config_error("bad size range: '" + token + "'");
    }
    for (std::size_t v = lo;; v *= 2) {
      sizes.push_back(v);
      if (v > hi / 2) {
        break;
      }
    }
  }
  return sizes;
}

std::vector<BenchStrategy> parse_strategies(const std::string& text) {
  std::vector<BenchStrategy> strategies;
  for (const std::string& token : split_commas(text)) {
    if (token == "all") {
      return {kAllStrategies, kAllStrategies + kBenchStrategyCount};
    }
    bool found = false;
    for (BenchStrategy s : kAllStrategies) {
      if (token == bench_strategy_name(s)) {
        strategies.push_back(s);
        found = true;
        break;
      }
    }
    if (!found) {
      throw config_error(
          "unknown strategy '" + token +
          "' (expected cpu-quicksort, cpu-bitonic-sequential, baseline, "
          "shared, fused, or all)");
    }
  }
  return strategies;
}

OutputFormat parse_output_format(const std::string& text) {
  if (text == "table") return OutputFormat::table;
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw config_error("unknown format '" + text +
                     "' (expected table, csv, or json)");
}

}  // namespace bitonic
