#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "levi/backends.hpp"

namespace levi {

/// What to time: full n^n sweeps for every (backend, n) pairing.
struct BenchConfig {
  int n_min = 2;
  int n_max = 5;
  std::vector<BackendId> backends;
  int repetitions = 3;     // >= 1, medians are taken over these
  int warmup_sweeps = 1;   // >= 0, discarded
  int jobs = 1;            // > 1 times the partitioned sweep and labels records
  std::uint64_t spot_check_seed = 0;
};

/// One timing measurement.
struct BenchRecord {
  std::string backend;     // backend name, "[jobs=K]" appended in parallel mode
  int n = 0;
  std::uint64_t tuples_evaluated = 0;  // n^n * repetitions
  double median_ns_per_eval = 0.0;
  double total_ms = 0.0;               // timed sweeps only, warmup excluded
};

/// Validates the config (every backend valid for every n, repetitions >= 1),
/// spot-checks each pairing against the oracle on 100 seeded random tuples
/// before timing it (evaluation_error on mismatch), then measures. Timings
/// are single-threaded unless cfg.jobs > 1.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

/// CSV with header: backend,n,tuples,median_ns_per_eval,total_ms
void write_csv(std::ostream& out, std::span<const BenchRecord> records);

/// JSON lines with the same fields.
void write_jsonl(std::ostream& out, std::span<const BenchRecord> records);

}  // namespace levi
