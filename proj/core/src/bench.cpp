#include "levi/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "levi/enumerate.hpp"

namespace levi {

namespace {

// Full sweep; returns the outcome counts so the work cannot be elided.
std::uint64_t sweep_once(const BackendEvaluator& evaluate, int n) {
  std::vector<int> tuple(static_cast<std::size_t>(n), 1);
  const std::uint64_t total = tuple_space_size(n);
  std::uint64_t nonzero = 0;
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    if (evaluate(tuple) != Sign::zero) ++nonzero;
    int pos = n - 1;
    while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == n) {
      tuple[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos >= 0) ++tuple[static_cast<std::size_t>(pos)];
  }
  return nonzero;
}

void spot_check(const BackendId& backend, int n, std::uint64_t seed) {
  const BackendEvaluator evaluate(backend, n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, n);
  std::vector<int> tuple(static_cast<std::size_t>(n));
  for (int trial = 0; trial < 100; ++trial) {
    for (auto& v : tuple) v = pick(rng);
    const Sign got = evaluate(tuple);
    const Sign want = epsilon_oracle(tuple);
    if (got != want) {
      std::ostringstream os;
      os << "spot check failed for " << backend.name() << " at n=" << n << ": got "
         << to_string(got) << ", oracle says " << to_string(want);
      throw evaluation_error(os.str(), static_cast<double>(to_int(got)));
    }
  }
}

volatile std::uint64_t bench_sink = 0;

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  if (cfg.n_min < 2 || cfg.n_max < cfg.n_min) {
    throw std::domain_error("bench dimension range must satisfy 2 <= n_min <= n_max");
  }
  if (cfg.backends.empty()) {
    throw std::domain_error("bench needs at least one backend");
  }
  if (cfg.repetitions < 1) {
    throw std::domain_error("bench repetitions must be >= 1");
  }
  if (cfg.warmup_sweeps < 0) {
    throw std::domain_error("bench warmup sweep count must be >= 0");
  }
  // Every backend must be usable at every dimension in the range.
  for (const auto& backend : cfg.backends) {
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
      BackendEvaluator probe(backend, n);  // throws std::domain_error on a bad pairing
      (void)probe;
    }
  }

  const int jobs = std::max(1, cfg.jobs);
  std::vector<BenchRecord> records;
  records.reserve(cfg.backends.size() *
                  static_cast<std::size_t>(cfg.n_max - cfg.n_min + 1));

  for (std::size_t b = 0; b < cfg.backends.size(); ++b) {
    const BackendId& backend = cfg.backends[b];
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
      spot_check(backend, n,
                 cfg.spot_check_seed ^ (static_cast<std::uint64_t>(n) * 0x9e3779b97f4a7c15ULL) ^
                     b);

      const std::uint64_t per_sweep = tuple_space_size(n);
      const BackendEvaluator evaluate(backend, n);

      const auto timed_sweep = [&]() -> double {
        const auto start = std::chrono::steady_clock::now();
        if (jobs > 1) {
          bench_sink = bench_sink + enumerate_all(n, backend, false, {}, jobs).total();
        } else {
          bench_sink = bench_sink + sweep_once(evaluate, n);
        }
        const auto stop = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::nano>(stop - start).count();
      };

      for (int w = 0; w < cfg.warmup_sweeps; ++w) timed_sweep();

      std::vector<double> sweep_ns(static_cast<std::size_t>(cfg.repetitions));
      for (auto& ns : sweep_ns) ns = timed_sweep();

      std::vector<double> sorted = sweep_ns;
      std::sort(sorted.begin(), sorted.end());
      const std::size_t mid = sorted.size() / 2;
      const double median_sweep_ns =
          (sorted.size() % 2 == 1) ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);

      double total_ns = 0.0;
      for (double ns : sweep_ns) total_ns += ns;

      BenchRecord record;
      record.backend = backend.name();
      if (jobs > 1) record.backend += "[jobs=" + std::to_string(jobs) + "]";
      record.n = n;
      record.tuples_evaluated = per_sweep * static_cast<std::uint64_t>(cfg.repetitions);
      record.median_ns_per_eval = median_sweep_ns / static_cast<double>(per_sweep);
      record.total_ms = total_ns / 1e6;
      records.push_back(std::move(record));
    }
  }
  return records;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "backend,n,tuples,median_ns_per_eval,total_ms\n";
  for (const auto& r : records) {
    out << r.backend << ',' << r.n << ',' << r.tuples_evaluated << ',' << std::setprecision(10)
        << r.median_ns_per_eval << ',' << r.total_ms << '\n';
  }
}

void write_jsonl(std::ostream& out, std::span<const BenchRecord> records) {
  for (const auto& r : records) {
    out << "{\"backend\":\"" << r.backend << "\",\"n\":" << r.n
        << ",\"tuples\":" << r.tuples_evaluated << ",\"median_ns_per_eval\":"
        << std::setprecision(10) << r.median_ns_per_eval << ",\"total_ms\":" << r.total_ms
        << "}\n";
  }
}

}  // namespace levi
