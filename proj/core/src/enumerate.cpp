#include "levi/enumerate.hpp"

#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace levi {

namespace {

std::string render_tuple(std::span<const int> tuple) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) os << ',';
    os << tuple[i];
  }
  os << ')';
  return os.str();
}

// Lexicographic rank -> tuple, most significant position first.
void decode_rank(std::uint64_t rank, int n, std::vector<int>& tuple) {
  for (int pos = n - 1; pos >= 0; --pos) {
    tuple[static_cast<std::size_t>(pos)] = static_cast<int>(rank % static_cast<std::uint64_t>(n)) + 1;
    rank /= static_cast<std::uint64_t>(n);
  }
}

// Advances to the next tuple in lexicographic order.
void advance(std::vector<int>& tuple, int n) {
  int pos = static_cast<int>(tuple.size()) - 1;
  while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == n) {
    tuple[static_cast<std::size_t>(pos)] = 1;
    --pos;
  }
  if (pos >= 0) ++tuple[static_cast<std::size_t>(pos)];
}

struct WorkerResult {
  std::uint64_t plus = 0;
  std::uint64_t minus = 0;
  std::uint64_t zero = 0;
  std::vector<NonzeroRecord> nonzero;
  std::vector<Disagreement> disagreements;
  std::exception_ptr failure;
};

// Sweeps ranks [first, last). reference is non-null in verify mode.
void sweep_range(const BackendId& backend, const BackendId* reference, int n,
                 std::uint64_t first, std::uint64_t last, bool list_nonzero,
                 WorkerResult& out) {
  try {
    const BackendEvaluator evaluate(backend, n);
    std::optional<BackendEvaluator> expected;
    if (reference) expected.emplace(*reference, n);

    std::vector<int> tuple(static_cast<std::size_t>(n));
    decode_rank(first, n, tuple);
    for (std::uint64_t rank = first; rank < last; ++rank) {
      Sign sign;
      try {
        sign = evaluate(tuple);
      } catch (const evaluation_error& e) {
        throw evaluation_error(std::string(e.what()) + " while evaluating tuple " +
                                   render_tuple(tuple),
                               e.raw_value());
      }
      switch (sign) {
        case Sign::plus: ++out.plus; break;
        case Sign::minus: ++out.minus; break;
        case Sign::zero: ++out.zero; break;
      }
      if (list_nonzero && sign != Sign::zero) {
        out.nonzero.push_back(NonzeroRecord{tuple, sign});
      }
      if (expected) {
        const Sign want = (*expected)(tuple);
        if (want != sign) {
          out.disagreements.push_back(Disagreement{tuple, sign, want});
        }
      }
      advance(tuple, n);
    }
  } catch (...) {
    out.failure = std::current_exception();
  }
}

EnumerationReport run_sweep(int n, const BackendId& backend, const BackendId* reference,
                            bool list_nonzero, const NonzeroSink& sink, int jobs) {
  if (!backend.valid_for(n)) {
    throw std::domain_error("backend " + backend.name() + " is not valid for dimension " +
                            std::to_string(n));
  }
  const std::uint64_t total = tuple_space_size(n);
  if (jobs < 1) jobs = 1;
  const auto worker_count =
      static_cast<std::uint64_t>(jobs) < total ? static_cast<std::uint64_t>(jobs) : total;

  std::vector<WorkerResult> results(worker_count);
  if (worker_count <= 1) {
    sweep_range(backend, reference, n, 0, total, list_nonzero, results[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(worker_count);
    for (std::uint64_t w = 0; w < worker_count; ++w) {
      const std::uint64_t first = total / worker_count * w + std::min(w, total % worker_count);
      const std::uint64_t size = total / worker_count + (w < total % worker_count ? 1 : 0);
      threads.emplace_back(sweep_range, std::cref(backend), reference, n, first, first + size,
                           list_nonzero, std::ref(results[w]));
    }
    for (auto& t : threads) t.join();
  }

  EnumerationReport report;
  report.n = n;
  report.backend = backend;
  for (auto& r : results) {
    if (r.failure) std::rethrow_exception(r.failure);
    report.count_plus += r.plus;
    report.count_minus += r.minus;
    report.count_zero += r.zero;
    for (auto& d : r.disagreements) report.disagreements.push_back(std::move(d));
    if (list_nonzero) {
      for (auto& rec : r.nonzero) {
        if (sink) {
          sink(rec.indices, rec.sign);
        } else {
          report.nonzero.push_back(std::move(rec));
        }
      }
    }
  }
  return report;
}

}  // namespace

std::uint64_t tuple_space_size(int n) {
  if (n < 2) {
    throw std::domain_error("tuple space needs dimension >= 2, got " + std::to_string(n));
  }
  if (n > 15) {
    throw std::overflow_error("tuple space size " + std::to_string(n) + "^" + std::to_string(n) +
                              " exceeds 64 bits");
  }
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(n);
  return total;
}

EnumerationReport enumerate_all(int n, const BackendId& backend, bool list_nonzero,
                                const NonzeroSink& sink, int jobs) {
  return run_sweep(n, backend, nullptr, list_nonzero, sink, jobs);
}

EnumerationReport verify_backend(int n, const BackendId& backend, int jobs) {
  const BackendId oracle = BackendId::oracle();
  return run_sweep(n, backend, &oracle, false, {}, jobs);
}

}  // namespace levi
