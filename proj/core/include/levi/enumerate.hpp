#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "levi/backends.hpp"

namespace levi {

/// One tuple where a backend and the oracle disagreed.
struct Disagreement {
  std::vector<int> indices;
  Sign got;
  Sign expected;
};

/// A nonzero tuple captured during enumeration.
struct NonzeroRecord {
  std::vector<int> indices;
  Sign sign;
};

/// Outcome counts of a full sweep over all n^n tuples.
struct EnumerationReport {
  int n = 0;
  BackendId backend;
  std::uint64_t count_plus = 0;
  std::uint64_t count_minus = 0;
  std::uint64_t count_zero = 0;
  std::vector<NonzeroRecord> nonzero;         // filled only when listing was requested
  std::vector<Disagreement> disagreements;    // filled only by verify sweeps

  std::uint64_t total() const noexcept { return count_plus + count_minus + count_zero; }
};

/// Receives each nonzero tuple, in lexicographic order.
using NonzeroSink = std::function<void(std::span<const int>, Sign)>;

/// n^n; throws std::overflow_error once it leaves 64 bits (n > 15).
std::uint64_t tuple_space_size(int n);

/// Sweeps every tuple in lexicographic order through the backend. When
/// list_nonzero is set, nonzero tuples go to the sink if one is given,
/// otherwise into the report. jobs > 1 splits the sweep into contiguous
/// lexicographic ranges; the merged report is identical to a single-worker
/// run. A backend evaluation failure is rethrown with the offending tuple
/// identified.
EnumerationReport enumerate_all(int n, const BackendId& backend, bool list_nonzero = false,
                                const NonzeroSink& sink = {}, int jobs = 1);

/// Sweeps the backend and the oracle together and records every tuple where
/// they differ. Disagreements are data, not errors.
EnumerationReport verify_backend(int n, const BackendId& backend, int jobs = 1);

}  // namespace levi
