#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace levi::detail {

// Fraction-free (Bareiss) elimination with row pivoting; exact for integer
// matrices since every division is by a previous pivot that divides evenly.
// Intermediates are taken through 128 bits; leaving that range throws.
inline std::int64_t bareiss_determinant(std::vector<std::int64_t> a, int n) {
  auto at = [&](int r, int c) -> std::int64_t& {
    return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
             static_cast<std::size_t>(c)];
  };
  int swap_sign = 1;
  std::int64_t prev_pivot = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int pivot_row = -1;
    for (int r = k; r < n; ++r) {
      if (at(r, k) != 0) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row == -1) return 0;
    if (pivot_row != k) {
      for (int c = k; c < n; ++c) std::swap(at(pivot_row, c), at(k, c));
      swap_sign = -swap_sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        const __int128 t = static_cast<__int128>(at(i, j)) * at(k, k) -
                           static_cast<__int128>(at(i, k)) * at(k, j);
        const __int128 q = t / prev_pivot;
        if (q > std::numeric_limits<std::int64_t>::max() ||
            q < std::numeric_limits<std::int64_t>::min()) {
          throw std::overflow_error("determinant intermediate exceeds 64 bits");
        }
        at(i, j) = static_cast<std::int64_t>(q);
      }
      at(i, k) = 0;
    }
    prev_pivot = at(k, k);
  }
  return swap_sign * at(n - 1, n - 1);
}

}  // namespace levi::detail
