#pragma once

#include <cstdint>
#include <span>

#include "levi/multi_index.hpp"

namespace levi {

/// Definitional evaluation of the Levi-Civita symbol by inversion counting:
/// 0 if any index repeats, +1 for an even number of inversions, -1 for odd.
/// The span overload assumes already-validated indices (1..n, length n).
Sign epsilon_oracle(std::span<const int> indices) noexcept;
Sign epsilon_oracle(const MultiIndex& idx) noexcept;

/// Pairwise signum product over all positions p > q, with sgn(0) == 0 so
/// repeated indices give 0.
Sign sgn_product(std::span<const int> indices) noexcept;
Sign sgn_product(const MultiIndex& idx) noexcept;

/// Number of factors the signum product evaluates: n(n-1)/2.
constexpr std::int64_t sgn_product_factor_count(int n) noexcept {
  return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

}  // namespace levi
