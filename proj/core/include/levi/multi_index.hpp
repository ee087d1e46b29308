#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "levi/errors.hpp"

namespace levi {

/// Value of the Levi-Civita symbol: one of {-1, 0, +1}.
enum class Sign : int { minus = -1, zero = 0, plus = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }

constexpr Sign negated(Sign s) noexcept {
  return static_cast<Sign>(-static_cast<int>(s));
}

/// Signum of an arbitrary integer.
constexpr Sign sign_of(std::int64_t v) noexcept {
  return v > 0 ? Sign::plus : (v < 0 ? Sign::minus : Sign::zero);
}

/// Converts an integer that must already be -1, 0 or +1.
/// Throws std::domain_error otherwise.
Sign sign_from_int(std::int64_t v);

/// "+1", "0" or "-1".
const char* to_string(Sign s) noexcept;

/// An N-tuple of 1-based indices, each in [1, N]. Immutable once built;
/// construction enforces the invariants, so a MultiIndex is always valid.
class MultiIndex {
public:
  /// Validates length == n (dimension_error) and every entry in [1, n]
  /// (index_range_error). n must be >= 2.
  MultiIndex(int n, std::vector<int> indices);
  MultiIndex(int n, std::span<const int> indices);

  /// The tuple (1, 2, ..., n).
  static MultiIndex identity_permutation(int n);

  int dimension() const noexcept { return static_cast<int>(idx_.size()); }

  std::span<const int> values() const noexcept { return idx_; }

  /// 1-based position access.
  int at(int pos) const;

  /// Copy with positions p and q (1-based, p != q) swapped.
  MultiIndex transposed(int p, int q) const;

  bool has_repeat() const noexcept;

  bool operator==(const MultiIndex&) const = default;

private:
  struct unchecked_tag {};
  MultiIndex(unchecked_tag, std::vector<int> indices) : idx_(std::move(indices)) {}

  std::vector<int> idx_;
};

}  // namespace levi
