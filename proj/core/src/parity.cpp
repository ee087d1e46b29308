#include "levi/parity.hpp"

namespace levi {

Sign epsilon_oracle(std::span<const int> indices) noexcept {
  const std::size_t n = indices.size();
  std::size_t inversions = 0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (indices[p] == indices[q]) return Sign::zero;
      if (indices[p] > indices[q]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? Sign::plus : Sign::minus;
}

Sign epsilon_oracle(const MultiIndex& idx) noexcept { return epsilon_oracle(idx.values()); }

Sign sgn_product(std::span<const int> indices) noexcept {
  const std::size_t n = indices.size();
  int product = 1;
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t p = q + 1; p < n; ++p) {
      const int diff = indices[p] - indices[q];
      if (diff == 0) return Sign::zero;  // sgn(0) defined as 0
      if (diff < 0) product = -product;
    }
  }
  return product > 0 ? Sign::plus : Sign::minus;
}

Sign sgn_product(const MultiIndex& idx) noexcept { return sgn_product(idx.values()); }

}  // namespace levi
