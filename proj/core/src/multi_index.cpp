#include "levi/multi_index.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace levi {

Sign sign_from_int(std::int64_t v) {
  if (v < -1 || v > 1) {
    throw std::domain_error("sign value must be -1, 0 or +1, got " + std::to_string(v));
  }
  return static_cast<Sign>(v);
}

const char* to_string(Sign s) noexcept {
  switch (s) {
    case Sign::plus: return "+1";
    case Sign::minus: return "-1";
    default: return "0";
  }
}

namespace {

std::vector<int> checked(int n, std::vector<int> indices) {
  if (n < 2) {
    throw dimension_error("dimension must be >= 2, got " + std::to_string(n));
  }
  if (static_cast<int>(indices.size()) != n) {
    throw dimension_error("expected " + std::to_string(n) + " indices, got " +
                          std::to_string(indices.size()));
  }
  for (std::size_t pos = 0; pos < indices.size(); ++pos) {
    if (indices[pos] < 1 || indices[pos] > n) {
      throw index_range_error("index " + std::to_string(indices[pos]) + " at position " +
                              std::to_string(pos + 1) + " outside [1, " + std::to_string(n) +
                              "]");
    }
  }
  return indices;
}

}  // namespace

MultiIndex::MultiIndex(int n, std::vector<int> indices)
    : idx_(checked(n, std::move(indices))) {}

MultiIndex::MultiIndex(int n, std::span<const int> indices)
    : MultiIndex(n, std::vector<int>(indices.begin(), indices.end())) {}

MultiIndex MultiIndex::identity_permutation(int n) {
  if (n < 2) {
    throw dimension_error("dimension must be >= 2, got " + std::to_string(n));
  }
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return MultiIndex(unchecked_tag{}, std::move(v));
}

int MultiIndex::at(int pos) const {
  if (pos < 1 || pos > dimension()) {
    throw index_range_error("position " + std::to_string(pos) + " outside [1, " +
                            std::to_string(dimension()) + "]");
  }
  return idx_[static_cast<std::size_t>(pos - 1)];
}

MultiIndex MultiIndex::transposed(int p, int q) const {
  const int n = dimension();
  if (p < 1 || p > n || q < 1 || q > n) {
    throw index_range_error("transposition positions (" + std::to_string(p) + ", " +
                            std::to_string(q) + ") outside [1, " + std::to_string(n) + "]");
  }
  if (p == q) {
    throw index_range_error("transposition positions must differ");
  }
  std::vector<int> v = idx_;
  std::swap(v[p - 1], v[q - 1]);
  return MultiIndex(unchecked_tag{}, std::move(v));
}

bool MultiIndex::has_repeat() const noexcept {
  for (std::size_t a = 0; a < idx_.size(); ++a) {
    for (std::size_t b = a + 1; b < idx_.size(); ++b) {
      if (idx_[a] == idx_[b]) return true;
    }
  }
  return false;
}

}  // namespace levi
