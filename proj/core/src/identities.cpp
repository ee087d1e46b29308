#include "levi/identities.hpp"

#include <stdexcept>
#include <string>

#include "bareiss_detail.hpp"
#include "levi/specfun.hpp"

namespace levi {

namespace {

void require_domain(int value, int n, const char* what) {
  if (value < 1 || value > n) {
    throw std::domain_error(std::string(what) + ": index " + std::to_string(value) +
                            " outside [1, " + std::to_string(n) + "]");
  }
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("determinant term exceeds 64 bits");
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("determinant sum exceeds 64 bits");
  }
  return out;
}

}  // namespace

SquareMatrix::SquareMatrix(int n, std::vector<std::int64_t> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n < 1) {
    throw dimension_error("matrix dimension must be >= 1, got " + std::to_string(n));
  }
  const std::size_t expected = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (entries_.size() != expected) {
    throw dimension_error("expected " + std::to_string(expected) + " entries for a " +
                          std::to_string(n) + "x" + std::to_string(n) + " matrix, got " +
                          std::to_string(entries_.size()));
  }
}

SquareMatrix SquareMatrix::identity(int n) {
  std::vector<std::int64_t> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    e[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = 1;
  }
  return SquareMatrix(n, std::move(e));
}

SquareMatrix SquareMatrix::diagonal(std::span<const std::int64_t> diag) {
  const int n = static_cast<int>(diag.size());
  std::vector<std::int64_t> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    e[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] =
        diag[static_cast<std::size_t>(i)];
  }
  return SquareMatrix(n, std::move(e));
}

std::int64_t SquareMatrix::at(int r, int c) const {
  if (r < 1 || r > n_ || c < 1 || c > n_) {
    throw index_range_error("matrix position (" + std::to_string(r) + ", " + std::to_string(c) +
                            ") outside [1, " + std::to_string(n_) + "]^2");
  }
  return entries_[static_cast<std::size_t>(r - 1) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(c - 1)];
}

int eps2_product_delta(int i, int j, int m, int n) {
  require_domain(i, 2, "eps2_product_delta");
  require_domain(j, 2, "eps2_product_delta");
  require_domain(m, 2, "eps2_product_delta");
  require_domain(n, 2, "eps2_product_delta");
  return kron_delta(i - m) * kron_delta(j - n) - kron_delta(i - n) * kron_delta(j - m);
}

int eps2_product_closed(int i, int j, int m, int n) {
  require_domain(i, 2, "eps2_product_closed");
  require_domain(j, 2, "eps2_product_closed");
  require_domain(m, 2, "eps2_product_closed");
  require_domain(n, 2, "eps2_product_closed");
  return (j - i) * (n - m);
}

int eps3_product_delta(int i, int j, int k, int l, int m, int n) {
  for (int v : {i, j, k, l, m, n}) require_domain(v, 3, "eps3_product_delta");
  const auto d = [](int a, int b) { return kron_delta(a - b); };
  return d(i, l) * (d(j, m) * d(k, n) - d(j, n) * d(k, m)) -
         d(i, m) * (d(j, l) * d(k, n) - d(j, n) * d(k, l)) +
         d(i, n) * (d(j, l) * d(k, m) - d(j, m) * d(k, l));
}

int eps3_product_closed(int i, int j, int k, int l, int m, int n) {
  for (int v : {i, j, k, l, m, n}) require_domain(v, 3, "eps3_product_closed");
  const int product = (j - i) * (k - i) * (k - j) * (m - l) * (n - l) * (n - m);
  if (product % 4 != 0) {
    throw std::logic_error("eps3 closed-form division by 4 was inexact");
  }
  return product / 4;
}

std::int64_t det_via_epsilon(const SquareMatrix& x, const BackendId& backend) {
  const int n = x.dimension();
  if (n < 2) {
    throw std::domain_error("det_via_epsilon requires dimension >= 2");
  }
  const BackendEvaluator evaluate(backend, n);

  // Full odometer sweep over all n^n tuples, not only permutations.
  std::vector<int> tuple(static_cast<std::size_t>(n), 1);
  std::int64_t sum = 0;
  while (true) {
    const Sign sign = evaluate(tuple);
    if (sign != Sign::zero) {
      std::int64_t term = to_int(sign);
      for (int r = 1; r <= n; ++r) term = checked_mul(term, x.at(r, tuple[r - 1]));
      sum = checked_add(sum, term);
    }
    int pos = n - 1;
    while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == n) {
      tuple[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++tuple[static_cast<std::size_t>(pos)];
  }
  return sum;
}

std::int64_t determinant_elimination(const SquareMatrix& x) {
  return detail::bareiss_determinant(
      std::vector<std::int64_t>(x.entries().begin(), x.entries().end()), x.dimension());
}

}  // namespace levi
