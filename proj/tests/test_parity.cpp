#include <doctest.h>

#include <random>
#include <vector>

#include "levi/multi_index.hpp"
#include "levi/parity.hpp"
#include "support/oracles.hpp"

using levi::MultiIndex;
using levi::Sign;

namespace {

// Runs f over every tuple in {1..n}^n.
template <typename F>
void for_each_tuple(int n, F&& f) {
  std::vector<int> t(static_cast<std::size_t>(n), 1);
  while (true) {
    f(t);
    int pos = n - 1;
    while (pos >= 0 && t[static_cast<std::size_t>(pos)] == n) {
      t[static_cast<std::size_t>(pos)] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++t[static_cast<std::size_t>(pos)];
  }
}

}  // namespace

TEST_CASE("oracle on the defining cases") {
  CHECK(levi::epsilon_oracle(MultiIndex(2, std::vector<int>{1, 2})) == Sign::plus);
  CHECK(levi::epsilon_oracle(MultiIndex(3, std::vector<int>{2, 1, 3})) == Sign::minus);
  CHECK(levi::epsilon_oracle(MultiIndex(5, std::vector<int>{1, 1, 2, 3, 4})) == Sign::zero);
  CHECK(levi::epsilon_oracle(MultiIndex(3, std::vector<int>{2, 3, 1})) == Sign::plus);
  CHECK(levi::epsilon_oracle(MultiIndex(3, std::vector<int>{3, 2, 1})) == Sign::minus);
}

TEST_CASE("signum product on the defining cases") {
  CHECK(levi::sgn_product(MultiIndex(3, std::vector<int>{1, 2, 3})) == Sign::plus);
  CHECK(levi::sgn_product(MultiIndex(3, std::vector<int>{3, 2, 1})) == Sign::minus);
  CHECK(levi::sgn_product(MultiIndex(4, std::vector<int>{2, 1, 4, 3})) == Sign::plus);
  CHECK(levi::sgn_product(MultiIndex(4, std::vector<int>{2, 2, 4, 3})) == Sign::zero);
}

TEST_CASE("oracle equals signum product exhaustively for n = 2..7") {
  for (int n = 2; n <= 7; ++n) {
    std::uint64_t checked = 0;
    for_each_tuple(n, [&](const std::vector<int>& t) {
      REQUIRE(levi::epsilon_oracle(t) == levi::sgn_product(t));
      ++checked;
    });
    std::uint64_t expected = 1;
    for (int i = 0; i < n; ++i) expected *= static_cast<std::uint64_t>(n);
    CHECK(checked == expected);
  }
}

TEST_CASE("oracle matches an independent sort-based parity") {
  std::mt19937_64 rng(20240915);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    std::vector<int> t(static_cast<std::size_t>(n));
    for (auto& v : t) v = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    CHECK(levi::to_int(levi::epsilon_oracle(t)) == testsupport::parity_by_sorting(t));
  }
}

TEST_CASE("outcome counts: n!/2 each sign, the rest zero") {
  for (int n = 2; n <= 5; ++n) {
    std::uint64_t plus = 0, minus = 0, zero = 0;
    for_each_tuple(n, [&](const std::vector<int>& t) {
      switch (levi::epsilon_oracle(t)) {
        case Sign::plus: ++plus; break;
        case Sign::minus: ++minus; break;
        case Sign::zero: ++zero; break;
      }
    });
    std::uint64_t factorial = 1, space = 1;
    for (int i = 1; i <= n; ++i) factorial *= static_cast<std::uint64_t>(i);
    for (int i = 0; i < n; ++i) space *= static_cast<std::uint64_t>(n);
    CHECK(plus == factorial / 2);
    CHECK(minus == factorial / 2);
    CHECK(zero == space - factorial);
  }
}

TEST_CASE("antisymmetry under random transpositions") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    std::vector<int> t(static_cast<std::size_t>(n));
    for (auto& v : t) v = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const MultiIndex idx(n, t);
    int p = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    int q = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
    if (q >= p) ++q;
    const MultiIndex swapped = idx.transposed(p, q);
    CHECK(levi::epsilon_oracle(swapped) == levi::negated(levi::epsilon_oracle(idx)));
    CHECK(levi::sgn_product(swapped) == levi::negated(levi::sgn_product(idx)));
  }
}

TEST_CASE("factor count is n(n-1)/2") {
  for (int n = 2; n <= 12; ++n) {
    std::int64_t pairs = 0;
    for (int q = 1; q <= n; ++q) {
      for (int p = q + 1; p <= n; ++p) ++pairs;
    }
    CHECK(levi::sgn_product_factor_count(n) == pairs);
  }
  CHECK(levi::sgn_product_factor_count(2) == 1);
  CHECK(levi::sgn_product_factor_count(5) == 10);
}
