// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Every tolerance is pinned here, in code.

#include <cmath>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "levi/bench.hpp"
#include "levi/enumerate.hpp"
#include "levi/identities.hpp"
#include "levi/specfun.hpp"

using namespace levi;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

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

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// 1. Counting claims: rational-product sweeps for n = 2..7 report n!/2
//    positives, n!/2 negatives and n^n - n! zeros; the n = 5 nonzero listing
//    has exactly 120 tuples.
Check counting_claims() {
  Check c;
  for (int n = 2; n <= 7; ++n) {
    const auto report = enumerate_all(n, BackendId::rational_product(), n == 5);
    const std::uint64_t half = factorial(n) / 2;
    if (report.count_plus != half || report.count_minus != half ||
        report.count_zero != tuple_space_size(n) - factorial(n)) {
      c.fail("counts wrong at n=" + std::to_string(n));
    }
    if (n == 5 && report.nonzero.size() != 120) {
      c.fail("n=5 nonzero listing has " + std::to_string(report.nonzero.size()) +
             " tuples, expected 120");
    }
  }
  if (c.ok) c.detail = "n=2..7 counts exact, n=5 listing has 120 tuples";
  return c;
}

// 2. The four exact backends agree on every tuple for n = 2..7.
Check exact_backend_equivalence() {
  Check c;
  for (int n = 2; n <= 7; ++n) {
    std::uint64_t mismatches = 0;
    for_each_tuple(n, [&](const std::vector<int>& t) {
      const Sign expected = epsilon_oracle(t);
      if (sgn_product(t) != expected || rational_product(t) != expected ||
          straub_determinant(t) != expected) {
        ++mismatches;
      }
    });
    if (mismatches != 0) {
      c.fail(std::to_string(mismatches) + " mismatches at n=" + std::to_string(n));
    }
  }
  if (c.ok) c.detail = "oracle = sgn-product = rational-product = straub-determinant, n=2..7";
  return c;
}

// 3. Low-dimension closed forms match the oracle exhaustively, the cubic form
//    also equals its antisymmetric rearrangement, and the n = 4 form
//    reproduces the printed sign of all 24 listed permutations.
Check low_dim_closed_forms() {
  Check c;
  for (int n = 2; n <= 4; ++n) {
    for_each_tuple(n, [&](const std::vector<int>& t) {
      if (closed_form_low_dim(t) != epsilon_oracle(t)) {
        c.fail("closed form mismatch at n=" + std::to_string(n));
      }
    });
  }
  for_each_tuple(3, [&](const std::vector<int>& t) {
    const int i = t[0], j = t[1], k = t[2];
    if (to_int(closed_form_low_dim(t)) != (i - j) * (j - k) * (k - i) / 2) {
      c.fail("cubic rearrangement mismatch");
    }
  });
  static const std::vector<std::vector<int>> plus = {
      {1, 2, 3, 4}, {1, 3, 4, 2}, {1, 4, 2, 3}, {2, 1, 4, 3}, {2, 3, 1, 4}, {2, 4, 3, 1},
      {3, 1, 2, 4}, {3, 2, 4, 1}, {3, 4, 1, 2}, {4, 1, 3, 2}, {4, 2, 1, 3}, {4, 3, 2, 1}};
  static const std::vector<std::vector<int>> minus = {
      {1, 3, 2, 4}, {1, 4, 3, 2}, {1, 2, 4, 3}, {2, 4, 1, 3}, {2, 1, 3, 4}, {2, 3, 4, 1},
      {3, 2, 1, 4}, {3, 4, 2, 1}, {3, 1, 4, 2}, {4, 3, 1, 2}, {4, 1, 2, 3}, {4, 2, 3, 1}};
  for (const auto& t : plus) {
    if (closed_form_low_dim(t) != Sign::plus) c.fail("listed +1 permutation not +1");
  }
  for (const auto& t : minus) {
    if (closed_form_low_dim(t) != Sign::minus) c.fail("listed -1 permutation not -1");
  }
  if (c.ok) c.detail = "4 + 27 + 256 tuples exact, 24 listed permutations reproduced";
  return c;
}

// 4. Generalized evaluation matches the oracle exhaustively for n = 2..5 with
//    pre-rounding deviation < 1e-6, over the six parameter choices. The
//    quarter-pi cosine is degenerate at n = 5 (cos(3pi/4) = cos(5pi/4)); the
//    injectivity gate must reject exactly that cell before evaluation.
Check generalized_claim() {
  Check c;
  const std::uint64_t seed = 20240901;

  double worst = 0.0;
  int rejected = 0;
  for (int n = 2; n <= 5; ++n) {
    const std::vector<GeneratorSpec> specs = {
        GeneratorSpec::cosine(0.9),
        preset_generator("cos-quarter-pi"),
        preset_generator("bessel-z1"),
        preset_generator("gamma-unit"),
        preset_generator("laguerre2-zero"),
        random_lambda_generator(GeneratorKind::identity, n, seed),
    };
    for (std::size_t g = 0; g < specs.size(); ++g) {
      const GeneratorSpec& gen = specs[g];
      if (!generator_validity(gen, n)) {
        ++rejected;
        const bool is_quarter_pi_at_5 = (g == 1 && n == 5);
        if (!is_quarter_pi_at_5) {
          c.fail("unexpected degenerate generator " + gen.name() + " at n=" +
                 std::to_string(n));
        }
        continue;
      }
      for_each_tuple(n, [&](const std::vector<int>& t) {
        const auto [sign, diag] = generalized(MultiIndex(n, t), gen);
        if (sign != epsilon_oracle(t)) {
          c.fail(gen.name() + " disagrees at n=" + std::to_string(n));
        }
        if (!(diag.deviation < 1e-6)) {
          c.fail(gen.name() + " deviation " + std::to_string(diag.deviation));
        }
        if (diag.deviation > worst) worst = diag.deviation;
      });
    }
  }
  if (rejected != 1) {
    c.fail("expected exactly the quarter-pi/n=5 cell to be gate-rejected, got " +
           std::to_string(rejected));
  }
  if (c.ok) {
    std::ostringstream os;
    os << "23 (generator, n) cells exhaustive, max deviation " << std::scientific
       << std::setprecision(2) << worst << "; cos-quarter-pi@n=5 correctly rejected as degenerate";
    c.detail = os.str();
  }
  return c;
}

// 5. Every special form matches the oracle on its full domain.
Check special_forms() {
  Check c;
  for (R2Form form : {R2Form::delta_form, R2Form::xor_form, R2Form::sin_form, R2Form::sinc_form,
                      R2Form::gamma_form}) {
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        if (r2_special(form, i, j) != epsilon_oracle(std::vector<int>{i, j})) {
          c.fail(std::string("r2-") + to_string(form));
        }
  }
  for (R3Form form : {R3Form::signum_gamma, R3Form::delta_poly, R3Form::delta_gamma,
                      R3Form::gamma_closed, R3Form::sin_form, R3Form::sinc_poly,
                      R3Form::sinc_gamma}) {
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        for (int k = 1; k <= 3; ++k)
          if (r3_special(form, i, j, k) != epsilon_oracle(std::vector<int>{i, j, k})) {
            c.fail(std::string("r3-") + to_string(form));
          }
  }
  if (c.ok) c.detail = "5 dimension-2 forms x 4 tuples, 7 dimension-3 forms x 27 tuples";
  return c;
}

// 6. Product identities and the determinant expansion.
Check identity_suites() {
  Check c;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int m = 1; m <= 2; ++m)
        for (int n = 1; n <= 2; ++n) {
          const int expected = to_int(epsilon_oracle(std::vector<int>{i, j})) *
                               to_int(epsilon_oracle(std::vector<int>{m, n}));
          if (eps2_product_delta(i, j, m, n) != expected) c.fail("eps2 delta identity");
          if (eps2_product_closed(i, j, m, n) != expected) c.fail("eps2 closed identity");
        }
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l)
          for (int m = 1; m <= 3; ++m)
            for (int n = 1; n <= 3; ++n) {
              const int expected = to_int(epsilon_oracle(std::vector<int>{i, j, k})) *
                                   to_int(epsilon_oracle(std::vector<int>{l, m, n}));
              if (eps3_product_delta(i, j, k, l, m, n) != expected) c.fail("eps3 delta identity");
              if (eps3_product_closed(i, j, k, l, m, n) != expected) {
                c.fail("eps3 closed identity");
              }
            }

  std::mt19937_64 rng(918273645);
  std::uniform_int_distribution<std::int64_t> entry(-9, 9);
  const std::vector<BackendId> backends = {BackendId::oracle(), BackendId::rational_product(),
                                           BackendId::closed_form_low_dim()};
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<std::int64_t> e(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
      for (auto& v : e) v = entry(rng);
      const SquareMatrix m(n, std::move(e));
      const std::int64_t reference = determinant_elimination(m);
      for (const auto& backend : backends) {
        if (det_via_epsilon(m, backend) != reference) {
          c.fail("determinant mismatch at n=" + std::to_string(n));
        }
      }
    }
  }
  if (c.ok) c.detail = "16 + 729 product tuples, 300 seeded determinants x 3 backends";
  return c;
}

// 7. Kernel identities at the pinned tolerances.
Check kernel_identities() {
  Check c;
  for (int z = 1; z <= 3; ++z) {
    for (int n = 1; n <= 3; ++n) {
      if (delta_conversion(z, n) != kron_delta(z - n)) c.fail("delta conversion");
    }
    if (2 * gamma_int(z) != z * z - 3 * z + 4) c.fail("gamma quadratic identity");
  }
  for (int i = 1; i <= 2; ++i) {
    if (kron_delta(i - 1) != 2 - i) c.fail("dimension-2 delta polynomial");
    if (kron_delta(i - 2) != i - 1) c.fail("dimension-2 delta polynomial");
  }
  for (int i = 1; i <= 3; ++i) {
    if (2 * kron_delta(i - 1) != (i - 2) * (i - 3)) c.fail("dimension-3 delta polynomial");
    if (kron_delta(i - 2) != (1 - i) * (i - 3)) c.fail("dimension-3 delta polynomial");
    if (2 * kron_delta(i - 3) != (i - 1) * (i - 2)) c.fail("dimension-3 delta polynomial");
  }
  if (!(std::abs(bessel_j0(bessel_j0_first_zero().value)) < 1e-10)) {
    c.fail("J0 does not vanish at its first zero");
  }
  if (!(std::abs(poly_eval({PolynomialKind::laguerre, 2}, {laguerre2_first_zero().value, 0.0})) <
        1e-10)) {
    c.fail("order-2 Laguerre does not vanish at its zero");
  }
  if (c.ok) c.detail = "delta conversion, gamma identity, delta polynomials, named zeros";
  return c;
}

// 8. The printed normalizing constants.
Check prefactor_constants() {
  Check c;
  const std::pair<int, std::int64_t> expected[] = {{2, 1}, {3, 2}, {4, 12}, {5, 288}};
  for (const auto& [n, value] : expected) {
    if (superfactorial_denominator(n) != value) {
      c.fail("superfactorial(" + std::to_string(n) + ") != " + std::to_string(value));
    }
  }
  if (c.ok) c.detail = "1, 2, 12, 288 for n = 2..5";
  return c;
}

// 9. Antisymmetry and zero-on-repeat, 1000 seeded cases per backend.
Check property_suite() {
  Check c;
  std::mt19937_64 rng(555000111);
  int backends_covered = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& id : all_backends_for(n)) {
      ++backends_covered;
      const BackendEvaluator evaluate(id, n);
      for (int trial = 0; trial < 1000; ++trial) {
        std::vector<int> t(static_cast<std::size_t>(n));
        for (auto& v : t) v = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));

        int p = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        int q = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
        if (q >= p) ++q;
        auto swapped = t;
        std::swap(swapped[static_cast<std::size_t>(p)], swapped[static_cast<std::size_t>(q)]);
        if (evaluate(swapped) != negated(evaluate(t))) {
          c.fail("antisymmetry broken for " + id.name() + " at n=" + std::to_string(n));
        }

        auto repeated = t;
        repeated[static_cast<std::size_t>(p)] = repeated[static_cast<std::size_t>(q)];
        if (evaluate(repeated) != Sign::zero) {
          c.fail("repeat not zero for " + id.name() + " at n=" + std::to_string(n));
        }
      }
    }
  }
  if (c.ok) {
    c.detail = "1000 transpositions + 1000 repeats per backend, " +
               std::to_string(backends_covered) + " (backend, n) pairings";
  }
  return c;
}

// 10. Bench smoke test: n = 2..5 with three backends yields exactly 12
//     records and every correctness spot check passes.
Check bench_smoke() {
  Check c;
  BenchConfig cfg;
  cfg.n_min = 2;
  cfg.n_max = 5;
  cfg.backends = {BackendId::rational_product(), BackendId::straub_determinant(),
                  BackendId::generalized(GeneratorSpec::cosine(0.9))};
  cfg.repetitions = 2;
  cfg.warmup_sweeps = 1;
  cfg.spot_check_seed = 31415;
  try {
    const auto records = run_bench(cfg);
    if (records.size() != 12) {
      c.fail("expected 12 records, got " + std::to_string(records.size()));
    }
    for (const auto& r : records) {
      std::uint64_t space = 1;
      for (int i = 0; i < r.n; ++i) space *= static_cast<std::uint64_t>(r.n);
      if (r.tuples_evaluated != space * 2) c.fail("tuple arithmetic wrong");
    }
  } catch (const std::exception& e) {
    c.fail(std::string("bench aborted: ") + e.what());
  }
  if (c.ok) c.detail = "12 records, spot checks green (timings reported, not asserted)";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"counting claims (n=2..7, rational product)", counting_claims},
      {"exact-backend equivalence (n=2..7)", exact_backend_equivalence},
      {"low-dimension closed forms", low_dim_closed_forms},
      {"generalized-function claim (n=2..5, six generators)", generalized_claim},
      {"dimension-2/3 special forms", special_forms},
      {"product identities and determinant expansion", identity_suites},
      {"kernel identities", kernel_identities},
      {"prefactor constants", prefactor_constants},
      {"property suite (antisymmetry, zero-on-repeat)", property_suite},
      {"bench smoke test", bench_smoke},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check result;
    try {
      result = criteria[i].second();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    if (!result.ok) ++failures;
    std::cout << '[' << std::setw(2) << i + 1 << "] " << (result.ok ? "PASS" : "FAIL") << "  "
              << criteria[i].first << " -- " << result.detail << '\n';
  }
  std::cout << "acceptance: " << criteria.size() - static_cast<std::size_t>(failures) << '/'
            << criteria.size() << " criteria passed\n";
  return failures;
}
