#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "levi/specfun.hpp"
#include "support/oracles.hpp"

using namespace levi;

TEST_CASE("integer gamma") {
  CHECK(gamma_int(1) == 1);
  CHECK(gamma_int(2) == 1);
  CHECK(gamma_int(3) == 2);
  CHECK(gamma_int(6) == 120);

  std::int64_t factorial = 1;
  for (int z = 2; z <= 21; ++z) {
    factorial *= z - 1;
    CHECK(gamma_int(z) == factorial);
  }
  CHECK_THROWS_AS(gamma_int(0), std::domain_error);
  CHECK_THROWS_AS(gamma_int(-3), std::domain_error);
  CHECK_THROWS_AS(gamma_int(22), std::overflow_error);
}

TEST_CASE("gamma identity on {1,2,3}: G(z) = (z^2 - 3z + 4)/2") {
  for (int z = 1; z <= 3; ++z) {
    CHECK(2 * gamma_int(z) == z * z - 3 * z + 4);
  }
}

TEST_CASE("kronecker delta") {
  CHECK(kron_delta(0) == 1);
  CHECK(kron_delta(5) == 0);
  CHECK(kron_delta(-2) == 0);
}

TEST_CASE("delta conversion equals the delta on all of {1,2,3}^2") {
  for (int z = 1; z <= 3; ++z) {
    for (int n = 1; n <= 3; ++n) {
      CHECK(delta_conversion(z, n) == kron_delta(z - n));
    }
  }
  CHECK(delta_conversion(2, 2) == 1);
  CHECK(delta_conversion(3, 2) == 0);
  CHECK(delta_conversion(1, 3) == 0);
  CHECK_THROWS_AS(delta_conversion(0, 2), std::domain_error);
  CHECK_THROWS_AS(delta_conversion(2, 4), std::domain_error);
}

TEST_CASE("delta as a polynomial in the index, dimension 2") {
  for (int i = 1; i <= 2; ++i) {
    CHECK(kron_delta(i - 1) == 2 - i);
    CHECK(kron_delta(i - 2) == i - 1);
  }
}

TEST_CASE("delta as a polynomial in the index, dimension 3") {
  for (int i = 1; i <= 3; ++i) {
    CHECK(2 * kron_delta(i - 1) == (i - 2) * (i - 3));
    CHECK(kron_delta(i - 2) == (1 - i) * (i - 3));
    CHECK(2 * kron_delta(i - 3) == (i - 1) * (i - 2));
  }
}

TEST_CASE("sinc") {
  CHECK(sinc(0.0) == 1.0);
  CHECK(std::abs(sinc(std::numbers::pi)) < 1e-12);
  CHECK(std::abs(sinc(2 * std::numbers::pi)) < 1e-12);
  for (int k = -50; k <= 50; ++k) {
    if (k == 0) continue;
    CHECK(std::abs(sinc(std::numbers::pi * k)) < 1e-12);
  }
}

TEST_CASE("J0 basics") {
  CHECK(bessel_j0(0.0) == 1.0);
  const NamedZero z1 = bessel_j0_first_zero();
  CHECK(std::abs(bessel_j0(z1.value)) < 1e-10);
  CHECK(bessel_j0(-5.0) == bessel_j0(5.0));
  CHECK_THROWS_AS(bessel_j0(20.0001), std::domain_error);
  CHECK_THROWS_AS(bessel_j0(-25.0), std::domain_error);
  CHECK(bessel_j0(20.0) == doctest::Approx(0.16702466434058316).epsilon(1e-12));
}

TEST_CASE("J0 at twice the first zero") {
  const double two_z1 = 2 * bessel_j0_first_zero().value;
  const double got = bessel_j0(two_z1);
  CHECK(std::abs(got) > 0.1);
  CHECK(got == doctest::Approx(testsupport::j0_series_oracle(two_z1)).epsilon(1e-12));
  CHECK(got == doctest::Approx(-0.23753621820134524).epsilon(1e-12));
}

TEST_CASE("J0 matches the series oracle on a grid over [0, 15]") {
  for (int i = 0; i < 100; ++i) {
    const double x = 15.0 * i / 99.0;
    CHECK(std::abs(bessel_j0(x) - testsupport::j0_series_oracle(x)) < 1e-10);
  }
}

TEST_CASE("J0 spot values on the upper range") {
  struct Spot {
    double x, value;
  };
  // Reference values to 17 significant digits.
  const Spot spots[] = {
      {15.5, -0.10923065090005017}, {16.5, -0.19638069293686103},
      {17.25, -0.14061184950308583}, {18.7, 0.10855948389316132},
      {19.9, 0.1728777563926184},   {12.5, 0.1468840547004211},
      {9.3, -0.15765518994340297},  {8.01, 0.1692973691105429},
  };
  for (const auto& s : spots) {
    CHECK(bessel_j0(s.x) == doctest::Approx(s.value).epsilon(1e-12));
  }
}

TEST_CASE("polynomial families") {
  using std::complex;
  const complex<double> x{0.7, 0.0};

  CHECK(poly_eval({PolynomialKind::chebyshev, 1}, x).real() == doctest::Approx(0.7));
  CHECK(poly_eval({PolynomialKind::legendre, 2}, {1.0, 0.0}).real() == doctest::Approx(1.0));

  const double lag_zero = laguerre2_first_zero().value;
  CHECK(std::abs(poly_eval({PolynomialKind::laguerre, 2}, {lag_zero, 0.0})) < 1e-12);

  // Closed forms of the low orders.
  for (double t : {-1.3, -0.2, 0.5, 2.0}) {
    const complex<double> z{t, 0.0};
    CHECK(poly_eval({PolynomialKind::hermite, 2}, z).real() == doctest::Approx(t * t - 1.0));
    CHECK(poly_eval({PolynomialKind::laguerre, 2}, z).real() ==
          doctest::Approx(((t - 2.0) * (t - 2.0) - 2.0) / 2.0));
    CHECK(poly_eval({PolynomialKind::gegenbauer1, 2}, z).real() ==
          doctest::Approx(4.0 * t * t - 1.0));
    CHECK(poly_eval({PolynomialKind::chebyshev, 2}, z).real() ==
          doctest::Approx(2.0 * t * t - 1.0));
    CHECK(poly_eval({PolynomialKind::legendre, 2}, z).real() ==
          doctest::Approx(1.5 * t * t - 0.5));
  }

  // Complex arguments go through the same recurrence.
  const complex<double> w{0.4, -1.1};
  const complex<double> lag2 = poly_eval({PolynomialKind::laguerre, 2}, w);
  const complex<double> expected = ((w - 2.0) * (w - 2.0) - 2.0) / 2.0;
  CHECK(std::abs(lag2 - expected) < 1e-12);

  CHECK_THROWS_AS(poly_eval({PolynomialKind::laguerre, 0}, x), std::domain_error);
  CHECK_THROWS_AS(make_polynomial_family(PolynomialKind::hermite, -1), std::domain_error);
}

TEST_CASE("named zeros really are zeros") {
  CHECK(std::abs(bessel_j0(bessel_j0_first_zero().value)) < 1e-12);
  CHECK(std::abs(poly_eval({PolynomialKind::laguerre, 2},
                           {laguerre2_first_zero().value, 0.0})) < 1e-12);
}

TEST_CASE("cos at integer multiples of pi") {
  CHECK(cos_pi_int(0) == 1);
  CHECK(cos_pi_int(1) == -1);
  CHECK(cos_pi_int(2) == 1);
  CHECK(cos_pi_int(-3) == -1);
}
