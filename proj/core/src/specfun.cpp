#include "levi/specfun.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace levi {

std::int64_t gamma_int(int z) {
  if (z < 1) {
    throw std::domain_error("gamma_int requires z >= 1, got " + std::to_string(z));
  }
  // 20! is the largest factorial representable in int64.
  if (z - 1 > 20) {
    throw std::overflow_error("gamma_int(" + std::to_string(z) + ") exceeds 64-bit range");
  }
  std::int64_t acc = 1;
  for (int k = 2; k < z; ++k) acc *= k;
  return acc;
}

int delta_conversion(int z, int n) {
  if (z < 1 || z > 3 || n < 1 || n > 3) {
    throw std::domain_error("delta_conversion requires z, n in {1,2,3}, got z=" +
                            std::to_string(z) + ", n=" + std::to_string(n));
  }
  const std::int64_t gz = gamma_int(z);
  const std::int64_t gn = gamma_int(n);
  const std::int64_t c = cos_pi_int(n);
  return static_cast<int>((2 * gz * c + z - 2) * (gn - 1) - (n * gz - z) * c + 1);
}

double sinc(double x) noexcept {
  if (x == 0.0) return 1.0;
  return std::sin(x) / x;
}

namespace {

// J0 by its ascending power series; adequate through |x| = 8, where the
// largest term (~114) still leaves the double-precision result well under
// the 1e-12 budget.
double j0_series(double x) {
  const double q = -0.25 * x * x;
  double term = 1.0;
  double acc = 1.0;
  for (int k = 1; k <= 80; ++k) {
    term *= q / (static_cast<double>(k) * k);
    const double next = acc + term;
    if (next == acc) break;
    acc = next;
  }
  return acc;
}

// {J0(x0), J1(x0)} at integer anchors x0 = 8..20.
constexpr std::array<std::array<double, 2>, 13> j0_anchors = {{
    {0.1716508071375539, 0.23463634685391463},
    {-0.09033361118287614, 0.24531178657332528},
    {-0.24593576445134835, 0.04347274616886144},
    {-0.1711903004071961, -0.17678529895672151},
    {0.047689310796833535, -0.2234471044906276},
    {0.20692610237706782, -0.07031805212177837},
    {0.17107347611045867, 0.13337515469879324},
    {-0.014224472826780772, 0.20510403861352275},
    {-0.1748990739836292, 0.09039717566130419},
    {-0.16985425215118355, -0.09766849275778065},
    {-0.013355805721984111, -0.18799488548806959},
    {0.1466294396596512, -0.10570143114240926},
    {0.16702466434058316, 0.06683312417585005},
}};

// J0 on (8, 20] by a short Taylor step from the nearest integer anchor.
// Coefficients follow from the Bessel equation x y'' + y' + x y = 0:
//   a_{k+2} = -[(k+1)^2 a_{k+1} + x0 a_k + a_{k-1}] / (x0 (k+2)(k+1)),
// seeded with a_0 = J0(x0), a_1 = -J1(x0). |h| <= 0.5 keeps 24 terms far
// below double round-off.
double j0_anchor_taylor(double x) {
  int x0 = static_cast<int>(std::lround(x));
  if (x0 < 8) x0 = 8;
  if (x0 > 20) x0 = 20;
  const double h = x - x0;

  constexpr int terms = 24;
  std::array<double, terms> a{};
  a[0] = j0_anchors[static_cast<std::size_t>(x0 - 8)][0];
  a[1] = -j0_anchors[static_cast<std::size_t>(x0 - 8)][1];
  for (int k = 0; k + 2 < terms; ++k) {
    const double prev = (k >= 1) ? a[static_cast<std::size_t>(k - 1)] : 0.0;
    a[static_cast<std::size_t>(k + 2)] =
        -((static_cast<double>(k + 1) * (k + 1)) * a[static_cast<std::size_t>(k + 1)] +
          x0 * a[static_cast<std::size_t>(k)] + prev) /
        (static_cast<double>(x0) * (k + 2) * (k + 1));
  }

  double acc = 0.0;
  for (int k = terms - 1; k >= 0; --k) acc = acc * h + a[static_cast<std::size_t>(k)];
  return acc;
}

}  // namespace

double bessel_j0(double x) {
  const double ax = std::abs(x);
  if (!(ax <= bessel_j0_max_arg)) {
    throw std::domain_error("bessel_j0 argument " + std::to_string(x) +
                            " outside documented range |x| <= 20");
  }
  return ax <= 8.0 ? j0_series(ax) : j0_anchor_taylor(ax);
}

const char* to_string(PolynomialKind k) noexcept {
  switch (k) {
    case PolynomialKind::hermite: return "hermite";
    case PolynomialKind::laguerre: return "laguerre";
    case PolynomialKind::gegenbauer1: return "gegenbauer1";
    case PolynomialKind::chebyshev: return "chebyshev";
    case PolynomialKind::legendre: return "legendre";
  }
  return "?";
}

PolynomialFamily make_polynomial_family(PolynomialKind kind, int order) {
  if (order < 1) {
    throw std::domain_error("polynomial order must be >= 1, got " + std::to_string(order));
  }
  return PolynomialFamily{kind, order};
}

std::complex<double> poly_eval(const PolynomialFamily& p, std::complex<double> x) {
  if (p.order < 1) {
    throw std::domain_error("polynomial order must be >= 1, got " + std::to_string(p.order));
  }
  std::complex<double> prev = 1.0;  // degree 0 in every family below
  std::complex<double> cur;
  switch (p.kind) {
    case PolynomialKind::hermite: cur = x; break;                 // He_1
    case PolynomialKind::laguerre: cur = 1.0 - x; break;          // L_1
    case PolynomialKind::gegenbauer1: cur = 2.0 * x; break;       // C_1^(1)
    case PolynomialKind::chebyshev: cur = x; break;               // T_1
    case PolynomialKind::legendre: cur = x; break;                // P_1
  }
  for (int n = 1; n < p.order; ++n) {
    const double dn = n;
    std::complex<double> next;
    switch (p.kind) {
      case PolynomialKind::hermite:
        next = x * cur - dn * prev;
        break;
      case PolynomialKind::laguerre:
        next = ((2.0 * dn + 1.0 - x) * cur - dn * prev) / (dn + 1.0);
        break;
      case PolynomialKind::gegenbauer1:
        next = 2.0 * x * cur - prev;
        break;
      case PolynomialKind::chebyshev:
        next = 2.0 * x * cur - prev;
        break;
      case PolynomialKind::legendre:
        next = ((2.0 * dn + 1.0) * x * cur - dn * prev) / (dn + 1.0);
        break;
    }
    prev = cur;
    cur = next;
  }
  return cur;
}

NamedZero bessel_j0_first_zero() noexcept {
  return NamedZero{2.4048255576957727, "first positive zero of J0"};
}

NamedZero laguerre2_first_zero() noexcept {
  return NamedZero{2.0 - std::sqrt(2.0), "smaller zero of the order-2 Laguerre polynomial"};
}

}  // namespace levi
