#pragma once

#include <complex>
#include <cstdint>

namespace levi {

/// Gamma at a positive integer, exactly: gamma_int(z) == (z-1)!.
/// Throws std::domain_error for z < 1 and std::overflow_error once the
/// factorial no longer fits in 64 bits (z > 21).
std::int64_t gamma_int(int z);

/// Kronecker delta in difference form: 1 iff a == 0.
constexpr int kron_delta(std::int64_t a) noexcept { return a == 0 ? 1 : 0; }

/// cos(n*pi) for integer n, evaluated symbolically as (-1)^n.
constexpr int cos_pi_int(std::int64_t n) noexcept { return (n % 2 == 0) ? 1 : -1; }

/// Kronecker delta rebuilt from gamma and cos(n*pi), valid on {1,2,3}^2:
/// [2*G(z)*cos(n*pi) + z - 2]*(G(n) - 1) - (n*G(z) - z)*cos(n*pi) + 1.
/// Evaluated in exact integer arithmetic; equals kron_delta(z - n).
int delta_conversion(int z, int n);

/// Unnormalized sinc: sin(x)/x with the removable singularity filled in.
double sinc(double x) noexcept;

/// Largest |x| the J0 kernel is specified for.
inline constexpr double bessel_j0_max_arg = 20.0;

/// Zeroth-order Bessel function of the first kind, self-contained.
/// Absolute error < 1e-12 for |x| <= bessel_j0_max_arg; throws
/// std::domain_error beyond that.
double bessel_j0(double x);

enum class PolynomialKind { hermite, laguerre, gegenbauer1, chebyshev, legendre };

const char* to_string(PolynomialKind k) noexcept;

/// An orthogonal-polynomial choice: which classical family, and the order.
///
/// Normalizations: probabilists' Hermite He_n, standard Laguerre L_n,
/// Gegenbauer C_n^(1) (= Chebyshev of the second kind), Chebyshev of the
/// first kind T_n, standard Legendre P_n.
struct PolynomialFamily {
  PolynomialKind kind;
  int order;  // >= 1

  bool operator==(const PolynomialFamily&) const = default;
};

/// Validates order >= 1 (std::domain_error otherwise).
PolynomialFamily make_polynomial_family(PolynomialKind kind, int order);

/// Evaluates the polynomial by its three-term recurrence.
std::complex<double> poly_eval(const PolynomialFamily& p, std::complex<double> x);

/// A zero of a named function, suitable as a generator parameter.
struct NamedZero {
  double value;
  const char* description;
};

/// First positive zero of J0 (z1 = 2.4048255576957727...).
NamedZero bessel_j0_first_zero() noexcept;

/// First (smaller) zero of the order-2 Laguerre polynomial: 2 - sqrt(2).
NamedZero laguerre2_first_zero() noexcept;

}  // namespace levi
