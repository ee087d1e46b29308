#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "levi/specfun.hpp"

namespace levi {

enum class GeneratorKind { identity, cosine, bessel_j0, gamma_shifted, polynomial };

const char* to_string(GeneratorKind k) noexcept;

/// Two generator values must differ by more than this in magnitude for the
/// generator to count as injective on {lambda, ..., n*lambda}.
inline constexpr double generator_distinctness_tol = 1e-9;

/// A generator function G together with its scale parameter lambda, as used
/// by the generalized evaluation form. Construction enforces the parameter
/// restrictions: bessel_j0 takes a real lambda, gamma_shifted is pinned to
/// lambda == 1, polynomial requires order >= 1.
class GeneratorSpec {
public:
  static GeneratorSpec identity(std::complex<double> lambda);
  static GeneratorSpec cosine(std::complex<double> lambda);
  static GeneratorSpec bessel(double lambda);
  static GeneratorSpec gamma_shifted();
  static GeneratorSpec polynomial(PolynomialFamily family, std::complex<double> lambda);

  /// Generic factory used by parsers; throws std::domain_error on invalid
  /// kind/parameter combinations (complex bessel lambda, gamma lambda != 1,
  /// missing polynomial family).
  static GeneratorSpec make(GeneratorKind kind, std::complex<double> lambda,
                            std::optional<PolynomialFamily> family = std::nullopt);

  GeneratorKind kind() const noexcept { return kind_; }
  std::complex<double> lambda() const noexcept { return lambda_; }
  const std::optional<PolynomialFamily>& family() const noexcept { return family_; }

  /// Generators whose values are exact integers (gamma_shifted); pairwise
  /// distinctness is then checked exactly instead of against the tolerance.
  bool exact_integer_valued() const noexcept { return kind_ == GeneratorKind::gamma_shifted; }

  /// G(k * lambda). Throws std::domain_error if k*lambda leaves the
  /// generator's domain (bessel beyond its accuracy range).
  std::complex<double> value_at(int k) const;

  /// Single-token label, e.g. "cosine(0.9)" or "laguerre2(0.585786)".
  std::string name() const;

  bool operator==(const GeneratorSpec&) const = default;

private:
  GeneratorSpec(GeneratorKind kind, std::complex<double> lambda,
                std::optional<PolynomialFamily> family)
      : kind_(kind), lambda_(lambda), family_(std::move(family)) {}

  GeneratorKind kind_;
  std::complex<double> lambda_;
  std::optional<PolynomialFamily> family_;
};

/// [G(1*lambda), ..., G(n*lambda)].
std::vector<std::complex<double>> generator_values(const GeneratorSpec& gen, int n);

/// True iff all pairwise differences among generator_values(gen, n) are
/// nonzero: exactly for exact generators, by magnitude > tolerance otherwise.
bool generator_validity(const GeneratorSpec& gen, int n);

/// Named presets for the parameter choices exercised in the literature:
/// "cos-half-pi", "cos-quarter-pi", "bessel-z1", "gamma-unit",
/// "laguerre2-zero". Throws std::domain_error for unknown names.
GeneratorSpec preset_generator(std::string_view name);
std::vector<std::string> preset_generator_names();

/// Draws lambda = N(0,1) + i*N(0,1) from a seeded engine, retrying until
/// generator_validity(gen, n) holds.
GeneratorSpec random_lambda_generator(GeneratorKind kind, int n, std::uint64_t seed,
                                      std::optional<PolynomialFamily> family = std::nullopt);

}  // namespace levi
