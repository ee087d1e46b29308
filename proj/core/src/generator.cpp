#include "levi/generator.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace levi {

const char* to_string(GeneratorKind k) noexcept {
  switch (k) {
    case GeneratorKind::identity: return "identity";
    case GeneratorKind::cosine: return "cosine";
    case GeneratorKind::bessel_j0: return "bessel-j0";
    case GeneratorKind::gamma_shifted: return "gamma-shifted";
    case GeneratorKind::polynomial: return "polynomial";
  }
  return "?";
}

GeneratorSpec GeneratorSpec::identity(std::complex<double> lambda) {
  return GeneratorSpec(GeneratorKind::identity, lambda, std::nullopt);
}

GeneratorSpec GeneratorSpec::cosine(std::complex<double> lambda) {
  return GeneratorSpec(GeneratorKind::cosine, lambda, std::nullopt);
}

GeneratorSpec GeneratorSpec::bessel(double lambda) {
  return GeneratorSpec(GeneratorKind::bessel_j0, lambda, std::nullopt);
}

GeneratorSpec GeneratorSpec::gamma_shifted() {
  return GeneratorSpec(GeneratorKind::gamma_shifted, 1.0, std::nullopt);
}

GeneratorSpec GeneratorSpec::polynomial(PolynomialFamily family, std::complex<double> lambda) {
  if (family.order < 1) {
    throw std::domain_error("polynomial generator needs order >= 1");
  }
  return GeneratorSpec(GeneratorKind::polynomial, lambda, family);
}

GeneratorSpec GeneratorSpec::make(GeneratorKind kind, std::complex<double> lambda,
                                  std::optional<PolynomialFamily> family) {
  switch (kind) {
    case GeneratorKind::identity: return identity(lambda);
    case GeneratorKind::cosine: return cosine(lambda);
    case GeneratorKind::bessel_j0:
      if (lambda.imag() != 0.0) {
        throw std::domain_error("bessel-j0 generator requires a real lambda");
      }
      return bessel(lambda.real());
    case GeneratorKind::gamma_shifted:
      if (lambda != std::complex<double>(1.0, 0.0)) {
        throw std::domain_error("gamma-shifted generator requires lambda = 1 exactly");
      }
      return gamma_shifted();
    case GeneratorKind::polynomial:
      if (!family) {
        throw std::domain_error("polynomial generator needs a polynomial family");
      }
      return polynomial(*family, lambda);
  }
  throw std::domain_error("unknown generator kind");
}

std::complex<double> GeneratorSpec::value_at(int k) const {
  const std::complex<double> arg = static_cast<double>(k) * lambda_;
  switch (kind_) {
    case GeneratorKind::identity:
      return arg;
    case GeneratorKind::cosine:
      return std::cos(arg);
    case GeneratorKind::bessel_j0:
      return bessel_j0(arg.real());
    case GeneratorKind::gamma_shifted:
      // G(z) = Gamma(z + 1) at lambda = 1, so the values are k!.
      return static_cast<double>(gamma_int(k + 1));
    case GeneratorKind::polynomial:
      return poly_eval(*family_, arg);
  }
  throw std::domain_error("unknown generator kind");
}

std::string GeneratorSpec::name() const {
  std::ostringstream os;
  if (kind_ == GeneratorKind::polynomial) {
    os << to_string(family_->kind) << family_->order;
  } else {
    os << to_string(kind_);
  }
  os << '(' << lambda_.real();
  if (lambda_.imag() != 0.0) os << (lambda_.imag() < 0 ? "" : "+") << lambda_.imag() << 'i';
  os << ')';
  return os.str();
}

std::vector<std::complex<double>> generator_values(const GeneratorSpec& gen, int n) {
  if (n < 2) {
    throw std::domain_error("generator_values requires n >= 2");
  }
  std::vector<std::complex<double>> values;
  values.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) values.push_back(gen.value_at(k));
  return values;
}

bool generator_validity(const GeneratorSpec& gen, int n) {
  const auto values = generator_values(gen, n);
  for (std::size_t a = 0; a < values.size(); ++a) {
    for (std::size_t b = a + 1; b < values.size(); ++b) {
      if (gen.exact_integer_valued()) {
        if (values[a] == values[b]) return false;
      } else if (std::abs(values[a] - values[b]) <= generator_distinctness_tol) {
        return false;
      }
    }
  }
  return true;
}

GeneratorSpec preset_generator(std::string_view name) {
  if (name == "cos-half-pi") return GeneratorSpec::cosine(std::numbers::pi / 2.0);
  if (name == "cos-quarter-pi") return GeneratorSpec::cosine(std::numbers::pi / 4.0);
  if (name == "bessel-z1") return GeneratorSpec::bessel(bessel_j0_first_zero().value);
  if (name == "gamma-unit") return GeneratorSpec::gamma_shifted();
  if (name == "laguerre2-zero") {
    return GeneratorSpec::polynomial(
        make_polynomial_family(PolynomialKind::laguerre, 2), laguerre2_first_zero().value);
  }
  throw std::domain_error("unknown generator preset: " + std::string(name));
}

std::vector<std::string> preset_generator_names() {
  return {"cos-half-pi", "cos-quarter-pi", "bessel-z1", "gamma-unit", "laguerre2-zero"};
}

GeneratorSpec random_lambda_generator(GeneratorKind kind, int n, std::uint64_t seed,
                                      std::optional<PolynomialFamily> family) {
  if (kind == GeneratorKind::gamma_shifted) {
    throw std::domain_error("gamma-shifted generator has no free lambda to randomize");
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int attempt = 0; attempt < 256; ++attempt) {
    const double re = normal(rng);
    const double im = (kind == GeneratorKind::bessel_j0) ? 0.0 : normal(rng);
    // Keep Bessel arguments inside the kernel's documented range.
    if (kind == GeneratorKind::bessel_j0 && std::abs(re) * n > bessel_j0_max_arg) continue;
    GeneratorSpec candidate = GeneratorSpec::make(kind, {re, im}, family);
    if (generator_validity(candidate, n)) return candidate;
  }
  throw std::runtime_error("no valid random lambda found after 256 draws");
}

}  // namespace levi
