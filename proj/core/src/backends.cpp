#include "levi/backends.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>

#include "bareiss_detail.hpp"
#include "levi/specfun.hpp"

namespace levi {

namespace {

using wide_int = boost::multiprecision::cpp_int;

void require_dimension(std::span<const int> indices, int expected, const char* what) {
  if (static_cast<int>(indices.size()) != expected) {
    throw std::domain_error(std::string(what) + " requires dimension " +
                            std::to_string(expected) + ", got " +
                            std::to_string(indices.size()));
  }
}

void require_index_domain(int value, int n, const char* what) {
  if (value < 1 || value > n) {
    throw std::domain_error(std::string(what) + ": index " + std::to_string(value) +
                            " outside [1, " + std::to_string(n) + "]");
  }
}

std::string render_raw(std::complex<double> raw) {
  std::ostringstream os;
  os << raw.real();
  if (raw.imag() != 0.0) os << (raw.imag() < 0 ? "" : "+") << raw.imag() << 'i';
  return os.str();
}

// Rounds a raw backend value to a Sign, rejecting anything whose distance
// from the nearest admissible integer reaches the tolerance.
Sign commit_to_sign(std::complex<double> raw, double tolerance, const std::string& what) {
  const double nearest = std::round(raw.real());
  const double deviation = std::abs(raw - std::complex<double>(nearest, 0.0));
  if (!(deviation < tolerance) || nearest < -1.0 || nearest > 1.0) {
    throw evaluation_error(what + ": raw value " + render_raw(raw) +
                               " does not round to a sign within tolerance " +
                               std::to_string(tolerance),
                           raw);
  }
  return static_cast<Sign>(static_cast<int>(nearest));
}

wide_int wide_superfactorial(int n) {
  wide_int acc = 1;
  wide_int factorial = 1;
  for (int k = 1; k < n; ++k) {
    factorial *= k;
    acc *= factorial;
  }
  return acc;
}

Sign rational_product_wide(std::span<const int> indices) {
  const int n = static_cast<int>(indices.size());
  wide_int numerator = 1;
  for (int q = 0; q < n; ++q) {
    for (int p = q + 1; p < n; ++p) {
      const int diff = indices[p] - indices[q];
      if (diff == 0) return Sign::zero;
      numerator *= diff;
    }
  }
  const wide_int denominator = wide_superfactorial(n);
  const wide_int quotient = numerator / denominator;
  if (quotient * denominator != numerator) {
    throw std::logic_error("rational product division was inexact");
  }
  if (quotient != 1 && quotient != -1) {
    throw std::logic_error("rational product outside {-1, 0, +1}");
  }
  return quotient == 1 ? Sign::plus : Sign::minus;
}

std::complex<double> generalized_numerator(std::span<const int> indices,
                                           std::span<const std::complex<double>> gvals) {
  const int n = static_cast<int>(indices.size());
  std::complex<double> numerator = 1.0;
  for (int q = 0; q < n; ++q) {
    for (int p = q + 1; p < n; ++p) {
      numerator *= gvals[static_cast<std::size_t>(indices[p] - 1)] -
                   gvals[static_cast<std::size_t>(indices[q] - 1)];
    }
  }
  return numerator;
}

std::complex<double> generalized_denominator(std::span<const std::complex<double>> gvals) {
  const int n = static_cast<int>(gvals.size());
  std::complex<double> denominator = 1.0;
  for (int q = 0; q < n; ++q) {
    for (int p = q + 1; p < n; ++p) {
      denominator *= gvals[static_cast<std::size_t>(p)] - gvals[static_cast<std::size_t>(q)];
    }
  }
  return denominator;
}

}  // namespace

std::int64_t superfactorial_denominator(int n) {
  if (n < 2) {
    throw std::domain_error("superfactorial_denominator requires n >= 2, got " +
                            std::to_string(n));
  }
  // prod k! for k = 1..8 is the last value inside 64 bits.
  if (n > 9) {
    throw std::overflow_error("superfactorial_denominator(" + std::to_string(n) +
                              ") exceeds 64-bit range");
  }
  std::int64_t acc = 1;
  std::int64_t factorial = 1;
  for (int k = 1; k < n; ++k) {
    factorial *= k;
    acc *= factorial;
  }
  return acc;
}

Sign rational_product(std::span<const int> indices) {
  const int n = static_cast<int>(indices.size());
  if (n < 2) {
    throw std::domain_error("rational_product requires dimension >= 2");
  }
  // (n-1)^(n(n-1)/2) stays inside int64 through n = 7; go wide beyond.
  if (n > 7) return rational_product_wide(indices);

  std::int64_t numerator = 1;
  for (int q = 0; q < n; ++q) {
    for (int p = q + 1; p < n; ++p) {
      const int diff = indices[p] - indices[q];
      if (diff == 0) return Sign::zero;
      numerator *= diff;
    }
  }
  const std::int64_t denominator = superfactorial_denominator(n);
  if (numerator % denominator != 0) {
    throw std::logic_error("rational product division was inexact");
  }
  const std::int64_t quotient = numerator / denominator;
  if (quotient != 1 && quotient != -1) {
    throw std::logic_error("rational product outside {-1, 0, +1}");
  }
  return quotient == 1 ? Sign::plus : Sign::minus;
}

Sign rational_product(const MultiIndex& idx) { return rational_product(idx.values()); }

Sign closed_form_low_dim(std::span<const int> indices) {
  switch (indices.size()) {
    case 2: {
      const int i = indices[0], j = indices[1];
      return sign_of(j - i);
    }
    case 3: {
      const int i = indices[0], j = indices[1], k = indices[2];
      const int product = (j - i) * (k - i) * (k - j);
      if (product % 2 != 0) throw std::logic_error("closed form division by 2 was inexact");
      return sign_from_int(product / 2);
    }
    case 4: {
      const int i = indices[0], j = indices[1], k = indices[2], l = indices[3];
      const int product = (j - i) * (k - i) * (l - i) * (k - j) * (l - j) * (l - k);
      if (product % 12 != 0) throw std::logic_error("closed form division by 12 was inexact");
      return sign_from_int(product / 12);
    }
    default:
      throw std::domain_error("closed_form_low_dim supports dimensions 2..4, got " +
                              std::to_string(indices.size()));
  }
}

Sign closed_form_low_dim(const MultiIndex& idx) { return closed_form_low_dim(idx.values()); }

Sign straub_determinant(std::span<const int> indices) {
  const int n = static_cast<int>(indices.size());
  std::vector<std::int64_t> m(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      m[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
        static_cast<std::size_t>(c)] = kron_delta(indices[r] - (c + 1));
    }
  }
  const std::int64_t det = detail::bareiss_determinant(std::move(m), n);
  if (det < -1 || det > 1) {
    throw std::logic_error("delta-matrix determinant outside {-1, 0, +1}");
  }
  return static_cast<Sign>(static_cast<int>(det));
}

Sign straub_determinant(const MultiIndex& idx) { return straub_determinant(idx.values()); }

std::pair<Sign, EvalDiagnostics> generalized(const MultiIndex& idx, const GeneratorSpec& gen) {
  const int n = idx.dimension();
  if (!generator_validity(gen, n)) {
    throw std::domain_error("generator " + gen.name() + " is degenerate at dimension " +
                            std::to_string(n));
  }
  const auto gvals = generator_values(gen, n);
  const std::complex<double> raw =
      generalized_numerator(idx.values(), gvals) / generalized_denominator(gvals);

  const double nearest = std::round(raw.real());
  EvalDiagnostics diag{raw, static_cast<int>(nearest),
                       std::abs(raw - std::complex<double>(nearest, 0.0))};
  const Sign sign = commit_to_sign(raw, generalized_tolerance, "generalized " + gen.name());
  return {sign, diag};
}

Sign r2_special(R2Form form, int i, int j) {
  require_index_domain(i, 2, "r2_special");
  require_index_domain(j, 2, "r2_special");
  switch (form) {
    case R2Form::delta_form:
      return sign_from_int(kron_delta(j - (4 - 2 * i)) - kron_delta(j - (i - 1)));
    case R2Form::xor_form:
      return sign_from_int(cos_pi_int(j) * ((i - 1) ^ (j - 1)));
    case R2Form::sin_form:
      return commit_to_sign(std::sin((j - i) * std::numbers::pi / 2.0), special_form_tolerance,
                            "r2 sin form");
    case R2Form::sinc_form:
      return commit_to_sign(sinc(std::numbers::pi * (j + 2 * i - 4)) -
                                sinc(std::numbers::pi * (j - i + 1)),
                            special_form_tolerance, "r2 sinc form");
    case R2Form::gamma_form:
      return sign_from_int(gamma_int(j + 1) - gamma_int(i + 1));
  }
  throw std::domain_error("unknown r2 form");
}

Sign r3_special(R3Form form, int i, int j, int k) {
  require_index_domain(i, 3, "r3_special");
  require_index_domain(j, 3, "r3_special");
  require_index_domain(k, 3, "r3_special");
  const int idx[3] = {i, j, k};
  switch (form) {
    case R3Form::signum_gamma: {
      // prod_m sgn(i_{m - Gamma(m) + 2} - i_{Gamma(m)}), positions 1-based.
      int product = 1;
      for (int m = 1; m <= 3; ++m) {
        const int g = static_cast<int>(gamma_int(m));
        const int diff = idx[m - g + 2 - 1] - idx[g - 1];
        if (diff == 0) return Sign::zero;
        if (diff < 0) product = -product;
      }
      return product > 0 ? Sign::plus : Sign::minus;
    }
    case R3Form::delta_poly:
      return sign_from_int(
          kron_delta(2 * j + 3 * i * i - 11 * i + 4) * kron_delta(2 * k - 3 * i * i + 13 * i - 16) -
          kron_delta(2 * j - 3 * i * i + 13 * i - 16) * kron_delta(2 * k + 3 * i * i - 11 * i + 4));
    case R3Form::delta_gamma: {
      const std::int64_t g = gamma_int(i);
      return sign_from_int(kron_delta(j + 3 * g - i - 4) * kron_delta(k - 3 * g + 2 * i - 2) -
                           kron_delta(j - 3 * g + 2 * i - 2) * kron_delta(k + 3 * g - i - 4));
    }
    case R3Form::gamma_closed: {
      const std::int64_t gi = gamma_int(i), gj = gamma_int(j), gk = gamma_int(k);
      return sign_from_int(i * (gj - gk) - gi * (j - k) - gj * k + j * gk);
    }
    case R3Form::sin_form: {
      const double quarter = std::numbers::pi / 4.0;
      return commit_to_sign(2.0 * std::sin((j - i) * quarter) * std::sin((k - i) * quarter) *
                                std::sin((k - j) * quarter),
                            special_form_tolerance, "r3 sin form");
    }
    case R3Form::sinc_poly: {
      const double pi = std::numbers::pi;
      const int a = 3 * i * i - 11 * i + 4;
      const int b = 3 * i * i - 13 * i + 16;
      return commit_to_sign(sinc(pi * (2 * j + a)) * sinc(pi * (2 * k - b)) -
                                sinc(pi * (2 * k + a)) * sinc(pi * (2 * j - b)),
                            special_form_tolerance, "r3 sinc-poly form");
    }
    case R3Form::sinc_gamma: {
      const double pi = std::numbers::pi;
      const auto g = static_cast<double>(gamma_int(i));
      return commit_to_sign(
          sinc(pi * (j + 3 * g - i - 4)) * sinc(pi * (k - 3 * g + 2 * i - 2)) -
              sinc(pi * (k + 3 * g - i - 4)) * sinc(pi * (j - 3 * g + 2 * i - 2)),
          special_form_tolerance, "r3 sinc-gamma form");
    }
  }
  throw std::domain_error("unknown r3 form");
}

const char* to_string(R2Form f) noexcept {
  switch (f) {
    case R2Form::delta_form: return "delta";
    case R2Form::xor_form: return "xor";
    case R2Form::sin_form: return "sin";
    case R2Form::sinc_form: return "sinc";
    case R2Form::gamma_form: return "gamma";
  }
  return "?";
}

const char* to_string(R3Form f) noexcept {
  switch (f) {
    case R3Form::signum_gamma: return "signum-gamma";
    case R3Form::delta_poly: return "delta-poly";
    case R3Form::delta_gamma: return "delta-gamma";
    case R3Form::gamma_closed: return "gamma-closed";
    case R3Form::sin_form: return "sin";
    case R3Form::sinc_poly: return "sinc-poly";
    case R3Form::sinc_gamma: return "sinc-gamma";
  }
  return "?";
}

BackendId BackendId::sgn_product() {
  BackendId id;
  id.kind_ = Kind::sgn_product;
  return id;
}

BackendId BackendId::rational_product() {
  BackendId id;
  id.kind_ = Kind::rational_product;
  return id;
}

BackendId BackendId::straub_determinant() {
  BackendId id;
  id.kind_ = Kind::straub_determinant;
  return id;
}

BackendId BackendId::closed_form_low_dim() {
  BackendId id;
  id.kind_ = Kind::closed_form_low_dim;
  return id;
}

BackendId BackendId::generalized(GeneratorSpec gen) {
  BackendId id;
  id.kind_ = Kind::generalized;
  id.generator_ = std::move(gen);
  return id;
}

BackendId BackendId::r2(R2Form form) {
  BackendId id;
  id.kind_ = Kind::r2_special;
  id.r2_form_ = form;
  return id;
}

BackendId BackendId::r3(R3Form form) {
  BackendId id;
  id.kind_ = Kind::r3_special;
  id.r3_form_ = form;
  return id;
}

std::optional<BackendId> BackendId::parse(std::string_view name) {
  if (name == "oracle") return oracle();
  if (name == "sgn-product") return sgn_product();
  if (name == "rational-product") return rational_product();
  if (name == "straub-determinant") return straub_determinant();
  if (name == "closed-form-low-dim") return closed_form_low_dim();
  static constexpr std::pair<std::string_view, R2Form> r2_names[] = {
      {"r2-delta", R2Form::delta_form},   {"r2-xor", R2Form::xor_form},
      {"r2-sin", R2Form::sin_form},       {"r2-sinc", R2Form::sinc_form},
      {"r2-gamma", R2Form::gamma_form},
  };
  for (const auto& [r2_name, form] : r2_names) {
    if (name == r2_name) return r2(form);
  }
  static constexpr std::pair<std::string_view, R3Form> r3_names[] = {
      {"r3-signum-gamma", R3Form::signum_gamma}, {"r3-delta-poly", R3Form::delta_poly},
      {"r3-delta-gamma", R3Form::delta_gamma},   {"r3-gamma-closed", R3Form::gamma_closed},
      {"r3-sin", R3Form::sin_form},              {"r3-sinc-poly", R3Form::sinc_poly},
      {"r3-sinc-gamma", R3Form::sinc_gamma},
  };
  for (const auto& [r3_name, form] : r3_names) {
    if (name == r3_name) return r3(form);
  }
  return std::nullopt;
}

bool BackendId::valid_for(int n) const noexcept {
  if (n < 2) return false;
  switch (kind_) {
    case Kind::closed_form_low_dim: return n <= 4;
    case Kind::r2_special: return n == 2;
    case Kind::r3_special: return n == 3;
    default: return true;
  }
}

std::string BackendId::name() const {
  switch (kind_) {
    case Kind::oracle: return "oracle";
    case Kind::sgn_product: return "sgn-product";
    case Kind::rational_product: return "rational-product";
    case Kind::straub_determinant: return "straub-determinant";
    case Kind::closed_form_low_dim: return "closed-form-low-dim";
    case Kind::generalized: return "generalized-" + generator_->name();
    case Kind::r2_special: return std::string("r2-") + to_string(*r2_form_);
    case Kind::r3_special: return std::string("r3-") + to_string(*r3_form_);
  }
  return "?";
}

std::vector<BackendId> exact_backends() {
  return {BackendId::oracle(), BackendId::sgn_product(), BackendId::rational_product(),
          BackendId::straub_determinant()};
}

std::vector<BackendId> all_backends_for(int n) {
  std::vector<BackendId> out = exact_backends();
  if (n <= 4) out.push_back(BackendId::closed_form_low_dim());
  if (n == 2) {
    for (R2Form f : {R2Form::delta_form, R2Form::xor_form, R2Form::sin_form, R2Form::sinc_form,
                     R2Form::gamma_form}) {
      out.push_back(BackendId::r2(f));
    }
  }
  if (n == 3) {
    for (R3Form f : {R3Form::signum_gamma, R3Form::delta_poly, R3Form::delta_gamma,
                     R3Form::gamma_closed, R3Form::sin_form, R3Form::sinc_poly,
                     R3Form::sinc_gamma}) {
      out.push_back(BackendId::r3(f));
    }
  }
  if (n <= 5) {
    std::vector<GeneratorSpec> generators = {GeneratorSpec::identity(1.0),
                                             GeneratorSpec::cosine(0.9)};
    for (const auto& preset : preset_generator_names()) {
      generators.push_back(preset_generator(preset));
    }
    for (const auto& gen : generators) {
      if (generator_validity(gen, n)) out.push_back(BackendId::generalized(gen));
    }
  }
  return out;
}

BackendEvaluator::BackendEvaluator(BackendId id, int n) : id_(std::move(id)), n_(n) {
  if (!id_.valid_for(n)) {
    throw std::domain_error("backend " + id_.name() + " is not valid for dimension " +
                            std::to_string(n));
  }
  if (id_.kind() == BackendId::Kind::generalized) {
    const GeneratorSpec& gen = *id_.generator();
    if (!generator_validity(gen, n)) {
      throw std::domain_error("generator " + gen.name() + " is degenerate at dimension " +
                              std::to_string(n));
    }
    gvals_ = generator_values(gen, n);
    denominator_ = generalized_denominator(gvals_);
  }
}

Sign BackendEvaluator::operator()(std::span<const int> indices) const {
  switch (id_.kind()) {
    case BackendId::Kind::oracle:
      return epsilon_oracle(indices);
    case BackendId::Kind::sgn_product:
      return levi::sgn_product(indices);
    case BackendId::Kind::rational_product:
      return levi::rational_product(indices);
    case BackendId::Kind::straub_determinant:
      return levi::straub_determinant(indices);
    case BackendId::Kind::closed_form_low_dim:
      return levi::closed_form_low_dim(indices);
    case BackendId::Kind::generalized: {
      const std::complex<double> raw = generalized_numerator(indices, gvals_) / denominator_;
      return commit_to_sign(raw, generalized_tolerance, "generalized " + id_.generator()->name());
    }
    case BackendId::Kind::r2_special:
      require_dimension(indices, 2, "r2 backend");
      return r2_special(*id_.r2_form(), indices[0], indices[1]);
    case BackendId::Kind::r3_special:
      require_dimension(indices, 3, "r3 backend");
      return r3_special(*id_.r3_form(), indices[0], indices[1], indices[2]);
  }
  throw std::logic_error("unknown backend kind");
}

}  // namespace levi
