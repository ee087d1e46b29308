#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "levi/generator.hpp"
#include "levi/multi_index.hpp"
#include "levi/parity.hpp"

namespace levi {

/// Dimension-2 closed forms.
enum class R2Form { delta_form, xor_form, sin_form, sinc_form, gamma_form };

/// Dimension-3 closed forms.
enum class R3Form {
  signum_gamma,
  delta_poly,
  delta_gamma,
  gamma_closed,
  sin_form,
  sinc_poly,
  sinc_gamma
};

const char* to_string(R2Form f) noexcept;
const char* to_string(R3Form f) noexcept;

/// Raw result of a floating-point backend before it is committed to a Sign.
struct EvalDiagnostics {
  std::complex<double> raw_value;
  int rounded;
  double deviation;  // |raw_value - rounded|
};

/// A floating backend result is accepted only if its pre-rounding deviation
/// stays below this.
inline constexpr double generalized_tolerance = 1e-6;

/// Rounding bound for the sin/sinc special forms in R2/R3.
inline constexpr double special_form_tolerance = 1e-9;

/// prod_{k=1}^{n-1} k!, the normalizing denominator of the rational-product
/// form (1, 2, 12, 288 for n = 2..5). Throws std::overflow_error when the
/// value no longer fits in 64 bits (n > 9).
std::int64_t superfactorial_denominator(int n);

/// Vandermonde-style rational product: prod_{p>q} (i_p - i_q) divided by the
/// superfactorial denominator, in exact integer arithmetic (wide integers
/// above n = 7, so no overflow for any practical dimension).
Sign rational_product(std::span<const int> indices);
Sign rational_product(const MultiIndex& idx);

/// Hand-contracted product forms for n in {2, 3, 4}:
///   n=2: (j-i); n=3: (j-i)(k-i)(k-j)/2; n=4: (j-i)(k-i)(l-i)(k-j)(l-j)(l-k)/12.
/// Throws std::domain_error for other dimensions.
Sign closed_form_low_dim(std::span<const int> indices);
Sign closed_form_low_dim(const MultiIndex& idx);

/// Determinant of the n x n matrix M[r][c] = kron_delta(i_r - c), computed by
/// fraction-free integer elimination.
Sign straub_determinant(std::span<const int> indices);
Sign straub_determinant(const MultiIndex& idx);

/// Generalized evaluation through an injective generator:
///   prod_{m=1}^{n-1} prod_{k=1}^{n-m} (G(i_{n+1-m} L) - G(i_k L)) / (G((n+1-m) L) - G(k L)).
/// Requires generator_validity(gen, n) (std::domain_error otherwise). The raw
/// complex value is rounded to the nearest integer; a deviation at or above
/// generalized_tolerance, or a rounded value outside {-1,0,+1}, raises
/// evaluation_error carrying the raw value.
std::pair<Sign, EvalDiagnostics> generalized(const MultiIndex& idx, const GeneratorSpec& gen);

/// Dimension-2 closed forms, i, j in {1, 2}. Integer forms are exact; the
/// sin/sinc forms round with deviation < special_form_tolerance.
Sign r2_special(R2Form form, int i, int j);

/// Dimension-3 closed forms, i, j, k in {1, 2, 3}.
Sign r3_special(R3Form form, int i, int j, int k);

/// Identifies one evaluation strategy, including any generator payload.
/// Kebab-case names: "oracle", "sgn-product", "rational-product",
/// "straub-determinant", "closed-form-low-dim", "generalized" (with its
/// generator label appended), "r2-delta", ..., "r3-sinc-gamma".
class BackendId {
public:
  enum class Kind {
    oracle,
    sgn_product,
    rational_product,
    straub_determinant,
    closed_form_low_dim,
    generalized,
    r2_special,
    r3_special
  };

  BackendId() = default;  // oracle

  static BackendId oracle() { return BackendId{}; }
  static BackendId sgn_product();
  static BackendId rational_product();
  static BackendId straub_determinant();
  static BackendId closed_form_low_dim();
  static BackendId generalized(GeneratorSpec gen);
  static BackendId r2(R2Form form);
  static BackendId r3(R3Form form);

  /// Parses the non-generalized kebab-case names; nullopt if unknown.
  static std::optional<BackendId> parse(std::string_view name);

  Kind kind() const noexcept { return kind_; }
  const std::optional<GeneratorSpec>& generator() const noexcept { return generator_; }
  std::optional<R2Form> r2_form() const noexcept { return r2_form_; }
  std::optional<R3Form> r3_form() const noexcept { return r3_form_; }

  /// Structural dimension check (closed form needs n <= 4, r2/r3 pin n);
  /// generator injectivity is checked separately when an evaluator is built.
  bool valid_for(int n) const noexcept;

  std::string name() const;

  bool operator==(const BackendId&) const = default;

private:
  Kind kind_ = Kind::oracle;
  std::optional<GeneratorSpec> generator_;
  std::optional<R2Form> r2_form_;
  std::optional<R3Form> r3_form_;
};

/// The four strategies that are exact at every dimension.
std::vector<BackendId> exact_backends();

/// Everything that can be verified at dimension n: the exact set, the closed
/// forms where defined, and the preset generators (floating evaluation is
/// kept to n <= 5, where its deviation budget is established).
std::vector<BackendId> all_backends_for(int n);

/// A backend bound to a fixed dimension: validates the pairing once,
/// precomputes generator tables, then evaluates tuples cheaply. Evaluation
/// assumes validated indices (1..n, length n) and is const and thread-safe.
class BackendEvaluator {
public:
  BackendEvaluator(BackendId id, int n);

  Sign operator()(std::span<const int> indices) const;
  Sign operator()(const MultiIndex& idx) const { return (*this)(idx.values()); }

  const BackendId& id() const noexcept { return id_; }
  int dimension() const noexcept { return n_; }

private:
  BackendId id_;
  int n_ = 0;
  std::vector<std::complex<double>> gvals_;   // generalized: G(k*lambda), k = 1..n
  std::complex<double> denominator_ = 1.0;    // generalized: constant Vandermonde
};

}  // namespace levi
