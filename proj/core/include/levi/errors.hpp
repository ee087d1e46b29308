#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace levi {

/// Arity of an index tuple does not match the requested dimension.
class dimension_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// An index value lies outside [1, n], or a position argument is out of range.
class index_range_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A floating-point backend produced a value too far from any admissible
/// integer. Carries the raw value so callers can see how bad it was.
class evaluation_error : public std::runtime_error {
public:
  evaluation_error(const std::string& what, std::complex<double> raw)
      : std::runtime_error(what), raw_(raw) {}

  std::complex<double> raw_value() const noexcept { return raw_; }

private:
  std::complex<double> raw_;
};

}  // namespace levi
