#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace qkdpon {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A physical quantity is non-finite or outside its domain.
class InvalidQuantityError : public Error {
 public:
  using Error::Error;
};

/// A network description violates a structural constraint.
class InvalidTopologyError : public Error {
 public:
  using Error::Error;
};

/// A classical-path operation was asked about a non-classical wavelength
/// (or a wavelength with no attenuation entry).
class WrongChannelError : public Error {
 public:
  using Error::Error;
};

/// Degenerate numeric input (zero denominator and the like).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// A measured value lies outside the model's admissible range.
class OutOfModelError : public Error {
 public:
  using Error::Error;
};

/// Protocol parameters violate their invariants.
class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

/// Background counts exceed the gate capacity.
class SaturationError : public Error {
 public:
  using Error::Error;
};

/// File I/O failure; the message carries the path.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Invalid scenario/topology configuration. Carries every violation found,
/// not just the first.
class ConfigurationError : public Error {
 public:
  explicit ConfigurationError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "configuration invalid:";
    for (const auto& s : v) out += "\n  - " + s;
    return out;
  }

  std::vector<std::string> violations_;
};

}  // namespace qkdpon
