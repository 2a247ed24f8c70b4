// SPDX-License-Identifier: Apache-2.0
#ifndef TIETZ_ERRORS_HPP_
#define TIETZ_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tietz {

/// Base of every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series failed to reach its tolerance within the allowed number of terms.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, int terms, double last_term)
      : Error(what + " (terms=" + std::to_string(terms) +
              ", last |term|=" + std::to_string(last_term) + ")"),
        terms_(terms),
        last_term_(last_term) {}

  int terms() const noexcept { return terms_; }
  double last_term() const noexcept { return last_term_; }

 private:
  int terms_;
  double last_term_;
};

/// Connection formula evaluated at parameters where it is singular.
class DegenerateParameterError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at (or within rounding distance of) a pole.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, double location)
      : Error(what + " (pole at " + std::to_string(location) + ")"),
        location_(location) {}

  double location() const noexcept { return location_; }

 private:
  double location_;
};

/// Operation requested for a deformation parameter outside its branch.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// Energy for which the spectral parameters leave the real domain.
class EnergyRangeError : public Error {
 public:
  using Error::Error;
};

/// Quantum numbers beyond the bound-state cutoff.
class NoSuchStateError : public Error {
 public:
  using Error::Error;
};

/// Numerical breakdown in an iterative eigensolver.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, std::size_t index)
      : Error(what + " (index " + std::to_string(index) + ")"), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Invalid or incomplete run configuration.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& field, const std::string& what)
      : Error(field + ": " + what), field_(field) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace tietz

#endif  // TIETZ_ERRORS_HPP_
