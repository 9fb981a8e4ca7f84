#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bouquet {

/// Base class of every error raised by the library. `where()` names the
/// module and operation that raised it, e.g. "periods::per_census".
class Error : public std::runtime_error {
 public:
  Error(std::string where, const std::string& message);

  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

/// Malformed or out-of-contract input (bad index, mixed signs, empty word).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Materializing words or lift pieces would exceed the configured budget.
class BudgetError : public Error {
 public:
  BudgetError(std::string where, const std::string& message,
              std::uint64_t offending_power);

  /// Smallest iterate that exceeds the budget.
  std::uint64_t offending_power() const noexcept { return offending_power_; }

 private:
  std::uint64_t offending_power_;
};

/// Two routes that must agree exactly did not (e.g. a negative period count).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// An operation's precondition on the map class does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The map cannot be realized in the expanding class: some iterate has a
/// unit-slope piece through the diagonal.
class DegenerateMapError : public Error {
 public:
  using Error::Error;
};

/// All-roots iteration hit its cap before reaching the residual tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(std::string where, const std::string& message,
                   double residual);

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace bouquet
