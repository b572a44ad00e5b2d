#pragma once

#include <stdexcept>
#include <string>

namespace schurbound {

enum class ErrorKind {
  DimensionMismatch,
  NotHermitian,
  NotConverged,
  InvalidArgument,
  NotPositiveSemidefinite,
  Degenerate,
  BudgetExceeded,
  NotProjection,
  ResidualTooLarge,
};

const char* to_string(ErrorKind kind) noexcept;

/// Raised by every library operation whose precondition fails.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace schurbound
