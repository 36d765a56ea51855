#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace catalyst {

enum class ErrorKind {
  invalid_input,
  singular_matrix,
  not_positive_definite,
  degenerate_target,
  invalid_split,
  invalid_budget,
  hypothesis_violation,
  divergence_risk,
  non_convergence,
  unknown_model,
  unsupported_model,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every precondition failure in the library surfaces as this type; `kind()`
// lets callers (the CLI, sweeps) decide whether a failure is per-cell or fatal.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace catalyst
