#include "catalyst/errors.hpp"

namespace catalyst {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_input: return "invalid-input";
    case ErrorKind::singular_matrix: return "singular-matrix";
    case ErrorKind::not_positive_definite: return "not-positive-definite";
    case ErrorKind::degenerate_target: return "degenerate-target";
    case ErrorKind::invalid_split: return "invalid-split";
    case ErrorKind::invalid_budget: return "invalid-budget";
    case ErrorKind::hypothesis_violation: return "hypothesis-violation";
    case ErrorKind::divergence_risk: return "divergence-risk";
    case ErrorKind::non_convergence: return "non-convergence";
    case ErrorKind::unknown_model: return "unknown-model";
    case ErrorKind::unsupported_model: return "unsupported-model";
  }
  return "unknown-error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace catalyst
