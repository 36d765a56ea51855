#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace catalyst::cli {

struct SuiteResult {
  std::string name;
  bool passed = false;
  long long checks = 0;
  double worst = 0.0;      // largest observed violation ratio (<= 1 passes)
  std::string detail;
};

struct VerifySettings {
  std::uint64_t seed = 20240607;
  // Multiplies the closed-form kappa_hat before comparison; any value other
  // than 1 makes the lemma1 suite fail, which exercises the harness itself.
  double kappa_hat_scale = 1.0;
};

/// Names accepted by run_suite, in default execution order.
const std::vector<std::string_view>& suite_names();

/// Runs one property suite. Throws catalyst::Error(invalid_input) for an
/// unknown name.
SuiteResult run_suite(std::string_view name, const VerifySettings& settings);

}  // namespace catalyst::cli
