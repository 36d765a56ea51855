#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace catalyst::cli {

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Returns the process exit status (0 ok, 1 failed check,
/// 2 invalid input).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace catalyst::cli
