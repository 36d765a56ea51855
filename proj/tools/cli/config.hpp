#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace catalyst::cli {

using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

/// Parses `key = value` lines. Blank lines and `#` comments (whole-line or
/// trailing) are ignored; a repeated key keeps its last value. Throws
/// catalyst::Error(invalid_input) on malformed lines.
ConfigEntries parse_config(std::istream& in, const std::string& source = "<config>");
ConfigEntries read_config_file(const std::filesystem::path& path);

/// Splices config entries into a subcommand's argument list as `--key value`
/// pairs, skipping any key already given on the command line, so that
/// command-line flags win. `args` excludes the program name and subcommand.
std::vector<std::string> merge_config(const std::vector<std::string>& args,
                                      const ConfigEntries& entries);

}  // namespace catalyst::cli
