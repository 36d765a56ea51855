#include "cli/config.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <set>

#include "catalyst/errors.hpp"

namespace catalyst::cli {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// "--key" or "--key=value" -> "key"; anything else -> "".
std::string flag_name(const std::string& token) {
  if (token.size() < 3 || token.compare(0, 2, "--") != 0) return {};
  const auto eq = token.find('=');
  return token.substr(2, eq == std::string::npos ? std::string::npos : eq - 2);
}

}  // namespace

ConfigEntries parse_config(std::istream& in, const std::string& source) {
  ConfigEntries entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = source + ":" + std::to_string(line_no);
    require(eq != std::string::npos, ErrorKind::invalid_input,
            where + ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    require(!key.empty(), ErrorKind::invalid_input, where + ": empty key");
    require(key.find_first_of(" \t") == std::string::npos, ErrorKind::invalid_input,
            where + ": key contains whitespace");
    require(!value.empty(), ErrorKind::invalid_input, where + ": empty value for '" + key + "'");
    auto existing = std::find_if(entries.begin(), entries.end(),
                                 [&key](const auto& kv) { return kv.first == key; });
    if (existing != entries.end()) {
      existing->second = std::move(value);
    } else {
      entries.emplace_back(std::move(key), std::move(value));
    }
  }
  return entries;
}

ConfigEntries read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::invalid_input,
          "cannot open config file '" + path.string() + "'");
  return parse_config(in, path.string());
}

std::vector<std::string> merge_config(const std::vector<std::string>& args,
                                      const ConfigEntries& entries) {
  std::set<std::string> given;
  for (const auto& token : args) {
    if (auto name = flag_name(token); !name.empty()) given.insert(std::move(name));
  }
  std::vector<std::string> merged;
  for (const auto& [key, value] : entries) {
    if (given.count(key) != 0) continue;
    merged.push_back("--" + key);
    merged.push_back(value);
  }
  merged.insert(merged.end(), args.begin(), args.end());
  return merged;
}

}  // namespace catalyst::cli
