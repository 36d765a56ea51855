#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace catalyst::cli {

/// Shortest decimal string that round-trips to `value` ("nan"/"inf" for
/// non-finite values).
std::string format_double(double value);

/// Comma-separated rows terminated by '\n'. Fields are written verbatim, so
/// callers only pass numbers and fixed identifiers.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void header(const std::vector<std::string_view>& names);

  CsvWriter& field(double value);
  CsvWriter& field(std::optional<double> value);  // empty when absent
  CsvWriter& field(long long value);
  CsvWriter& field(int value) { return field(static_cast<long long>(value)); }
  CsvWriter& field(std::string_view text);
  void end_row();

 private:
  void separator();

  std::ostream& out_;
  bool row_started_ = false;
};

extern const std::vector<std::string_view> kSweepColumns;
extern const std::vector<std::string_view> kWarmStartColumns;
extern const std::vector<std::string_view> kSimulateColumns;

}  // namespace catalyst::cli
