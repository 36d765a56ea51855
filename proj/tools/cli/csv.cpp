#include "cli/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace catalyst::cli {

const std::vector<std::string_view> kSweepColumns = {
    "kappa", "c",        "eta",         "psi",      "epsilon", "d",
    "kappa_hat", "baseline", "improvement", "overhead", "total",   "status"};

const std::vector<std::string_view> kWarmStartColumns = {
    "kappa",     "gd_steps", "c",           "eta",      "psi",   "epsilon", "d",
    "kappa_hat", "baseline", "improvement", "overhead", "total", "status"};

const std::vector<std::string_view> kSimulateColumns = {
    "n",      "kappa",  "seed",         "epsilon",   "c",           "psi",
    "solver", "eta",    "d",            "eps1",      "eps2",        "degree",
    "solver_error", "ppa_error", "total_error", "status"};

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  (void)ec;  // 32 chars always suffice for the shortest form of a double
  return std::string(buf.data(), end);
}

void CsvWriter::header(const std::vector<std::string_view>& names) {
  for (auto name : names) field(name);
  end_row();
}

void CsvWriter::separator() {
  if (row_started_) out_ << ',';
  row_started_ = true;
}

CsvWriter& CsvWriter::field(double value) {
  separator();
  out_ << format_double(value);
  return *this;
}

CsvWriter& CsvWriter::field(std::optional<double> value) {
  separator();
  if (value) out_ << format_double(*value);
  return *this;
}

CsvWriter& CsvWriter::field(long long value) {
  separator();
  out_ << value;
  return *this;
}

CsvWriter& CsvWriter::field(std::string_view text) {
  separator();
  out_ << text;
  return *this;
}

void CsvWriter::end_row() {
  out_ << '\n';
  row_started_ = false;
}

}  // namespace catalyst::cli
