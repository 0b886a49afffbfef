#pragma once

#include <cstdint>
#include <initializer_list>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace urbansir {

/// Minimal reader for the comma-separated files this project produces and
/// consumes (no quoting; blank lines and `#` comment lines are skipped).
class CsvReader {
 public:
  CsvReader(std::istream& in, std::string source_name);

  /// Reads the header line and checks it matches `columns` exactly.
  void expect_header(std::initializer_list<std::string_view> columns);
  /// Reads the header line and returns its fields.
  std::vector<std::string> header();

  std::optional<std::vector<std::string>> next();

  std::int64_t integer(const std::vector<std::string>& row, std::size_t column) const;
  double real(const std::vector<std::string>& row, std::size_t column) const;
  const std::string& field(const std::vector<std::string>& row, std::size_t column) const;

  /// "<source>:<line>" for error messages.
  std::string where() const;

 private:
  std::optional<std::vector<std::string>> read_fields();

  std::istream& in_;
  std::string source_;
  std::size_t line_ = 0;
  std::size_t width_ = 0;
};

std::vector<std::string> split_csv_line(std::string_view line);

/// Shortest round-trippable text for a double ("%.17g" trimmed); integers are
/// printed without a decimal point.
std::string format_number(double value);

/// Writes one CSV row from heterogeneous fields.
class CsvRow {
 public:
  CsvRow& operator<<(std::string_view s);
  CsvRow& operator<<(const std::string& s) { return *this << std::string_view(s); }
  CsvRow& operator<<(const char* s) { return *this << std::string_view(s); }
  CsvRow& operator<<(double v);
  CsvRow& operator<<(std::int64_t v);
  CsvRow& operator<<(int v) { return *this << static_cast<std::int64_t>(v); }
  CsvRow& operator<<(unsigned v) { return *this << static_cast<std::int64_t>(v); }
  CsvRow& operator<<(std::uint64_t v);

  const std::string& str() const { return line_; }

 private:
  void separator();
  std::string line_;
  bool first_ = true;
};

inline std::ostream& operator<<(std::ostream& os, const CsvRow& row) {
  return os << row.str() << '\n';
}

}  // namespace urbansir
