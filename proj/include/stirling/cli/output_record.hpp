#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "stirling/bracket.hpp"
#include "stirling/index.hpp"

namespace stirling::cli {

enum class Format { Text, Csv, Jsonl };

Format parse_format(std::string_view name);

/// One bracket or exact value as emitted by the CLI.
struct OutputRecord {
  unsigned n = 0;
  unsigned m = 0;
  std::string method;
  double lower_log = 0;
  double upper_log = 0;
  /// upper_log - lower_log, infinite when either endpoint is.
  double rel_width = 0;
  std::string regime;
  std::optional<bool> verified;
  /// Full decimal value for exact records.
  std::optional<std::string> exact;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

OutputRecord make_record(const Index& idx, const BoundBracket& bracket, std::string_view regime);

/// Frozen CSV schema: n,m,method,lower_log,upper_log,rel_width,regime,verified
std::string csv_header();
/// With linear set, exact records print the decimal value in both endpoint columns.
std::string to_csv(const OutputRecord& r, bool linear);

std::string to_jsonl(const OutputRecord& r);
/// Inverse of to_jsonl. Throws std::invalid_argument on malformed input.
OutputRecord parse_jsonl(std::string_view line);

std::string to_text(const OutputRecord& r, bool linear);

/// Shortest decimal that round-trips the double; "inf"/"-inf" for infinities.
std::string format_real(double x);

}  // namespace stirling::cli
