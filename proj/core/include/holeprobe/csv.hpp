// Minimal RFC-4180 CSV assembly: header row mandatory, CRLF line breaks,
// fields quoted only when they contain a comma, a quote, or a line break.
// Numbers are rendered with the shortest representation that parses back
// to the identical double, so emitted tables are byte-stable and lossless.

#pragma once

#include <string>
#include <vector>

namespace holeprobe::cli {

// Shortest round-trip decimal form of v ("0.4", "1.3e-10"); "inf"/"nan"
// pass through by name rather than being silently dropped.
std::string format_double(double v);

std::string csv_escape(const std::string& field);

class CsvBuilder {
 public:
  explicit CsvBuilder(std::vector<std::string> header);

  // Cell counts must match the header; this is an internal invariant of the
  // emitters, so violations throw std::logic_error rather than a user error.
  void row(const std::vector<std::string>& cells);

  const std::string& str() const { return out_; }

 private:
  size_t width_;
  std::string out_;
};

}  // namespace holeprobe::cli
