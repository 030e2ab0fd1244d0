#include "holeprobe/csv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace holeprobe::cli {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string csv_escape(const std::string& field) {
  const bool needs_quotes =
      field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

CsvBuilder::CsvBuilder(std::vector<std::string> header) : width_(header.size()) {
  if (width_ == 0) throw std::logic_error("CSV needs at least one column");
  row(header);
}

void CsvBuilder::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) {
    throw std::logic_error("CSV row width does not match the header");
  }
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ += ',';
    out_ += csv_escape(cells[i]);
  }
  out_ += "\r\n";
}

}  // namespace holeprobe::cli
