#include "cfifc/csv.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "cfifc/error.hpp"

namespace cfifc {
namespace {

void append_vector(std::string& out, IntVec2 v) {
  out += std::to_string(v.x);
  out += ':';
  out += std::to_string(v.y);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = line.find(sep, start);
    fields.push_back(line.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return fields;
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& what) {
  throw error(errc::invalid_argument, "CSV line " + std::to_string(line_no) + ": " + what);
}

double parse_double(std::string_view text, std::size_t line_no) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    malformed(line_no, "bad number '" + std::string(text) + "'");
  }
  return value;
}

std::int64_t parse_int(std::string_view text, std::size_t line_no) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    malformed(line_no, "bad integer '" + std::string(text) + "'");
  }
  return value;
}

IntVec2 parse_vector(std::string_view text, std::size_t line_no) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) malformed(line_no, "bad vector '" + std::string(text) + "'");
  return {parse_int(parts[0], line_no), parse_int(parts[1], line_no)};
}

}  // namespace

std::string format_number(double value) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::string(buf, static_cast<std::size_t>(n));
}

double round_to_12_digits(double value) { return std::strtod(format_number(value).c_str(), nullptr); }

std::string serialize_csv(std::span<const SweepRow> rows) {
  std::string out(csv_header);
  out += '\n';
  for (const SweepRow& row : rows) {
    out += format_number(row.g);
    out += ',';
    out += format_number(row.snr_db);
    out += ',';
    out += to_string(row.regime);
    out += ',';
    out += format_number(row.lambda1);
    out += ',';
    out += format_number(row.lambda2);
    out += ',';
    append_vector(out, row.v1);
    out += ',';
    append_vector(out, row.v2);
    for (double v : {row.rate_per_user, row.sum_rate, row.upper_bound_sum, row.gap}) {
      out += ',';
      out += format_number(v);
    }
    out += '\n';
  }
  return out;
}

std::vector<SweepRow> parse_csv(std::string_view text) {
  std::vector<SweepRow> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line_no == 1) {
      if (line != csv_header) malformed(line_no, "unexpected header");
      continue;
    }
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 11) malformed(line_no, "expected 11 fields");
    SweepRow row;
    row.g = parse_double(f[0], line_no);
    row.snr_db = parse_double(f[1], line_no);
    const auto regime = regime_from_string(f[2]);
    if (!regime) malformed(line_no, "unknown regime '" + std::string(f[2]) + "'");
    row.regime = *regime;
    row.lambda1 = parse_double(f[3], line_no);
    row.lambda2 = parse_double(f[4], line_no);
    row.v1 = parse_vector(f[5], line_no);
    row.v2 = parse_vector(f[6], line_no);
    row.rate_per_user = parse_double(f[7], line_no);
    row.sum_rate = parse_double(f[8], line_no);
    row.upper_bound_sum = parse_double(f[9], line_no);
    row.gap = parse_double(f[10], line_no);
    rows.push_back(row);
  }
  if (line_no == 0) malformed(1, "missing header");
  return rows;
}

}  // namespace cfifc
