#include "cfifc/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cfifc/error.hpp"

namespace cfifc {
namespace {

constexpr std::array<std::string_view, 8> keys = {
    "snr_db", "g_min", "g_max", "steps", "mode", "slots", "coeff_bound", "output_path"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string unquote(std::string_view v) {
  if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front()) {
    return std::string(v.substr(1, v.size() - 2));
  }
  return std::string(v);
}

template <typename T>
T parse_number(std::string_view key, const ConfigEntry& entry) {
  T value{};
  const char* begin = entry.value.data();
  const char* end = begin + entry.value.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw config_error(errc::config_parse,
                       "bad value '" + entry.value + "' for " + std::string(key), entry.line);
  }
  return value;
}

}  // namespace

std::span<const std::string_view> config_keys() { return keys; }

ConfigOverlay parse_config_text(std::string_view text) {
  ConfigOverlay overlay;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw config_error(errc::config_parse, "expected 'key = value'", line_no);
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw config_error(errc::config_parse, "missing key", line_no);
    if (value.empty()) {
      throw config_error(errc::config_parse, "missing value for " + std::string(key), line_no);
    }
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw config_error(errc::unknown_key, "unknown key '" + std::string(key) + "'", line_no);
    }
    if (overlay.contains(key)) {
      throw config_error(errc::config_parse, "duplicate key '" + std::string(key) + "'", line_no);
    }
    overlay.emplace(std::string(key), ConfigEntry{unquote(value), line_no});
  }
  return overlay;
}

ConfigOverlay parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw config_error(errc::config_parse, "cannot read config file '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

void apply_config(const ConfigOverlay& overlay, SweepSpec& spec) {
  for (const auto& [key, entry] : overlay) {
    if (key == "snr_db") {
      spec.snr_db = parse_number<double>(key, entry);
    } else if (key == "g_min") {
      spec.g_min = parse_number<double>(key, entry);
    } else if (key == "g_max") {
      spec.g_max = parse_number<double>(key, entry);
    } else if (key == "steps") {
      spec.steps = parse_number<int>(key, entry);
    } else if (key == "slots") {
      spec.slots = parse_number<int>(key, entry);
    } else if (key == "coeff_bound") {
      spec.coeff_bound = parse_number<int>(key, entry);
    } else if (key == "mode") {
      const auto mode = sweep_mode_from_string(entry.value);
      if (!mode) {
        throw config_error(errc::config_parse, "unknown mode '" + entry.value + "'", entry.line);
      }
      spec.mode = *mode;
    } else if (key == "output_path") {
      spec.output_path = entry.value;
    } else {
      throw config_error(errc::unknown_key, "unknown key '" + key + "'", entry.line);
    }
  }
}

}  // namespace cfifc
