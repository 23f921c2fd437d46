#pragma once

// Flat "key = value" configuration files. Keys mirror SweepSpec fields:
//
//   # seven-slot precoded sweep
//   snr_db = 65
//   g_min = 1
//   g_max = 4
//   steps = 3001
//   mode = precoded
//   slots = 7
//   coeff_bound = 20
//   output_path = precoded7.csv
//
// Blank lines and '#' comments are ignored. Precedence when building a
// SweepSpec: command-line flag > config file > built-in default.

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "cfifc/sweep.hpp"

namespace cfifc {

struct ConfigEntry {
  std::string value;
  int line = 0;
};

using ConfigOverlay = std::map<std::string, ConfigEntry, std::less<>>;

std::span<const std::string_view> config_keys();

// Throws config_error(config_parse) with the offending line for syntax
// errors and duplicates, config_error(unknown_key) for keys outside
// config_keys().
ConfigOverlay parse_config_text(std::string_view text);
ConfigOverlay parse_config(const std::filesystem::path& path);

// Overwrites the fields of spec named in the overlay. Throws
// config_error(config_parse) for values that do not parse.
void apply_config(const ConfigOverlay& overlay, SweepSpec& spec);

}  // namespace cfifc
