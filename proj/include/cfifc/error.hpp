#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cfifc {

enum class errc {
  invalid_argument,
  not_positive_definite,
  numerical_instability,
  radius_exceeded,
  precision_cap,
  zero_vector,
  not_coprime,
  not_unimodular,
  degenerate_map,
  invalid_slot_count,
  zero_eta,
  invalid_snr,
  config_parse,
  unknown_key,
  io_error,
};

std::string_view to_string(errc code);

// True for failures of the numerics themselves (CLI exit code 3); everything
// else is a usage or configuration problem (exit code 2).
bool is_numerical(errc code);

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message);

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

class config_error : public error {
 public:
  config_error(errc code, const std::string& message, int line = 0);

  // 1-based line in the config file, 0 when not tied to a line.
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace cfifc
