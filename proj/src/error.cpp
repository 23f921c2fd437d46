#include "cfifc/error.hpp"

namespace cfifc {

std::string_view to_string(errc code) {
  switch (code) {
    case errc::invalid_argument: return "InvalidArgument";
    case errc::not_positive_definite: return "NotPositiveDefinite";
    case errc::numerical_instability: return "NumericalInstability";
    case errc::radius_exceeded: return "RadiusExceeded";
    case errc::precision_cap: return "PrecisionCap";
    case errc::zero_vector: return "ZeroVector";
    case errc::not_coprime: return "NotCoprime";
    case errc::not_unimodular: return "NotUnimodular";
    case errc::degenerate_map: return "DegenerateMap";
    case errc::invalid_slot_count: return "InvalidSlotCount";
    case errc::zero_eta: return "ZeroEta";
    case errc::invalid_snr: return "InvalidSnr";
    case errc::config_parse: return "ConfigParse";
    case errc::unknown_key: return "UnknownKey";
    case errc::io_error: return "IoError";
  }
  return "Unknown";
}

bool is_numerical(errc code) {
  switch (code) {
    case errc::not_positive_definite:
    case errc::numerical_instability:
    case errc::radius_exceeded:
    case errc::precision_cap:
      return true;
    default:
      return false;
  }
}

error::error(errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

config_error::config_error(errc code, const std::string& message, int line)
    : error(code, line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line) {}

}  // namespace cfifc
