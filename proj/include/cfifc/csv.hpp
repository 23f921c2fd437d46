#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cfifc/sweep.hpp"

namespace cfifc {

inline constexpr std::string_view csv_header =
    "g,snr_db,regime,lambda1,lambda2,v1,v2,rate_per_user,sum_rate,upper_bound_sum,gap";

// 12 significant digits, trailing zeros dropped ("%.12g").
std::string format_number(double value);

// Value as it reads back after format_number.
double round_to_12_digits(double value);

// Header line plus one line per row, each terminated by '\n'. Vectors are
// written "x:y".
std::string serialize_csv(std::span<const SweepRow> rows);

// Inverse of serialize_csv; throws error(invalid_argument) on a wrong header
// or malformed record.
std::vector<SweepRow> parse_csv(std::string_view text);

}  // namespace cfifc
