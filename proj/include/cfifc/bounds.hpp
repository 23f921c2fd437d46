#pragma once

#include <functional>
#include <optional>
#include <string_view>

namespace cfifc {

enum class Regime { weak, intermediate, strong, very_strong };

std::string_view to_string(Regime regime);
std::optional<Regime> regime_from_string(std::string_view text);

// alpha = log(inr) / log(snr); inr == 0 maps to 0. Requires snr > 1.
double interference_exponent(double snr, double inr);

// weak: alpha < 2/3; intermediate: 2/3 <= alpha < 1;
// strong: inr >= snr and inr <= snr*(1 + snr); very_strong: inr > snr*(1 + snr).
// Throws error(invalid_snr) for snr <= 1.
Regime classify_regime(double snr, double inr);

// Outer bound on the symmetric per-user rate, bits per real channel use.
//   inr >= snr: min{ 1/2 log(1+snr), 1/4 log(1+snr+inr) }
//   inr <  snr: min{ 1/2 log(1+snr),
//                    1/4 [log(1+snr+inr) + log(1 + snr/(1+inr))],
//                    1/2 log(1 + inr + snr/(1+inr)) }
double per_user_upper_bound(double snr, double inr);

double sum_upper_bound(double snr, double inr);

// Per-user bound as a function of (snr, inr); swap in a different outer bound
// without touching the rate code.
using PerUserBound = std::function<double(double snr, double inr)>;

}  // namespace cfifc
