#include "cfifc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cfifc/error.hpp"

namespace cfifc {

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::weak: return "weak";
    case Regime::intermediate: return "intermediate";
    case Regime::strong: return "strong";
    case Regime::very_strong: return "very_strong";
  }
  return "unknown";
}

std::optional<Regime> regime_from_string(std::string_view text) {
  for (Regime r : {Regime::weak, Regime::intermediate, Regime::strong, Regime::very_strong}) {
    if (to_string(r) == text) return r;
  }
  return std::nullopt;
}

double interference_exponent(double snr, double inr) {
  if (!(snr > 1.0)) throw error(errc::invalid_snr, "snr must exceed 1 (0 dB), got " + std::to_string(snr));
  if (!(inr >= 0.0)) throw error(errc::invalid_argument, "inr must be >= 0");
  if (inr == 0.0) return 0.0;
  return std::log(inr) / std::log(snr);
}

Regime classify_regime(double snr, double inr) {
  const double alpha = interference_exponent(snr, inr);
  if (inr > snr * (1.0 + snr)) return Regime::very_strong;
  // Compared directly so that inr == snr lands in strong, matching the
  // branch selection of the upper bound.
  if (inr >= snr) return Regime::strong;
  if (alpha < 2.0 / 3.0) return Regime::weak;
  return Regime::intermediate;
}

double per_user_upper_bound(double snr, double inr) {
  if (!(snr > 0.0)) throw error(errc::invalid_argument, "snr must be > 0");
  if (!(inr >= 0.0)) throw error(errc::invalid_argument, "inr must be >= 0");

  const double interference_free = 0.5 * std::log2(1.0 + snr);
  if (inr >= snr) {
    return std::min(interference_free, 0.25 * std::log2(1.0 + snr + inr));
  }
  const double sum_constraint =
      0.25 * (std::log2(1.0 + snr + inr) + std::log2(1.0 + snr / (1.0 + inr)));
  const double genie_constraint = 0.5 * std::log2(1.0 + inr + snr / (1.0 + inr));
  return std::min({interference_free, sum_constraint, genie_constraint});
}

double sum_upper_bound(double snr, double inr) { return 2.0 * per_user_upper_bound(snr, inr); }

}  // namespace cfifc
