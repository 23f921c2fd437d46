#pragma once

// Compute-and-forward rates for the 2-user symmetric Gaussian interference
// channel with direct gain 1 and cross gain g.

#include <cstdint>

#include "cfifc/bounds.hpp"
#include "cfifc/lattice.hpp"

namespace cfifc {

// Above 140 dB the 1/SNR terms of the Gram matrix drown in rounding noise.
inline constexpr double max_snr = 1e14;

double snr_from_db(double snr_db);
double snr_to_db(double snr);

struct ChannelPoint {
  double snr = 1.0;  // linear
  double g = 0.0;    // cross gain, may be negative

  static ChannelPoint from_db(double snr_db, double g) { return {snr_from_db(snr_db), g}; }

  double inr() const { return g * g * snr; }
};

// Throws error(invalid_argument) for snr <= 0 or non-finite g, and
// error(precision_cap) for snr > max_snr.
void validate(const ChannelPoint& point);

// Equation coefficients a = (x, y).
using CoefficientVector = IntVec2;

struct RatePoint {
  ChannelPoint point;
  double per_user_rate = 0.0;
  double sum_rate = 0.0;
  MinimaResult minima;
  Regime regime = Regime::weak;
  double upper_bound_sum = 0.0;
  double gap = 0.0;
};

struct AsymptoticPrediction {
  double x_opt = 0.0;
  double lambda1_pred = 0.0;
  double lambda2_pred = 0.0;
  double per_user_rate_pred = 0.0;
  double gap_pred = 0.0;
};

struct RationalLimit {
  double lambda2_limit = 0.0;
  double per_user_rate_limit = 0.0;
};

// log2 clamped at zero.
double log2_plus(double x);

// [[g^2 + 1/SNR, -g], [-g, 1 + 1/SNR]], so that
// q(x, y) = (x g - y)^2 + (x^2 + y^2) / SNR.
GramMatrix2 cf_gram(const ChannelPoint& point);

// 1/SNR + 1 + g^2.
double rate_numerator(const ChannelPoint& point);

// 1/2 log2+ { (1/SNR + 1 + g^2) / q(x, y) }, with q evaluated directly from
// the channel rather than from the rounded Gram entries.
double computation_rate(const ChannelPoint& point, CoefficientVector a);

// The same rate in projection form,
//   1/2 log2+ { (|a|^2 - SNR (h.a)^2 / (1 + SNR |h|^2))^-1 },  h = (1, g),
// evaluated in extended precision. Kept as an independent route for checks.
double computation_rate_projection(const ChannelPoint& point, CoefficientVector a);

// Per-user rate from the second successive minimum (both equations must be
// decodable); sum rate is twice that in the symmetric channel.
RatePoint achievable_sum_rate(const ChannelPoint& point,
                              const PerUserBound& bound = per_user_upper_bound);

// High-SNR predictions for a golden-equivalent cross gain. No check is made
// that g actually is one.
AsymptoticPrediction asymptotic_golden_predictor(const ChannelPoint& point);

// Limits as SNR -> infinity for g = p/q in lowest terms: lambda2 -> 1/q^2,
// rate -> 1/2 log2(p^2 + q^2).
RationalLimit rational_limit(std::int64_t p, std::int64_t q);

}  // namespace cfifc
