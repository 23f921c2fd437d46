#include "cfifc/cf_rate.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "cfifc/error.hpp"

namespace cfifc {

double snr_from_db(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

double snr_to_db(double snr) { return 10.0 * std::log10(snr); }

void validate(const ChannelPoint& point) {
  if (!(point.snr > 0.0) || !std::isfinite(point.snr)) {
    throw error(errc::invalid_argument, "snr must be positive and finite");
  }
  if (!std::isfinite(point.g)) throw error(errc::invalid_argument, "g must be finite");
  if (point.snr > max_snr) {
    throw error(errc::precision_cap, "snr " + std::to_string(snr_to_db(point.snr)) +
                                         " dB exceeds the 140 dB precision cap");
  }
}

double log2_plus(double x) { return x > 1.0 ? std::log2(x) : 0.0; }

GramMatrix2 cf_gram(const ChannelPoint& point) {
  validate(point);
  const double inv = 1.0 / point.snr;
  return {point.g * point.g + inv, -point.g, 1.0 + inv};
}

double rate_numerator(const ChannelPoint& point) {
  return 1.0 / point.snr + 1.0 + point.g * point.g;
}

double computation_rate(const ChannelPoint& point, CoefficientVector a) {
  validate(point);
  if (a.x == 0 && a.y == 0) throw error(errc::zero_vector, "coefficient vector is zero");
  const double x = static_cast<double>(a.x);
  const double y = static_cast<double>(a.y);
  // x*g - y with a single rounding.
  const double misalignment = std::fma(x, point.g, -y);
  const double form = misalignment * misalignment + (x * x + y * y) / point.snr;
  return 0.5 * log2_plus(rate_numerator(point) / form);
}

double computation_rate_projection(const ChannelPoint& point, CoefficientVector a) {
  validate(point);
  if (a.x == 0 && a.y == 0) throw error(errc::zero_vector, "coefficient vector is zero");
  using ext = long double;
  const ext x = static_cast<ext>(a.x);
  const ext y = static_cast<ext>(a.y);
  const ext g = point.g;
  const ext snr = point.snr;
  const ext h_dot_a = x + g * y;
  const ext h_norm2 = 1.0L + g * g;
  const ext residual = (x * x + y * y) - snr * h_dot_a * h_dot_a / (1.0L + snr * h_norm2);
  if (!(residual > 0.0L)) {
    throw error(errc::numerical_instability, "projection residual lost to cancellation");
  }
  const ext ratio = 1.0L / residual;
  return ratio > 1.0L ? static_cast<double>(0.5L * std::log2(ratio)) : 0.0;
}

RatePoint achievable_sum_rate(const ChannelPoint& point, const PerUserBound& bound) {
  RatePoint out;
  out.point = point;
  out.minima = gauss_reduce(cf_gram(point));
  out.per_user_rate = 0.5 * log2_plus(rate_numerator(point) / out.minima.lambda2);
  out.sum_rate = 2.0 * out.per_user_rate;
  out.regime = classify_regime(point.snr, point.inr());
  out.upper_bound_sum = 2.0 * bound(point.snr, point.inr());
  out.gap = out.upper_bound_sum - out.sum_rate;
  return out;
}

AsymptoticPrediction asymptotic_golden_predictor(const ChannelPoint& point) {
  const double snr = point.snr;
  const double energy = 1.0 + point.g * point.g;
  AsymptoticPrediction out;
  out.x_opt = std::pow(snr / (5.0 * energy), 0.25);
  out.lambda1_pred = 2.0 * std::sqrt(energy / (5.0 * snr));
  out.lambda2_pred = std::sqrt(1.25 * energy / snr);
  out.gap_pred = 0.25 * std::log2(1.25);
  out.per_user_rate_pred = 0.25 * log2_plus(snr * energy) - out.gap_pred;
  return out;
}

RationalLimit rational_limit(std::int64_t p, std::int64_t q) {
  if (q < 1) throw error(errc::invalid_argument, "denominator must be >= 1");
  if (std::gcd(p, q) != 1) {
    throw error(errc::not_coprime,
                std::to_string(p) + "/" + std::to_string(q) + " is not in lowest terms");
  }
  const double pd = static_cast<double>(p);
  const double qd = static_cast<double>(q);
  return {1.0 / (qd * qd), 0.5 * std::log2(pd * pd + qd * qd)};
}

}  // namespace cfifc
