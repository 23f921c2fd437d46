#include "cfifc/precoding.hpp"

#include <cmath>
#include <string>

#include "cfifc/error.hpp"

namespace cfifc {

SlotPlan::SlotPlan(std::vector<SlotGain> gains) : gains_(std::move(gains)) {
  if (gains_.empty()) throw error(errc::invalid_slot_count, "a slot plan needs at least one slot");
  for (std::size_t i = 0; i < gains_.size(); ++i) {
    const double eta = gains_[i].value;
    if (!std::isfinite(eta)) throw error(errc::invalid_argument, "slot gain must be finite");
    if (eta == 0.0) throw error(errc::zero_eta, "slot " + std::to_string(i + 1) + " has eta = 0");
    for (std::size_t j = 0; j < i; ++j) {
      if (gains_[j].value == eta) {
        throw error(errc::invalid_argument, "slot gains must be distinct");
      }
    }
  }
}

SlotPlan SlotPlan::from_values(std::span<const double> etas) {
  std::vector<SlotGain> gains;
  gains.reserve(etas.size());
  for (double eta : etas) gains.push_back({eta, std::nullopt});
  return SlotPlan(std::move(gains));
}

std::vector<double> SlotPlan::values() const {
  std::vector<double> out;
  out.reserve(gains_.size());
  for (const SlotGain& gain : gains_) out.push_back(gain.value);
  return out;
}

SlotPlan default_slot_plan(int n) {
  if (n < 1) throw error(errc::invalid_slot_count, "slot count must be >= 1, got " + std::to_string(n));
  std::vector<SlotGain> gains;
  if (n == 1) {
    gains.push_back({1.0, std::nullopt});
  } else if (n == 2) {
    for (const GoldenEquivalent& e :
         {golden_equivalent_value(1, 0, 0, 1), golden_equivalent_value(0, -1, 1, 0)}) {
      gains.push_back({e.value, e});
    }
  } else {
    for (int i = 1; i <= n; ++i) {
      const GoldenEquivalent e = golden_equivalent_value(1, i, 1, i - 1);
      gains.push_back({e.value, e});
    }
  }
  return SlotPlan(std::move(gains));
}

GramMatrix2 slot_gram(const ChannelPoint& point, double eta) {
  if (eta == 0.0) throw error(errc::zero_eta, "precoder gain is zero");
  if (!std::isfinite(eta)) throw error(errc::invalid_argument, "precoder gain must be finite");
  return cf_gram({point.snr, eta * point.g});
}

double slot_inr(const ChannelPoint& point, double eta) {
  const double gain = eta * point.g;
  return gain * gain * point.snr;
}

namespace {

RatePoint slot_rate(const ChannelPoint& point, double eta, ReceiverModel model,
                    const PerUserBound& bound) {
  if (eta == 0.0) throw error(errc::zero_eta, "precoder gain is zero");
  RatePoint first = achievable_sum_rate({point.snr, eta * point.g}, bound);
  if (model == ReceiverModel::shared_gain) return first;

  const RatePoint second = achievable_sum_rate({point.snr, point.g / eta}, bound);
  if (second.per_user_rate < first.per_user_rate) {
    first.per_user_rate = second.per_user_rate;
    first.sum_rate = second.sum_rate;
    first.minima = second.minima;
    first.gap = first.upper_bound_sum - first.sum_rate;
  }
  return first;
}

}  // namespace

PrecodedRateResult precoded_sum_rate(const ChannelPoint& point, const SlotPlan& plan,
                                     ReceiverModel model, const PerUserBound& bound) {
  PrecodedRateResult out;
  out.etas = plan.values();
  out.per_slot.reserve(plan.size());
  double rate_total = 0.0;
  double bound_total = 0.0;
  for (double eta : out.etas) {
    out.per_slot.push_back(slot_rate(point, eta, model, bound));
    rate_total += out.per_slot.back().sum_rate;
    bound_total += out.per_slot.back().upper_bound_sum;
  }
  const auto n = static_cast<double>(plan.size());
  out.avg_sum_rate = rate_total / n;
  out.avg_upper_bound_sum = bound_total / n;
  out.gap = out.avg_upper_bound_sum - out.avg_sum_rate;
  return out;
}

double precoded_upper_bound(const ChannelPoint& point, const SlotPlan& plan,
                            const PerUserBound& bound) {
  const std::vector<double> etas = plan.values();
  return precoded_upper_bound(point, etas, bound);
}

double precoded_upper_bound(const ChannelPoint& point, std::span<const double> etas,
                            const PerUserBound& bound) {
  if (etas.empty()) throw error(errc::invalid_slot_count, "no slots");
  double total = 0.0;
  for (double eta : etas) total += 2.0 * bound(point.snr, slot_inr(point, eta));
  return total / static_cast<double>(etas.size());
}

PrecodedRateResult adaptive_scheme(const ChannelPoint& point, int n_strong, ReceiverModel model,
                                   const PerUserBound& bound) {
  if (n_strong < 1) throw error(errc::invalid_slot_count, "n_strong must be >= 1");
  validate(point);
  const Regime regime = classify_regime(point.snr, point.inr());
  const bool diversify = regime == Regime::strong || regime == Regime::very_strong;
  return precoded_sum_rate(point, default_slot_plan(diversify ? n_strong : 1), model, bound);
}

}  // namespace cfifc
