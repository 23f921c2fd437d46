#pragma once

// Diversity precoding over n time slots: in slot i both transmitters scale
// their codewords by eta_i, so the effective cross gain becomes eta_i * g.
// With distinct golden-equivalent gains at most one slot can see a rational
// (deep-fade) effective gain.

#include <optional>
#include <span>
#include <vector>

#include "cfifc/bounds.hpp"
#include "cfifc/cf_rate.hpp"
#include "cfifc/diophantine.hpp"

namespace cfifc {

struct SlotGain {
  double value = 1.0;
  // Present when the gain is golden-equivalent; absent for the identity.
  std::optional<GoldenEquivalent> form;
};

class SlotPlan {
 public:
  // Throws error(invalid_slot_count) for an empty plan, error(zero_eta) for a
  // zero gain, error(invalid_argument) for repeated or non-finite gains.
  explicit SlotPlan(std::vector<SlotGain> gains);

  static SlotPlan from_values(std::span<const double> etas);

  std::size_t size() const { return gains_.size(); }
  const std::vector<SlotGain>& gains() const { return gains_; }
  std::vector<double> values() const;

 private:
  std::vector<SlotGain> gains_;
};

// n = 1: identity; n = 2: (phi, phibar); n >= 3: (phi + i)/(phi + i - 1) for
// i = 1..n, decreasing from phi towards 1.
SlotPlan default_slot_plan(int n);

enum class ReceiverModel {
  // Both receivers see h = [1, eta_i g] in slot i.
  shared_gain,
  // Receiver 2 divides by its own direct gain eta_i and sees [1, g / eta_i];
  // the slot rate is the smaller of the two receivers' rates.
  normalized_second_receiver,
};

struct PrecodedRateResult {
  std::vector<double> etas;
  std::vector<RatePoint> per_slot;
  double avg_sum_rate = 0.0;
  double avg_upper_bound_sum = 0.0;
  double gap = 0.0;
};

// Gram matrix of slot i; throws error(zero_eta) for eta == 0.
GramMatrix2 slot_gram(const ChannelPoint& point, double eta);

// (eta g)^2 SNR.
double slot_inr(const ChannelPoint& point, double eta);

PrecodedRateResult precoded_sum_rate(const ChannelPoint& point, const SlotPlan& plan,
                                     ReceiverModel model = ReceiverModel::shared_gain,
                                     const PerUserBound& bound = per_user_upper_bound);

// Mean over slots of the sum upper bound at (SNR, INR_i).
double precoded_upper_bound(const ChannelPoint& point, const SlotPlan& plan,
                            const PerUserBound& bound = per_user_upper_bound);
double precoded_upper_bound(const ChannelPoint& point, std::span<const double> etas,
                            const PerUserBound& bound = per_user_upper_bound);

// One slot for weak and intermediate interference, default_slot_plan(n_strong)
// for strong and very strong, judged on the unprecoded point.
PrecodedRateResult adaptive_scheme(const ChannelPoint& point, int n_strong,
                                   ReceiverModel model = ReceiverModel::shared_gain,
                                   const PerUserBound& bound = per_user_upper_bound);

}  // namespace cfifc
