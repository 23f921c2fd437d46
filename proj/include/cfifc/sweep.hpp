#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cfifc/bounds.hpp"
#include "cfifc/cf_rate.hpp"
#include "cfifc/lattice.hpp"
#include "cfifc/precoding.hpp"

namespace cfifc {

enum class SweepMode { plain, golden_sampled, precoded, adaptive };

std::string_view to_string(SweepMode mode);
std::optional<SweepMode> sweep_mode_from_string(std::string_view text);

struct SweepSpec {
  double snr_db = 65.0;
  double g_min = 0.0;
  double g_max = 4.0;
  int steps = 4001;
  SweepMode mode = SweepMode::plain;
  int slots = 7;
  int coeff_bound = default_coeff_bound;
  std::string output_path = "-";
};

// steps >= 2, g_min < g_max, slots >= 1, coeff_bound >= 1.
void validate(const SweepSpec& spec);

struct SweepRow {
  double g = 0.0;
  double snr_db = 0.0;
  Regime regime = Regime::weak;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  IntVec2 v1;
  IntVec2 v2;
  double rate_per_user = 0.0;
  double sum_rate = 0.0;
  double upper_bound_sum = 0.0;
  double gap = 0.0;
};

struct SweepOptions {
  // 0 picks the hardware concurrency. Output does not depend on this.
  unsigned workers = 1;
  ReceiverModel model = ReceiverModel::shared_gain;
};

// steps points from g_min to g_max inclusive.
std::vector<double> sweep_grid(const SweepSpec& spec);

SweepRow make_row(const RatePoint& rate, double snr_db);

// Minima columns come from the slot with the lowest sum rate; regime is that
// of the unprecoded point.
SweepRow make_row(const ChannelPoint& point, const PrecodedRateResult& result, double snr_db);

// Rows in ascending g. In golden_sampled mode g is the sampled equivalent and
// grid points that map to the same equivalent produce a single row.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SweepOptions& options = {});

}  // namespace cfifc
