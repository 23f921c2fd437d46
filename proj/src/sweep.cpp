#include "cfifc/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "cfifc/diophantine.hpp"
#include "cfifc/error.hpp"

namespace cfifc {

std::string_view to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::plain: return "plain";
    case SweepMode::golden_sampled: return "golden_sampled";
    case SweepMode::precoded: return "precoded";
    case SweepMode::adaptive: return "adaptive";
  }
  return "unknown";
}

std::optional<SweepMode> sweep_mode_from_string(std::string_view text) {
  for (SweepMode m : {SweepMode::plain, SweepMode::golden_sampled, SweepMode::precoded,
                      SweepMode::adaptive}) {
    if (to_string(m) == text) return m;
  }
  return std::nullopt;
}

void validate(const SweepSpec& spec) {
  if (!std::isfinite(spec.snr_db)) throw error(errc::invalid_argument, "snr_db must be finite");
  if (spec.steps < 2) throw error(errc::invalid_argument, "steps must be >= 2");
  if (!std::isfinite(spec.g_min) || !std::isfinite(spec.g_max) || !(spec.g_min < spec.g_max)) {
    throw error(errc::invalid_argument, "need finite g_min < g_max");
  }
  if (spec.slots < 1) throw error(errc::invalid_slot_count, "slots must be >= 1");
  if (spec.coeff_bound < 1) throw error(errc::invalid_argument, "coeff_bound must be >= 1");
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
  validate(spec);
  std::vector<double> grid(static_cast<std::size_t>(spec.steps));
  const double span = spec.g_max - spec.g_min;
  const double last = static_cast<double>(spec.steps - 1);
  for (int i = 0; i < spec.steps; ++i) {
    grid[static_cast<std::size_t>(i)] = spec.g_min + span * (static_cast<double>(i) / last);
  }
  grid.back() = spec.g_max;
  return grid;
}

SweepRow make_row(const RatePoint& rate, double snr_db) {
  SweepRow row;
  row.g = rate.point.g;
  row.snr_db = snr_db;
  row.regime = rate.regime;
  row.lambda1 = rate.minima.lambda1;
  row.lambda2 = rate.minima.lambda2;
  row.v1 = rate.minima.v1;
  row.v2 = rate.minima.v2;
  row.rate_per_user = rate.per_user_rate;
  row.sum_rate = rate.sum_rate;
  row.upper_bound_sum = rate.upper_bound_sum;
  row.gap = rate.gap;
  return row;
}

SweepRow make_row(const ChannelPoint& point, const PrecodedRateResult& result, double snr_db) {
  const auto worst = std::min_element(
      result.per_slot.begin(), result.per_slot.end(),
      [](const RatePoint& a, const RatePoint& b) { return a.sum_rate < b.sum_rate; });
  SweepRow row = make_row(*worst, snr_db);
  row.g = point.g;
  row.regime = classify_regime(point.snr, point.inr());
  row.sum_rate = result.avg_sum_rate;
  row.rate_per_user = 0.5 * result.avg_sum_rate;
  row.upper_bound_sum = result.avg_upper_bound_sum;
  row.gap = result.gap;
  return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SweepOptions& options) {
  const std::vector<double> grid = sweep_grid(spec);
  const double snr = snr_from_db(spec.snr_db);

  std::optional<GoldenEquivalentTable> table;
  if (spec.mode == SweepMode::golden_sampled) table.emplace(spec.coeff_bound);
  std::optional<SlotPlan> plan;
  if (spec.mode == SweepMode::precoded) plan.emplace(default_slot_plan(spec.slots));

  auto compute = [&](double g) -> SweepRow {
    switch (spec.mode) {
      case SweepMode::plain:
        return make_row(achievable_sum_rate({snr, g}), spec.snr_db);
      case SweepMode::golden_sampled:
        return make_row(achievable_sum_rate({snr, table->nearest(g).value}), spec.snr_db);
      case SweepMode::precoded: {
        const ChannelPoint point{snr, g};
        return make_row(point, precoded_sum_rate(point, *plan, options.model), spec.snr_db);
      }
      case SweepMode::adaptive: {
        const ChannelPoint point{snr, g};
        return make_row(point, adaptive_scheme(point, spec.slots, options.model), spec.snr_db);
      }
    }
    throw error(errc::invalid_argument, "unknown sweep mode");
  };

  std::vector<SweepRow> rows(grid.size());
  unsigned workers = options.workers == 0 ? std::thread::hardware_concurrency() : options.workers;
  workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(grid.size()));

  if (workers == 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) rows[i] = compute(grid[i]);
  } else {
    // Strided partition; each worker remembers its first failure so the
    // error reported is the one at the lowest grid index, as in a serial run.
    struct Failure {
      std::size_t index = std::numeric_limits<std::size_t>::max();
      std::exception_ptr error;
    };
    std::vector<Failure> failures(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (std::size_t i = w; i < grid.size(); i += workers) {
          try {
            rows[i] = compute(grid[i]);
          } catch (...) {
            failures[w] = {i, std::current_exception()};
            return;
          }
        }
      });
    }
    for (std::thread& t : threads) t.join();
    const auto first = std::min_element(
        failures.begin(), failures.end(),
        [](const Failure& a, const Failure& b) { return a.index < b.index; });
    if (first->error) std::rethrow_exception(first->error);
  }

  if (spec.mode == SweepMode::golden_sampled) {
    // Nearest-point sampling is monotone in g, so duplicates are adjacent.
    rows.erase(std::unique(rows.begin(), rows.end(),
                           [](const SweepRow& a, const SweepRow& b) { return a.g == b.g; }),
               rows.end());
  }
  return rows;
}

}  // namespace cfifc
