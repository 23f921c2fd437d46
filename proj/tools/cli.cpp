#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfifc/cf_rate.hpp"
#include "cfifc/config.hpp"
#include "cfifc/csv.hpp"
#include "cfifc/diophantine.hpp"
#include "cfifc/error.hpp"
#include "cfifc/lattice.hpp"
#include "cfifc/output.hpp"
#include "cfifc/precoding.hpp"
#include "cfifc/sweep.hpp"

namespace cfifc {
namespace {

using json = nlohmann::ordered_json;

json num(double v) { return round_to_12_digits(v); }
json vec(IntVec2 v) { return json::array({v.x, v.y}); }

json rate_json(const ChannelPoint& point, double snr_db, const PrecodedRateResult& result) {
  const SweepRow row = make_row(point, result, snr_db);
  json j;
  j["snr_db"] = num(snr_db);
  j["g"] = num(point.g);
  j["regime"] = std::string(to_string(row.regime));
  j["slots"] = result.etas.size();
  j["etas"] = json::array();
  for (double eta : result.etas) j["etas"].push_back(num(eta));
  j["lambda1"] = num(row.lambda1);
  j["lambda2"] = num(row.lambda2);
  j["v1"] = vec(row.v1);
  j["v2"] = vec(row.v2);
  j["rate_per_user"] = num(row.rate_per_user);
  j["sum_rate"] = num(row.sum_rate);
  j["upper_bound_sum"] = num(row.upper_bound_sum);
  j["gap"] = num(row.gap);
  j["per_slot"] = json::array();
  for (std::size_t i = 0; i < result.per_slot.size(); ++i) {
    const RatePoint& slot = result.per_slot[i];
    json s;
    s["eta"] = num(result.etas[i]);
    s["g_eff"] = num(slot.point.g);
    s["regime"] = std::string(to_string(slot.regime));
    s["lambda1"] = num(slot.minima.lambda1);
    s["lambda2"] = num(slot.minima.lambda2);
    s["v1"] = vec(slot.minima.v1);
    s["v2"] = vec(slot.minima.v2);
    s["rate_per_user"] = num(slot.per_user_rate);
    s["sum_rate"] = num(slot.sum_rate);
    s["upper_bound_sum"] = num(slot.upper_bound_sum);
    s["gap"] = num(slot.gap);
    j["per_slot"].push_back(std::move(s));
  }
  return j;
}

struct Flags {
  std::string config_path;

  double snr_db = 0.0;
  double g = 0.0;
  int slots = 1;
  bool adaptive = false;
  bool rx2_normalized = false;

  double g_min = 0.0;
  double g_max = 0.0;
  int steps = 0;
  std::string mode;
  int coeff_bound = default_coeff_bound;
  std::string out_path;
  unsigned workers = 0;

  double theta = 0.0;
  std::int64_t q_max = 0;

  double g11 = 0.0;
  double g12 = 0.0;
  double g22 = 0.0;
};

bool given(const CLI::Option* opt) { return opt != nullptr && opt->count() > 0; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compute-and-forward rates and bounds for the 2-user symmetric Gaussian "
               "interference channel",
               "cfifc"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--config", f.config_path, "key = value config file (default: $CFIFC_CONFIG)");

  CLI::App* rate = app.add_subcommand("rate", "achievable and upper-bound sum rates at one point");
  CLI::Option* rate_snr = rate->add_option("--snr-db", f.snr_db, "SNR in dB");
  rate->add_option("--g", f.g, "cross gain")->required();
  CLI::Option* rate_slots = rate->add_option("--slots", f.slots, "number of precoded time slots");
  rate->add_flag("--adaptive", f.adaptive, "one slot for weak/intermediate, --slots otherwise");
  rate->add_flag("--rx2-normalized", f.rx2_normalized,
                 "receiver 2 sees [1, g/eta] instead of [1, eta g]");

  CLI::App* sweep = app.add_subcommand("sweep", "rate sweep over a uniform grid of g, as CSV");
  CLI::Option* sw_snr = sweep->add_option("--snr-db", f.snr_db, "SNR in dB");
  CLI::Option* sw_gmin = sweep->add_option("--g-min", f.g_min, "first grid point");
  CLI::Option* sw_gmax = sweep->add_option("--g-max", f.g_max, "last grid point");
  CLI::Option* sw_steps = sweep->add_option("--steps", f.steps, "number of grid points");
  CLI::Option* sw_mode =
      sweep->add_option("--mode", f.mode, "plain | golden_sampled | precoded | adaptive");
  CLI::Option* sw_slots = sweep->add_option("--slots", f.slots, "slots for precoded/adaptive");
  CLI::Option* sw_bound =
      sweep->add_option("--coeff-bound", f.coeff_bound, "coefficient bound for golden_sampled");
  CLI::Option* sw_out = sweep->add_option("--out", f.out_path, "output CSV path, '-' for stdout");
  sweep->add_option("--workers", f.workers, "worker threads, 0 = all cores");
  sweep->add_flag("--rx2-normalized", f.rx2_normalized,
                  "receiver 2 sees [1, g/eta] instead of [1, eta g]");

  CLI::App* approx = app.add_subcommand("approx", "nearest golden-ratio equivalent of g");
  approx->add_option("--g", f.g, "value to approximate")->required();
  CLI::Option* approx_bound = approx->add_option("--coeff-bound", f.coeff_bound,
                                                 "bound on |a|, |b|, |c|, |d|");

  CLI::App* hurwitz = app.add_subcommand("hurwitz", "scan q*||q theta|| for q = 1..q_max");
  hurwitz->add_option("--theta", f.theta, "real number to approximate")->required();
  hurwitz->add_option("--q-max", f.q_max, "largest denominator")->required();

  CLI::App* reduce = app.add_subcommand("reduce", "Gauss reduction of a 2x2 Gram matrix");
  reduce->add_option("--g11", f.g11)->required();
  reduce->add_option("--g12", f.g12)->required();
  reduce->add_option("--g22", f.g22)->required();

  CLI::App* asymptotic =
      app.add_subcommand("asymptotic", "high-SNR predictions for a golden-equivalent g");
  CLI::Option* asym_snr = asymptotic->add_option("--snr-db", f.snr_db, "SNR in dB");
  asymptotic->add_option("--g", f.g, "cross gain")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    std::string config_path = f.config_path;
    if (config_path.empty()) {
      if (const char* env = std::getenv("CFIFC_CONFIG")) config_path = env;
    }
    ConfigOverlay overlay;
    if (!config_path.empty()) overlay = parse_config(config_path);
    SweepSpec spec;
    apply_config(overlay, spec);

    if (rate->parsed()) {
      if (given(rate_snr)) spec.snr_db = f.snr_db;
      int slots = overlay.contains("slots") ? spec.slots : 1;
      if (given(rate_slots)) slots = f.slots;
      const ChannelPoint point = ChannelPoint::from_db(spec.snr_db, f.g);
      validate(point);
      const ReceiverModel model = f.rx2_normalized ? ReceiverModel::normalized_second_receiver
                                                   : ReceiverModel::shared_gain;
      const PrecodedRateResult result =
          f.adaptive ? adaptive_scheme(point, slots, model)
                     : precoded_sum_rate(point, default_slot_plan(slots), model);
      out << rate_json(point, spec.snr_db, result).dump() << '\n';
    } else if (sweep->parsed()) {
      if (given(sw_snr)) spec.snr_db = f.snr_db;
      if (given(sw_gmin)) spec.g_min = f.g_min;
      if (given(sw_gmax)) spec.g_max = f.g_max;
      if (given(sw_steps)) spec.steps = f.steps;
      if (given(sw_slots)) spec.slots = f.slots;
      if (given(sw_bound)) spec.coeff_bound = f.coeff_bound;
      if (given(sw_out)) spec.output_path = f.out_path;
      if (given(sw_mode)) {
        const auto mode = sweep_mode_from_string(f.mode);
        if (!mode) throw error(errc::invalid_argument, "unknown mode '" + f.mode + "'");
        spec.mode = *mode;
      }
      validate(spec);
      SweepOptions options;
      options.workers = f.workers;
      if (f.rx2_normalized) options.model = ReceiverModel::normalized_second_receiver;
      const std::string csv = serialize_csv(run_sweep(spec, options));
      if (spec.output_path == "-") {
        out << csv;
      } else {
        write_file_atomic(spec.output_path, csv);
      }
    } else if (approx->parsed()) {
      int bound = spec.coeff_bound;
      if (given(approx_bound)) bound = f.coeff_bound;
      const GoldenEquivalent e = nearest_golden_equivalent(f.g, bound);
      json j;
      j["g"] = num(f.g);
      j["coeff_bound"] = bound;
      j["a"] = e.a;
      j["b"] = e.b;
      j["c"] = e.c;
      j["d"] = e.d;
      j["determinant"] = e.determinant();
      j["value"] = num(e.value);
      j["error"] = num(std::abs(f.g - e.value));
      out << j.dump() << '\n';
    } else if (hurwitz->parsed()) {
      const HurwitzScan scan = hurwitz_scan(f.theta, f.q_max);
      json j;
      j["theta"] = num(f.theta);
      j["q_max"] = f.q_max;
      j["min_value"] = num(scan.min_value);
      j["argmin_q"] = scan.argmin_q;
      j["trace"] = json::array();
      for (const auto& r : scan.trace) {
        json rec;
        rec["q"] = r.q;
        rec["value"] = num(r.value);
        j["trace"].push_back(std::move(rec));
      }
      out << j.dump() << '\n';
    } else if (reduce->parsed()) {
      const GramMatrix2 gram{f.g11, f.g12, f.g22};
      const MinimaResult m = gauss_reduce(gram);
      const GramMatrix2 red = reduced_gram(gram, m.map);
      json j;
      j["lambda1"] = num(m.lambda1);
      j["lambda2"] = num(m.lambda2);
      j["v1"] = vec(m.v1);
      j["v2"] = vec(m.v2);
      j["unimodular"] = json::array({json::array({m.map.u11, m.map.u12}),
                                     json::array({m.map.u21, m.map.u22})});
      j["reduced_gram"] = json::array({json::array({num(red.g11), num(red.g12)}),
                                       json::array({num(red.g12), num(red.g22)})});
      out << j.dump() << '\n';
    } else if (asymptotic->parsed()) {
      if (given(asym_snr)) spec.snr_db = f.snr_db;
      const ChannelPoint point = ChannelPoint::from_db(spec.snr_db, f.g);
      validate(point);
      const AsymptoticPrediction p = asymptotic_golden_predictor(point);
      json j;
      j["snr_db"] = num(spec.snr_db);
      j["g"] = num(f.g);
      j["x_opt"] = num(p.x_opt);
      j["lambda1_pred"] = num(p.lambda1_pred);
      j["lambda2_pred"] = num(p.lambda2_pred);
      j["per_user_rate_pred"] = num(p.per_user_rate_pred);
      j["gap_pred"] = num(p.gap_pred);
      out << j.dump() << '\n';
    }
  } catch (const error& e) {
    err << "cfifc: " << e.what() << '\n';
    return is_numerical(e.code()) ? 3 : 2;
  } catch (const std::exception& e) {
    err << "cfifc: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace cfifc
