#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cfifc/config.hpp"
#include "cfifc/csv.hpp"
#include "cfifc/error.hpp"
#include "cfifc/output.hpp"
#include "cfifc/sweep.hpp"

using namespace cfifc;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / ("cfifc_sweep_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

SweepRow rounded(SweepRow r) {
  for (double* v : {&r.g, &r.snr_db, &r.lambda1, &r.lambda2, &r.rate_per_user, &r.sum_rate,
                    &r.upper_bound_sum, &r.gap}) {
    *v = round_to_12_digits(*v);
  }
  return r;
}

bool equal_rows(const SweepRow& a, const SweepRow& b) {
  return a.g == b.g && a.snr_db == b.snr_db && a.regime == b.regime && a.lambda1 == b.lambda1 &&
         a.lambda2 == b.lambda2 && a.v1 == b.v1 && a.v2 == b.v2 &&
         a.rate_per_user == b.rate_per_user && a.sum_rate == b.sum_rate &&
         a.upper_bound_sum == b.upper_bound_sum && a.gap == b.gap;
}

}  // namespace

TEST_CASE("sweep grid is inclusive") {
  SweepSpec s;
  s.g_min = 1;
  s.g_max = 4;
  s.steps = 3001;
  const auto grid = sweep_grid(s);
  REQUIRE(grid.size() == 3001);
  CHECK(grid.front() == 1.0);
  CHECK(grid.back() == 4.0);
  CHECK(grid[1000] == doctest::Approx(2.0).epsilon(1e-15));
  for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid[i] > grid[i - 1]);
}

TEST_CASE("sweep spec validation") {
  SweepSpec s;
  s.steps = 1;
  CHECK_THROWS_AS(validate(s), error);
  s = {};
  s.g_min = 2;
  s.g_max = 2;
  CHECK_THROWS_AS(validate(s), error);
  s = {};
  s.slots = 0;
  CHECK_THROWS_AS(validate(s), error);
  s = {};
  CHECK_NOTHROW(validate(s));
}

TEST_CASE("plain sweep over [0, 4] at 65 dB") {
  SweepSpec s;
  const auto rows = run_sweep(s, {0, ReceiverModel::shared_gain});
  REQUIRE(rows.size() == 4001);
  const SweepRow& at1 = rows[1000];
  CHECK(at1.g == 1.0);
  CHECK(at1.rate_per_user <= 0.6);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) CHECK(rows[i].g > rows[i - 1].g);
    CHECK(rows[i].sum_rate <= rows[i].upper_bound_sum + 1e-6);
    CHECK(rows[i].snr_db == 65.0);
  }
}

TEST_CASE("precoded and adaptive sweeps respect the bound") {
  for (SweepMode mode : {SweepMode::precoded, SweepMode::adaptive}) {
    for (int slots : {1, 2, 7}) {
      SweepSpec s;
      s.g_min = 0;
      s.g_max = 4;
      s.steps = 201;
      s.mode = mode;
      s.slots = slots;
      const auto rows = run_sweep(s);
      REQUIRE(rows.size() == 201);
      for (const SweepRow& r : rows) CHECK(r.sum_rate <= r.upper_bound_sum + 1e-6);
    }
  }
}

TEST_CASE("precoded sweep with one slot equals the plain sweep") {
  SweepSpec s;
  s.steps = 101;
  const auto plain = run_sweep(s);
  s.mode = SweepMode::precoded;
  s.slots = 1;
  const auto pre = run_sweep(s);
  REQUIRE(plain.size() == pre.size());
  for (std::size_t i = 0; i < plain.size(); ++i) CHECK(equal_rows(plain[i], pre[i]));
}

TEST_CASE("golden_sampled sweep") {
  SweepSpec s;
  s.g_min = 1;
  s.g_max = 4;
  s.steps = 301;
  s.mode = SweepMode::golden_sampled;
  const auto rows = run_sweep(s);
  REQUIRE(rows.size() > 100);
  REQUIRE(rows.size() <= 301);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].g > rows[i - 1].g);
  for (const SweepRow& r : rows) {
    CHECK(r.g == nearest_golden_equivalent(r.g, 20).value);
    CHECK(r.sum_rate <= r.upper_bound_sum + 1e-6);
  }
}

TEST_CASE("golden_sampled with bound 1 leaves phi unchanged") {
  SweepSpec s;
  s.g_min = golden_ratio;
  s.g_max = golden_ratio + 1e-3;
  s.steps = 2;
  s.mode = SweepMode::golden_sampled;
  s.coeff_bound = 1;
  const auto rows = run_sweep(s);
  REQUIRE_FALSE(rows.empty());
  CHECK(rows.front().g == golden_ratio);
}

TEST_CASE("sweeps are identical across worker counts") {
  SweepSpec s;
  s.g_min = 0.5;
  s.g_max = 3.5;
  s.steps = 777;
  for (SweepMode mode : {SweepMode::plain, SweepMode::golden_sampled, SweepMode::precoded}) {
    s.mode = mode;
    const std::string one = serialize_csv(run_sweep(s, {1, ReceiverModel::shared_gain}));
    for (unsigned w : {2u, 3u, 8u, 0u}) {
      CHECK(serialize_csv(run_sweep(s, {w, ReceiverModel::shared_gain})) == one);
    }
  }
}

TEST_CASE("serialize_csv format") {
  CHECK(serialize_csv({}) == std::string(csv_header) + "\n");

  SweepSpec s;
  s.snr_db = 20;
  s.g_min = 0;
  s.g_max = 1;
  s.steps = 2;
  const auto rows = run_sweep(s);
  const std::string text = serialize_csv(std::span(rows.data(), 1));
  std::istringstream in(text);
  std::string l1, l2, l3;
  std::getline(in, l1);
  std::getline(in, l2);
  CHECK(l1 == csv_header);
  CHECK(l2.rfind("0,20,weak,", 0) == 0);
  CHECK_FALSE(std::getline(in, l3));
  CHECK(text.back() == '\n');
  CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("format_number uses 12 significant digits") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(65.0) == "65");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(6.32455531946e-07) == "6.32455531946e-07");
  CHECK(format_number(-2.5) == "-2.5");
}

TEST_CASE("CSV round trip") {
  SweepSpec s;
  s.steps = 301;
  s.mode = SweepMode::precoded;
  s.slots = 2;
  std::vector<SweepRow> rows;
  for (const SweepRow& r : run_sweep(s)) rows.push_back(rounded(r));
  const std::string text = serialize_csv(rows);
  const auto back = parse_csv(text);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(equal_rows(back[i], rows[i]));
  CHECK(serialize_csv(back) == text);
  CHECK(parse_csv(serialize_csv({})).empty());
}

TEST_CASE("parse_csv rejects malformed input") {
  CHECK_THROWS_AS(parse_csv(""), error);
  CHECK_THROWS_AS(parse_csv("g,snr\n"), error);
  const std::string h = std::string(csv_header) + "\n";
  CHECK_THROWS_AS(parse_csv(h + "1,2,3\n"), error);
  CHECK_THROWS_AS(parse_csv(h + "1,65,strong,1,1,1:0,0-1,1,1,1,1\n"), error);
  CHECK_THROWS_AS(parse_csv(h + "x,65,strong,1,1,1:0,0:1,1,1,1,1\n"), error);
  CHECK_THROWS_AS(parse_csv(h + "1,65,huge,1,1,1:0,0:1,1,1,1,1\n"), error);
}

TEST_CASE("config examples") {
  SweepSpec s;
  apply_config(parse_config_text("snr_db = 65\n"), s);
  CHECK(s.snr_db == 65.0);

  try {
    parse_config_text("# header\nsnr_db = 60\nstepz = 10\n");
    FAIL("expected UnknownKey");
  } catch (const config_error& e) {
    CHECK(e.code() == errc::unknown_key);
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("stepz") != std::string::npos);
  }
}

TEST_CASE("config keys cover the sweep spec") {
  const char* text =
      "snr_db = 70\n"
      "g_min = 1   # lower edge\n"
      "g_max = 4\n"
      "\n"
      "steps = 3001\n"
      "mode = precoded\n"
      "slots = 13\n"
      "coeff_bound = 30\n"
      "output_path = \"out dir/rates.csv\"\n";
  SweepSpec s;
  apply_config(parse_config_text(text), s);
  CHECK(s.snr_db == 70.0);
  CHECK(s.g_min == 1.0);
  CHECK(s.g_max == 4.0);
  CHECK(s.steps == 3001);
  CHECK(s.mode == SweepMode::precoded);
  CHECK(s.slots == 13);
  CHECK(s.coeff_bound == 30);
  CHECK(s.output_path == "out dir/rates.csv");
  CHECK(config_keys().size() == 8);
}

TEST_CASE("config errors carry line numbers") {
  auto line_of = [](const char* text, errc code) {
    try {
      SweepSpec s;
      apply_config(parse_config_text(text), s);
    } catch (const config_error& e) {
      return e.code() == code ? e.line() : -1;
    }
    return -2;
  };
  CHECK(line_of("snr_db = 65\njust words\n", errc::config_parse) == 2);
  CHECK(line_of("\n\n= 5\n", errc::config_parse) == 3);
  CHECK(line_of("steps =\n", errc::config_parse) == 1);
  CHECK(line_of("steps = 5\nsteps = 6\n", errc::config_parse) == 2);
  CHECK(line_of("g_min = 0\nsteps = many\n", errc::config_parse) == 2);
  CHECK(line_of("snr_db = 6 5\n", errc::config_parse) == 1);
  CHECK(line_of("mode = fancy\n", errc::config_parse) == 1);
}

TEST_CASE("config file on disk") {
  const fs::path dir = scratch_dir();
  const fs::path cfg = dir / "a.cfg";
  std::ofstream(cfg) << "snr_db = 55\nsteps = 11\n";
  SweepSpec s;
  apply_config(parse_config(cfg), s);
  CHECK(s.snr_db == 55.0);
  CHECK(s.steps == 11);
  CHECK_THROWS_AS(parse_config(dir / "missing.cfg"), config_error);
  fs::remove_all(dir);
}

TEST_CASE("write_file_atomic") {
  const fs::path dir = scratch_dir();
  const fs::path out = dir / "x.csv";
  write_file_atomic(out, "first\n");
  CHECK(slurp(out) == "first\n");
  write_file_atomic(out, "second\n");
  CHECK(slurp(out) == "second\n");
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir)) ++files;
  CHECK(files == 1);
  CHECK_THROWS_AS(write_file_atomic(dir / "no" / "such" / "dir.csv", "x"), error);
  fs::remove_all(dir);
}

TEST_CASE("sweep mode names") {
  for (SweepMode m : {SweepMode::plain, SweepMode::golden_sampled, SweepMode::precoded, SweepMode::adaptive}) {
    CHECK(sweep_mode_from_string(to_string(m)) == m);
  }
  CHECK_FALSE(sweep_mode_from_string("fancy").has_value());
}
