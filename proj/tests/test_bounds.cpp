#include <doctest.h>

#include <cmath>
#include <utility>
#include <random>

#include "cfifc/bounds.hpp"
#include "cfifc/diophantine.hpp"
#include "cfifc/error.hpp"
#include "oracles.hpp"

using namespace cfifc;

namespace {

const double snr65 = std::pow(10.0, 6.5);

bool throws_code(auto&& fn, errc code) {
  try {
    fn();
  } catch (const error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("classify_regime examples") {
  CHECK(interference_exponent(snr65, std::pow(10.0, 4.5)) == doctest::Approx(0.692).epsilon(1e-3));
  CHECK(classify_regime(snr65, std::pow(10.0, 4.5)) == Regime::intermediate);
  CHECK(classify_regime(snr65, golden_ratio * golden_ratio * snr65) == Regime::strong);
  CHECK(classify_regime(100, 1e6) == Regime::very_strong);
  CHECK(classify_regime(100, 0) == Regime::weak);
  CHECK(classify_regime(100, 100) == Regime::strong);
  CHECK(classify_regime(100, 100 * 101) == Regime::strong);
  CHECK(classify_regime(100, std::nextafter(100.0 * 101, 1e9)) == Regime::very_strong);
  CHECK(throws_code([] { classify_regime(1, 5); }, errc::invalid_snr));
  CHECK(throws_code([] { classify_regime(0.5, 5); }, errc::invalid_snr));
}

TEST_CASE("regime names round trip") {
  for (Regime r : {Regime::weak, Regime::intermediate, Regime::strong, Regime::very_strong}) {
    CHECK(regime_from_string(to_string(r)) == r);
  }
  CHECK(to_string(Regime::very_strong) == "very_strong");
  CHECK_FALSE(regime_from_string("medium").has_value());
}

TEST_CASE("classify_regime is total and ordered in inr") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 2000; ++i) {
    const double snr = std::pow(10.0, oracle::uniform(rng, 0.01, 14));
    Regime prev = Regime::weak;
    for (double e = -3; e <= 30; e += 0.25) {
      const double inr = std::pow(10.0, e);
      const Regime r = classify_regime(snr, inr);
      CHECK(static_cast<int>(r) >= static_cast<int>(prev));
      prev = r;
    }
  }
}

TEST_CASE("per_user_upper_bound examples") {
  for (double snr : {2.0, 100.0, snr65}) {
    CHECK(per_user_upper_bound(snr, 0) == doctest::Approx(0.5 * std::log2(1 + snr)).epsilon(1e-15));
    CHECK(sum_upper_bound(snr, 0) == doctest::Approx(std::log2(1 + snr)).epsilon(1e-15));
  }
  const double inr = golden_ratio * golden_ratio * snr65;
  CHECK(per_user_upper_bound(snr65, inr) == doctest::Approx(0.25 * std::log2(1 + 1.14412e7)).epsilon(1e-6));
  CHECK(per_user_upper_bound(snr65, inr) == doctest::Approx(5.86193).epsilon(2e-6));
  CHECK(sum_upper_bound(snr65, inr) == doctest::Approx(11.72387).epsilon(2e-6));
  CHECK(per_user_upper_bound(100, 1e6) == doctest::Approx(3.32913).epsilon(1e-5));
}

TEST_CASE("weak-regime bound is the three-term minimum") {
  const double snr = 1e4;
  for (double inr : {1.0, 10.0, 100.0, 1000.0, 9999.0}) {
    const double t1 = 0.5 * std::log2(1 + snr);
    const double t2 = 0.25 * (std::log2(1 + snr + inr) + std::log2(1 + snr / (1 + inr)));
    const double t3 = 0.5 * std::log2(1 + inr + snr / (1 + inr));
    CHECK(per_user_upper_bound(snr, inr) == doctest::Approx(std::min({t1, t2, t3})).epsilon(1e-14));
  }
}

TEST_CASE("strong-regime sum bound never exceeds the interference-free capacity") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 5000; ++i) {
    const double snr = std::pow(10.0, oracle::uniform(rng, 0, 14));
    const double inr = snr * std::pow(10.0, oracle::uniform(rng, 0, 16));
    CHECK(sum_upper_bound(snr, inr) <= std::log2(1 + snr) + 1e-12);
    CHECK(sum_upper_bound(snr, inr) == 2 * per_user_upper_bound(snr, inr));
  }
}

TEST_CASE("continuity at the very-strong boundary") {
  for (double e = 0.1; e <= 14; e += 0.1) {
    const double snr = std::pow(10.0, e);
    const double a = 0.5 * std::log2(1 + snr);
    const double b = 0.25 * std::log2(1 + snr + snr * (1 + snr));
    CHECK(std::abs(a - b) / a <= 1e-9);
    const double at = per_user_upper_bound(snr, snr * (1 + snr));
    CHECK(std::abs(at - a) / a <= 1e-9);
  }
}

TEST_CASE("bound monotonicity") {
  // Non-increasing in inr below sqrt(snr) and from snr^(2/3) up to snr.
  for (double e = 3.5; e <= 14; e += 0.5) {
    const double snr = std::pow(10.0, e);
    for (auto [lo, hi] : {std::pair{0.0, std::sqrt(snr) - 1}, std::pair{std::cbrt(snr * snr), snr}}) {
      double prev = per_user_upper_bound(snr, lo);
      for (int k = 1; k <= 2000; ++k) {
        const double b = per_user_upper_bound(snr, lo + (hi - lo) * k / 2000.0);
        CHECK(b <= prev + 1e-12);
        prev = b;
      }
    }
  }
  double prev = 0;
  for (double e = -2; e <= 14; e += 0.01) {
    const double b = per_user_upper_bound(std::pow(10.0, e), 0);
    CHECK(b >= prev);
    prev = b;
  }
}

TEST_CASE("weak-regime bound rises between snr^(1/2) and snr^(2/3)") {
  // The W-shaped generalized degrees of freedom curve: the third term grows
  // with inr there.
  CHECK(per_user_upper_bound(snr65, std::pow(snr65, 0.6)) >
        per_user_upper_bound(snr65, std::pow(snr65, 0.5)) + 0.5);
}

TEST_CASE("bound branch agrees with the classifier at inr = snr") {
  for (double e = 0.1; e <= 14; e += 0.3) {
    const double snr = std::pow(10.0, e);
    CHECK(classify_regime(snr, snr) == Regime::strong);
    const double strong = std::min(0.5 * std::log2(1 + snr), 0.25 * std::log2(1 + 2 * snr));
    CHECK(per_user_upper_bound(snr, snr) == doctest::Approx(strong).epsilon(1e-14));
  }
}
