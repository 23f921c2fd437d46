#pragma once

// Continued fractions, the q*||q theta|| statistic, and numbers equivalent to
// the golden ratio under GL2(Z) Moebius maps.

#include <cstdint>
#include <vector>

namespace cfifc {

inline constexpr double golden_ratio = 1.6180339887498948482;
inline constexpr double golden_conjugate = -0.6180339887498948482;
inline constexpr int default_coeff_bound = 20;
inline constexpr double rational_guard = 1e-12;

struct ContinuedFraction {
  std::int64_t a0 = 0;
  std::vector<std::int64_t> partial_quotients;
};

struct Convergent {
  std::int64_t p = 0;
  std::int64_t q = 1;

  friend bool operator==(const Convergent&, const Convergent&) = default;
};

// Stops early once a remainder is within rational_guard of an integer.
ContinuedFraction continued_fraction(double theta, int n_terms);

// p_k / q_k for k = 0..len(partial_quotients).
std::vector<Convergent> convergents(const ContinuedFraction& cf);

// q * min_p |q theta - p|.
double scaled_dist(double theta, std::int64_t q);

struct HurwitzScan {
  double min_value = 0.0;
  std::int64_t argmin_q = 1;

  struct Record {
    std::int64_t q;
    double value;
  };
  // Each entry strictly improves on the previous minimum.
  std::vector<Record> trace;
  // scaled_dist for every q = 1..q_max, index q-1.
  std::vector<double> values;
};

HurwitzScan hurwitz_scan(double theta, std::int64_t q_max);

// (a phi + b) / (c phi + d) with ad - bc = +-1.
struct GoldenEquivalent {
  std::int64_t a = 1;
  std::int64_t b = 0;
  std::int64_t c = 0;
  std::int64_t d = 1;
  double value = golden_ratio;

  std::int64_t determinant() const { return a * d - b * c; }
  std::int64_t max_abs_entry() const;
};

// Throws error(not_unimodular) unless ad - bc = +-1, error(degenerate_map)
// when c = d = 0. The value is computed from the normal form
// (P + s phi) / D, so maps with equal exact value give identical doubles.
GoldenEquivalent golden_equivalent_value(std::int64_t a, std::int64_t b, std::int64_t c,
                                         std::int64_t d);

// Matrix product lhs * rhs as a map (composition lhs after rhs).
GoldenEquivalent compose(const GoldenEquivalent& lhs, const GoldenEquivalent& rhs);
GoldenEquivalent inverse(const GoldenEquivalent& map);

// (a t + b) / (c t + d).
double apply_moebius(const GoldenEquivalent& map, double t);

// Exhaustive search over every unimodular (a, b, c, d) with entries bounded
// by coeff_bound. The sign of each tuple is normalised so the first nonzero
// of (c, d) is positive. Minimises |g - value|; ties go to the smallest
// max|entry|, then lexicographic (c, d, a, b).
GoldenEquivalent nearest_golden_equivalent(double g, int coeff_bound = default_coeff_bound);

// Sorted list of distinct golden-equivalent values for one coefficient
// bound, answering nearest-value queries in O(log n). Gives the same answer
// as nearest_golden_equivalent.
class GoldenEquivalentTable {
 public:
  explicit GoldenEquivalentTable(int coeff_bound = default_coeff_bound);

  GoldenEquivalent nearest(double g) const;
  int coeff_bound() const { return coeff_bound_; }
  const std::vector<GoldenEquivalent>& entries() const { return entries_; }

 private:
  int coeff_bound_;
  std::vector<GoldenEquivalent> entries_;
};

}  // namespace cfifc
