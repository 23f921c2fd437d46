#include "cfifc/diophantine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <tuple>

#include "cfifc/detail/compensated.hpp"
#include "cfifc/error.hpp"

namespace cfifc {
namespace {

// Exact value of (a phi + b)/(c phi + d) written as (p + s phi)/den with
// den > 0 and s = +-1. Two unimodular maps agree at phi iff their normal
// forms are equal.
struct NormalForm {
  std::int64_t p;
  std::int64_t s;
  std::int64_t den;

  double value() const {
    return (static_cast<double>(p) + static_cast<double>(s) * golden_ratio) /
           static_cast<double>(den);
  }
  auto key() const { return std::make_tuple(p, s, den); }
};

// Multiplying through by the conjugate (c phibar + d) and using
// phi*phibar = -1, phi + phibar = 1.
NormalForm normal_form(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  NormalForm f{b * c + b * d - a * c, a * d - b * c, d * d + c * d - c * c};
  if (f.den < 0) {
    f.p = -f.p;
    f.s = -f.s;
    f.den = -f.den;
  }
  return f;
}

auto search_key(const GoldenEquivalent& e, double g) {
  return std::make_tuple(std::abs(g - e.value), e.max_abs_entry(), e.c, e.d, e.a, e.b);
}

// Visits every sign-normalised unimodular tuple with entries in [-bound, bound].
template <typename Visit>
void for_each_unimodular(int bound, Visit&& visit) {
  for (std::int64_t c = 0; c <= bound; ++c) {
    for (std::int64_t d = -bound; d <= bound; ++d) {
      if (c == 0 && d <= 0) continue;
      // ad - bc = +-1 forces gcd(c, d) = 1.
      if (std::gcd(c, d) != 1) continue;
      for (std::int64_t a = -bound; a <= bound; ++a) {
        for (std::int64_t b = -bound; b <= bound; ++b) {
          const std::int64_t det = a * d - b * c;
          if (det != 1 && det != -1) continue;
          visit(a, b, c, d);
        }
      }
    }
  }
}

void require_bound(int coeff_bound) {
  if (coeff_bound < 1) throw error(errc::invalid_argument, "coeff_bound must be >= 1");
}

}  // namespace

ContinuedFraction continued_fraction(double theta, int n_terms) {
  if (n_terms < 1) throw error(errc::invalid_argument, "n_terms must be >= 1");
  if (!std::isfinite(theta)) throw error(errc::invalid_argument, "theta must be finite");

  ContinuedFraction cf;
  double head = std::floor(theta);
  double rem = theta - head;
  if (1.0 - rem < rational_guard) {
    head += 1.0;
    rem = 0.0;
  }
  cf.a0 = static_cast<std::int64_t>(head);

  for (int k = 0; k < n_terms; ++k) {
    if (rem < rational_guard) break;
    const double t = 1.0 / rem;
    double quotient = std::floor(t);
    rem = t - quotient;
    if (1.0 - rem < rational_guard) {
      quotient += 1.0;
      rem = 0.0;
    }
    cf.partial_quotients.push_back(static_cast<std::int64_t>(quotient));
  }
  return cf;
}

std::vector<Convergent> convergents(const ContinuedFraction& cf) {
  std::vector<Convergent> out;
  out.reserve(cf.partial_quotients.size() + 1);
  std::int64_t p_prev = 1, q_prev = 0;
  std::int64_t p = cf.a0, q = 1;
  out.push_back({p, q});
  for (std::int64_t a : cf.partial_quotients) {
    const std::int64_t p_next = a * p + p_prev;
    const std::int64_t q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
    out.push_back({p, q});
  }
  return out;
}

double scaled_dist(double theta, std::int64_t q) {
  if (q < 1) throw error(errc::invalid_argument, "q must be >= 1");
  // q*theta carried as hi + lo so the fractional part keeps full precision.
  const detail::double_word prod = detail::two_prod(static_cast<double>(q), theta);
  const double nearest = std::nearbyint(prod.hi);
  const double dist = std::abs((prod.hi - nearest) + prod.lo);
  return static_cast<double>(q) * dist;
}

HurwitzScan hurwitz_scan(double theta, std::int64_t q_max) {
  if (q_max < 1) throw error(errc::invalid_argument, "q_max must be >= 1");
  HurwitzScan scan;
  scan.values.reserve(static_cast<std::size_t>(q_max));
  for (std::int64_t q = 1; q <= q_max; ++q) {
    const double v = scaled_dist(theta, q);
    scan.values.push_back(v);
    if (scan.trace.empty() || v < scan.min_value) {
      scan.min_value = v;
      scan.argmin_q = q;
      scan.trace.push_back({q, v});
    }
  }
  return scan;
}

std::int64_t GoldenEquivalent::max_abs_entry() const {
  return std::max({std::llabs(a), std::llabs(b), std::llabs(c), std::llabs(d)});
}

GoldenEquivalent golden_equivalent_value(std::int64_t a, std::int64_t b, std::int64_t c,
                                         std::int64_t d) {
  if (c == 0 && d == 0) throw error(errc::degenerate_map, "c and d are both zero");
  const std::int64_t det = a * d - b * c;
  if (det != 1 && det != -1) {
    throw error(errc::not_unimodular, "determinant is " + std::to_string(det));
  }
  return {a, b, c, d, normal_form(a, b, c, d).value()};
}

GoldenEquivalent compose(const GoldenEquivalent& lhs, const GoldenEquivalent& rhs) {
  return golden_equivalent_value(lhs.a * rhs.a + lhs.b * rhs.c, lhs.a * rhs.b + lhs.b * rhs.d,
                                 lhs.c * rhs.a + lhs.d * rhs.c, lhs.c * rhs.b + lhs.d * rhs.d);
}

GoldenEquivalent inverse(const GoldenEquivalent& map) {
  const std::int64_t det = map.determinant();
  return golden_equivalent_value(det * map.d, -det * map.b, -det * map.c, det * map.a);
}

double apply_moebius(const GoldenEquivalent& map, double t) {
  return (static_cast<double>(map.a) * t + static_cast<double>(map.b)) /
         (static_cast<double>(map.c) * t + static_cast<double>(map.d));
}

GoldenEquivalent nearest_golden_equivalent(double g, int coeff_bound) {
  require_bound(coeff_bound);
  if (!std::isfinite(g)) throw error(errc::invalid_argument, "g must be finite");

  GoldenEquivalent best;
  bool have = false;
  for_each_unimodular(coeff_bound, [&](std::int64_t a, std::int64_t b, std::int64_t c,
                                       std::int64_t d) {
    const GoldenEquivalent candidate{a, b, c, d, normal_form(a, b, c, d).value()};
    if (!have || search_key(candidate, g) < search_key(best, g)) {
      best = candidate;
      have = true;
    }
  });
  return best;
}

GoldenEquivalentTable::GoldenEquivalentTable(int coeff_bound) : coeff_bound_(coeff_bound) {
  require_bound(coeff_bound);
  // One representative per exact value, chosen with the search tie-break.
  std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t>, GoldenEquivalent> classes;
  for_each_unimodular(coeff_bound, [&](std::int64_t a, std::int64_t b, std::int64_t c,
                                       std::int64_t d) {
    const NormalForm form = normal_form(a, b, c, d);
    const GoldenEquivalent candidate{a, b, c, d, form.value()};
    auto [it, inserted] = classes.try_emplace(form.key(), candidate);
    if (!inserted && search_key(candidate, 0.0) < search_key(it->second, 0.0)) {
      it->second = candidate;
    }
  });
  entries_.reserve(classes.size());
  for (const auto& [key, rep] : classes) entries_.push_back(rep);
  std::sort(entries_.begin(), entries_.end(), [](const auto& x, const auto& y) {
    return std::make_tuple(x.value, x.max_abs_entry(), x.c, x.d, x.a, x.b) <
           std::make_tuple(y.value, y.max_abs_entry(), y.c, y.d, y.a, y.b);
  });
}

GoldenEquivalent GoldenEquivalentTable::nearest(double g) const {
  if (!std::isfinite(g)) throw error(errc::invalid_argument, "g must be finite");
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), g,
                                   [](const GoldenEquivalent& e, double v) { return e.value < v; });
  const auto pos = static_cast<std::ptrdiff_t>(it - entries_.begin());
  const auto size = static_cast<std::ptrdiff_t>(entries_.size());
  // Window wide enough to cover distinct classes that round to the same double.
  const GoldenEquivalent* best = nullptr;
  for (std::ptrdiff_t i = std::max<std::ptrdiff_t>(0, pos - 2);
       i < std::min<std::ptrdiff_t>(size, pos + 2); ++i) {
    const GoldenEquivalent& e = entries_[static_cast<std::size_t>(i)];
    if (best == nullptr || search_key(e, g) < search_key(*best, g)) best = &e;
  }
  return *best;
}

}  // namespace cfifc
