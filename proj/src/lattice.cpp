#include "cfifc/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "cfifc/detail/compensated.hpp"
#include "cfifc/error.hpp"

namespace cfifc {
namespace {

IntVec2 operator+(IntVec2 a, IntVec2 b) { return {a.x + b.x, a.y + b.y}; }
IntVec2 operator-(IntVec2 a, IntVec2 b) { return {a.x - b.x, a.y - b.y}; }
IntVec2 operator*(std::int64_t k, IntVec2 a) { return {k * a.x, k * a.y}; }

bool independent(IntVec2 a, IntVec2 b) { return a.x * b.y - a.y * b.x != 0; }

// Picks the successive-minima achievers out of a candidate set that is known
// to contain them. Candidates must already be in canonical sign. With
// keep_order, equal values go to the earlier candidate instead of the
// tie_break_less winner.
MinimaResult select_minima(const GramMatrix2& gram, std::span<const IntVec2> candidates,
                           bool keep_order) {
  struct Scored {
    IntVec2 v;
    double value;
  };
  std::vector<Scored> scored;
  scored.reserve(candidates.size());
  for (IntVec2 v : candidates) {
    if (v.x == 0 && v.y == 0) continue;
    scored.push_back({v, quadratic_form_eval(gram, v)});
  }
  auto better = [keep_order](const Scored& a, const Scored& b) {
    if (a.value != b.value) return a.value < b.value;
    return !keep_order && tie_break_less(a.v, b.v);
  };

  const Scored* first = nullptr;
  for (const Scored& s : scored) {
    if (first == nullptr || better(s, *first)) first = &s;
  }
  const Scored* second = nullptr;
  for (const Scored& s : scored) {
    if (first == nullptr || !independent(s.v, first->v)) continue;
    if (second == nullptr || better(s, *second)) second = &s;
  }
  if (first == nullptr || second == nullptr) {
    throw error(errc::numerical_instability, "candidate set does not span the lattice");
  }

  MinimaResult result;
  result.lambda1 = first->value;
  result.lambda2 = second->value;
  result.v1 = first->v;
  result.v2 = second->v;
  result.map = UnimodularMap::from_columns(first->v, second->v);
  const std::int64_t det = result.map.determinant();
  if (det != 1 && det != -1) {
    throw error(errc::numerical_instability,
                "minima achievers do not form a basis (det " + std::to_string(det) + ")");
  }
  return result;
}

}  // namespace

IntVec2 canonical_sign(IntVec2 v) {
  if (v.x < 0 || (v.x == 0 && v.y < 0)) return {-v.x, -v.y};
  return v;
}

bool tie_break_less(IntVec2 a, IntVec2 b) {
  return std::make_tuple(std::llabs(a.x), std::llabs(a.y), a.x, a.y) <
         std::make_tuple(std::llabs(b.x), std::llabs(b.y), b.x, b.y);
}

double GramMatrix2::determinant() const {
  return detail::diff_of_products(g11, g22, g12, g12);
}

bool GramMatrix2::is_positive_definite() const {
  return std::isfinite(g11) && std::isfinite(g12) && std::isfinite(g22) && g11 > 0.0 &&
         determinant() > 0.0;
}

GramMatrix2 Basis2::gram() const {
  return {b11 * b11, b11 * b12, b12 * b12 + b22 * b22};
}

double quadratic_form_eval(const GramMatrix2& gram, IntVec2 v) {
  // Integer monomials are exact in double up to 2^53.
  const double coeffs[3] = {gram.g11, gram.g12, gram.g22};
  const double monomials[3] = {static_cast<double>(v.x * v.x),
                               static_cast<double>(2 * v.x * v.y),
                               static_cast<double>(v.y * v.y)};
  return detail::dot2(coeffs, monomials);
}

double bilinear_form_eval(const GramMatrix2& gram, IntVec2 u, IntVec2 v) {
  const double coeffs[3] = {gram.g11, gram.g12, gram.g22};
  const double monomials[3] = {static_cast<double>(u.x * v.x),
                               static_cast<double>(u.x * v.y + u.y * v.x),
                               static_cast<double>(u.y * v.y)};
  return detail::dot2(coeffs, monomials);
}

GramMatrix2 reduced_gram(const GramMatrix2& gram, const UnimodularMap& map) {
  const IntVec2 c1 = map.first_column();
  const IntVec2 c2 = map.second_column();
  return {quadratic_form_eval(gram, c1), bilinear_form_eval(gram, c1, c2),
          quadratic_form_eval(gram, c2)};
}

void require_positive_definite(const GramMatrix2& gram) {
  if (!gram.is_positive_definite()) {
    throw error(errc::not_positive_definite,
                "Gram matrix [[" + std::to_string(gram.g11) + ", " + std::to_string(gram.g12) +
                    "], [" + std::to_string(gram.g12) + ", " + std::to_string(gram.g22) +
                    "]] is not positive definite");
  }
}

Basis2 cholesky_upper(const GramMatrix2& gram) {
  require_positive_definite(gram);
  const double b11 = std::sqrt(gram.g11);
  const double b12 = gram.g12 / b11;
  // det/g11 rather than g22 - b12^2: the latter cancels when g12^2 ~ g11*g22.
  const double b22 = std::sqrt(gram.determinant() / gram.g11);
  return {b11, b12, b22};
}

MinimaResult gauss_reduce(const GramMatrix2& gram) {
  require_positive_definite(gram);

  IntVec2 b1{1, 0};
  IntVec2 b2{0, 1};
  double q1 = gram.g11;
  double q2 = gram.g22;
  if (q2 < q1) {
    std::swap(b1, b2);
    std::swap(q1, q2);
  }

  constexpr double max_multiplier = 4.0e15;
  for (long iter = 0;; ++iter) {
    if (iter >= max_reduction_iterations) {
      throw error(errc::numerical_instability, "Gauss reduction did not terminate");
    }
    const double mu = bilinear_form_eval(gram, b1, b2) / q1;
    if (!std::isfinite(mu) || std::abs(mu) > max_multiplier) {
      throw error(errc::numerical_instability, "size-reduction multiplier out of range");
    }
    const auto m = static_cast<std::int64_t>(std::llround(mu));
    if (m != 0) {
      b2 = b2 - m * b1;
      q2 = quadratic_form_eval(gram, b2);
    }
    if (q2 < q1) {
      std::swap(b1, b2);
      std::swap(q1, q2);
    } else {
      break;
    }
  }

  // The sums only win when rounding in the form values left the basis a hair
  // short of reduced; on exact ties the reduced basis itself is kept.
  const IntVec2 candidates[4] = {canonical_sign(b1), canonical_sign(b2),
                                 canonical_sign(b1 + b2), canonical_sign(b1 - b2)};
  return select_minima(gram, candidates, true);
}

MinimaResult brute_force_minima(const GramMatrix2& gram, std::int64_t radius_cap) {
  require_positive_definite(gram);
  if (radius_cap < 1) throw error(errc::invalid_argument, "radius_cap must be >= 1");

  const double bound = gauss_reduce(gram).lambda2;
  const double det = gram.determinant();
  const double trace = gram.g11 + gram.g22;
  const double mu_max = 0.5 * (trace + std::hypot(gram.g11 - gram.g22, 2.0 * gram.g12));
  const double mu_min = det / mu_max;
  const double box = std::sqrt(bound / mu_min);
  if (!(box <= static_cast<double>(radius_cap))) {
    throw error(errc::radius_exceeded, "enumeration box half-width " + std::to_string(box) +
                                           " exceeds cap " + std::to_string(radius_cap));
  }
  const auto radius = static_cast<std::int64_t>(std::ceil(box));

  // q(x, y) <= bound  <=>  det*x^2 + (g22*y + g12*x)^2 <= g22*bound.
  const double limit = gram.g22 * bound;
  const auto x_max =
      std::min(radius, static_cast<std::int64_t>(std::floor(std::sqrt(limit / det))) + 1);
  const double accept = bound * (1.0 + 1e-9);

  std::vector<IntVec2> inside;
  for (std::int64_t x = 0; x <= x_max; ++x) {
    const double xd = static_cast<double>(x);
    const double center = -gram.g12 * xd / gram.g22;
    const double half = std::sqrt(std::max(0.0, limit - det * xd * xd)) / gram.g22;
    const auto y_lo =
        std::max(-radius, static_cast<std::int64_t>(std::floor(center - half)) - 1);
    const auto y_hi = std::min(radius, static_cast<std::int64_t>(std::ceil(center + half)) + 1);
    for (std::int64_t y = y_lo; y <= y_hi; ++y) {
      // Canonical half-plane only: x > 0, or x == 0 and y > 0.
      if (x == 0 && y <= 0) continue;
      const IntVec2 v{x, y};
      if (quadratic_form_eval(gram, v) <= accept) inside.push_back(v);
    }
  }
  return select_minima(gram, inside, false);
}

}  // namespace cfifc
