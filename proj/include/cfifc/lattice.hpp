#pragma once

// Two-dimensional lattice machinery: Gram matrices, Cholesky bases,
// Lagrange-Gauss reduction and an exhaustive enumeration oracle.
//
// Successive minima are quadratic-form values (squared lengths), not lengths.

#include <cstdint>

namespace cfifc {

struct IntVec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const IntVec2&, const IntVec2&) = default;
};

// First nonzero coordinate made positive.
IntVec2 canonical_sign(IntVec2 v);

// Strict weak order used to break ties between equally short vectors:
// lexicographic on (|x|, |y|, x, y).
bool tie_break_less(IntVec2 a, IntVec2 b);

// Symmetric 2x2 matrix of the form g11*x^2 + 2*g12*x*y + g22*y^2.
struct GramMatrix2 {
  double g11 = 1.0;
  double g12 = 0.0;
  double g22 = 1.0;

  // g11*g22 - g12^2, computed with a few ulps of relative error.
  double determinant() const;
  bool is_positive_definite() const;
};

// Upper-triangular generator, columns are the basis vectors; b21 == 0.
struct Basis2 {
  double b11 = 1.0;
  double b12 = 0.0;
  double b22 = 1.0;

  // B^T B.
  GramMatrix2 gram() const;
};

struct UnimodularMap {
  std::int64_t u11 = 1;
  std::int64_t u12 = 0;
  std::int64_t u21 = 0;
  std::int64_t u22 = 1;

  std::int64_t determinant() const { return u11 * u22 - u12 * u21; }
  IntVec2 first_column() const { return {u11, u21}; }
  IntVec2 second_column() const { return {u12, u22}; }

  static UnimodularMap from_columns(IntVec2 first, IntVec2 second) {
    return {first.x, second.x, first.y, second.y};
  }

  friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;
};

struct MinimaResult {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  IntVec2 v1;
  IntVec2 v2;
  // Columns are v1 and v2.
  UnimodularMap map;
};

inline constexpr std::int64_t default_radius_cap = 10'000;
inline constexpr long max_reduction_iterations = 1'000'000;

double quadratic_form_eval(const GramMatrix2& gram, IntVec2 v);
double bilinear_form_eval(const GramMatrix2& gram, IntVec2 u, IntVec2 v);

// U^T G U.
GramMatrix2 reduced_gram(const GramMatrix2& gram, const UnimodularMap& map);

// Throws error(not_positive_definite) unless g11 > 0 and det > 0.
void require_positive_definite(const GramMatrix2& gram);

Basis2 cholesky_upper(const GramMatrix2& gram);

// Lagrange-Gauss reduction carried out on the Gram matrix. The returned
// map U satisfies 2|(U^T G U)_12| <= (U^T G U)_11 <= (U^T G U)_22, and its
// columns are the canonical achievers of the two successive minima. Equal
// minima keep the order the reduction produced them in, so the identity
// stays the identity.
MinimaResult gauss_reduce(const GramMatrix2& gram);

// Enumerates every integer point of the ellipse q(v) <= v0, where v0 is the
// value Gauss reduction reports for lambda2. Throws error(radius_exceeded)
// when the enclosing box, sqrt(v0 / mu_min), is wider than radius_cap.
// Equal minima are resolved with tie_break_less.
MinimaResult brute_force_minima(const GramMatrix2& gram,
                                std::int64_t radius_cap = default_radius_cap);

}  // namespace cfifc
