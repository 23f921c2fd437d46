#pragma once

// Error-free transformations used to evaluate 2x2 quadratic forms whose
// values sit many orders of magnitude below their individual terms (high SNR
// makes (xg - y)^2 tiny while g11*x^2 is large).

#include <cmath>
#include <cstddef>

namespace cfifc::detail {

struct double_word {
  double hi;
  double lo;
};

inline double_word two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline double_word two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

// Sum of products a[i]*b[i], accumulated as if in twice the working
// precision (Dot2). The result is as accurate as the exactly rounded value
// up to a term of order eps^2 * sum |a[i]*b[i]|.
template <std::size_t N>
double dot2(const double (&a)[N], const double (&b)[N]) {
  double_word acc = two_prod(a[0], b[0]);
  double tail = acc.lo;
  double sum = acc.hi;
  for (std::size_t i = 1; i < N; ++i) {
    const double_word p = two_prod(a[i], b[i]);
    const double_word s = two_sum(sum, p.hi);
    sum = s.hi;
    tail += p.lo + s.lo;
  }
  return sum + tail;
}

// a*b - c*d with a relative error of a few ulps (Kahan).
inline double diff_of_products(double a, double b, double c, double d) {
  const double w = d * c;
  const double e = std::fma(-d, c, w);
  const double f = std::fma(a, b, -w);
  return f + e;
}

}  // namespace cfifc::detail
