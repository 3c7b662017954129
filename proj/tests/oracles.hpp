#pragma once

// Test-only reference implementations. Nothing here calls into the library,
// so expected values computed with these stay independent of the code under
// test.

#include <cmath>
#include <functional>

namespace oracle {

/// erfc in long double: Maclaurin series of erf for |x| < 3, Lentz continued
/// fraction for the tail.
inline long double erfc_ld(long double x) {
  constexpr long double kPi = 3.141592653589793238462643383279502884L;
  if (x < 0) return 2.0L - erfc_ld(-x);
  if (x < 3.0L) {
    long double term = x, sum = x;
    for (int n = 1; n < 400; ++n) {
      term *= -x * x / n;
      const long double add = term / (2 * n + 1);
      sum += add;
      if (std::fabs(add) < 1e-30L) break;
    }
    return 1.0L - 2.0L / std::sqrt(kPi) * sum;
  }
  // erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + 2/(x + ...)))))
  const long double tiny = 1e-300L;
  long double f = x, c = x, d = 0.0L;
  for (int n = 1; n < 2000; ++n) {
    const long double a = n / 2.0L;
    d = x + a * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = x + a / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0L / d;
    const long double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0L) < 1e-22L) break;
  }
  return std::exp(-x * x) / std::sqrt(kPi) / f;
}

inline long double q_ld(long double x) {
  return 0.5L * erfc_ld(x / std::sqrt(2.0L));
}

/// Bisection for f(x) = target on [lo, hi], f monotone.
inline long double bisect(const std::function<long double(long double)>& f, long double target,
                          long double lo, long double hi, int iters = 200) {
  const bool increasing = f(hi) > f(lo);
  for (int i = 0; i < iters; ++i) {
    const long double mid = 0.5L * (lo + hi);
    if ((f(mid) < target) == increasing) lo = mid; else hi = mid;
  }
  return 0.5L * (lo + hi);
}

/// Composite Simpson rule with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 20000) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace oracle
