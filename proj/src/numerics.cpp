#include "risnoma/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace risnoma {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::domain_error(std::string(what) + ": non-finite input");
  }
}

}  // namespace

double q_function(double x) {
  require_finite(x, "q_function");
  return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double normal_cdf(double x) {
  require_finite(x, "normal_cdf");
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double normal_pdf(double x) {
  require_finite(x, "normal_pdf");
  return std::exp(-0.5 * x * x) * 0.5 * std::numbers::inv_sqrtpi * std::numbers::sqrt2;
}

double db_to_linear(double db) {
  require_finite(db, "db_to_linear");
  return std::pow(10.0, db / 10.0);
}

double linear_to_db(double linear) {
  require_finite(linear, "linear_to_db");
  if (linear <= 0.0) throw std::domain_error("linear_to_db: value must be positive");
  return 10.0 * std::log10(linear);
}

double dbm_to_watts(double dbm) {
  require_finite(dbm, "dbm_to_watts");
  return std::pow(10.0, (dbm - 30.0) / 10.0);
}

double watts_to_dbm(double watts) {
  require_finite(watts, "watts_to_dbm");
  if (watts <= 0.0) throw std::domain_error("watts_to_dbm: value must be positive");
  return 10.0 * std::log10(watts) + 30.0;
}

// ---------------------------------------------------------------------------

double RandomStream::normal() noexcept {
  const double r = std::sqrt(-2.0 * std::log(uniform_open0()));
  return r * std::cos(2.0 * std::numbers::pi * uniform());
}

GammaSampler::GammaSampler(double shape) : shape_(shape) {
  if (!std::isfinite(shape) || shape <= 0.0) {
    throw std::domain_error("sample_gamma: shape must be positive and finite");
  }
  if (shape <= 8.0 && shape == std::floor(shape)) {
    erlang_k_ = static_cast<int>(shape);
    return;
  }
  d_ = (shape < 1.0 ? shape + 1.0 : shape) - 1.0 / 3.0;
  c_ = 1.0 / std::sqrt(9.0 * d_);
}

double GammaSampler::operator()(RandomStream& rng) const {
  if (erlang_k_ > 0) {
    // The product of at most 8 uniforms >= 2^-33 cannot underflow.
    double prod = rng.uniform32();
    for (int i = 1; i < erlang_k_; ++i) prod *= rng.uniform32();
    return -std::log(prod);
  }
  // Marsaglia & Tsang (2000).
  double g;
  for (;;) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c_ * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform_open0();
    if (u < 1.0 - 0.0331 * (x * x) * (x * x) ||
        std::log(u) < 0.5 * x * x + d_ * (1.0 - v + std::log(v))) {
      g = d_ * v;
      break;
    }
  }
  if (shape_ < 1.0) {
    g *= std::pow(rng.uniform_open0(), 1.0 / shape_);
    if (g <= 0.0) g = std::numeric_limits<double>::min();
  }
  return g;
}

double sample_gamma(double shape, RandomStream& rng) { return GammaSampler(shape)(rng); }

// ---------------------------------------------------------------------------

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x)) {
    comp_ += (sum_ - t) + x;
  } else {
    comp_ += (x - t) + sum_;
  }
  sum_ = t;
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) throw std::invalid_argument("wilson_interval: zero trials");
  if (successes > trials) throw std::invalid_argument("wilson_interval: successes > trials");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  // Clamp so the interval always contains the point estimate despite rounding.
  return {std::min(p, std::max(0.0, center - half)), std::max(p, std::min(1.0, center + half))};
}

double kolmogorov_survival(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 0.2) return 1.0;
  double sum = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += (k % 2 == 1 ? 2.0 : -2.0) * term;
    if (term < 1e-16) break;
  }
  return std::clamp(sum, 0.0, 1.0);
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  if (x.empty() || y.empty()) throw std::invalid_argument("ks_two_sample: empty sample");
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::fabs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return d;
}

double ks_two_sample_pvalue(double d, std::size_t n_a, std::size_t n_b) {
  const double ne = static_cast<double>(n_a) * static_cast<double>(n_b) /
                    static_cast<double>(n_a + n_b);
  const double sq = std::sqrt(ne);
  return kolmogorov_survival((sq + 0.12 + 0.11 / sq) * d);
}

}  // namespace risnoma
