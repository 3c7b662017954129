#pragma once

// Brute-force oracle: draw V = sum_k sum_l eta_{k,l} directly and estimate
// outage, ergodic capacity and energy efficiency with confidence intervals.
//
// Trial i always uses RandomStream(seed, i), so every draw is a pure function
// of (seed, i) and estimates do not depend on the worker count. Reductions
// run in trial order with compensated summation.

#include <cstdint>
#include <span>
#include <vector>

#include "risnoma/analytics.hpp"

namespace risnoma {

struct MetricEstimate {
  double value = 0.0;
  double ci_low = 0.0;   // 95%
  double ci_high = 0.0;  // 95%
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  double half_width() const { return 0.5 * (ci_high - ci_low); }
};

struct McOptions {
  /// 0 selects std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// Trials per scheduling unit handed to a worker.
inline constexpr std::uint64_t kTrialBatch = 1024;

/// `trials` independent draws of V for an n1 x n2 surface pair.
std::vector<double> simulate_v(const FadingParams& fading, unsigned n1, unsigned n2,
                               std::uint64_t trials, std::uint64_t seed, const McOptions& opt = {});

std::vector<double> simulate_v(const SystemConfig& cfg, std::uint64_t trials, std::uint64_t seed,
                               const McOptions& opt = {});

/// Instantaneous outage indicator for one draw of V. For NOMA-r this is the
/// event {SIC fails} OR {own message fails}, evaluated on the same V.
bool outage_event(double v, const SystemConfig& cfg, const LinkBudget& b, const Thresholds& th,
                  Scheme scheme, User u);

/// Instantaneous rate log2(1 + SINR) in bit/s/Hz. OMA includes the resource
/// fraction.
double instantaneous_rate(double v, const SystemConfig& cfg, const LinkBudget& b, Scheme scheme,
                          User u);

// Estimators over a fixed set of V draws. `seed` is only recorded.

/// Fraction of outage events with a Wilson 95% interval.
MetricEstimate outage_from_draws(std::span<const double> draws, const SystemConfig& cfg,
                                 const Thresholds& th, Scheme scheme, User u, std::uint64_t seed);

/// Sample mean of the instantaneous rate with a normal-approximation interval.
MetricEstimate capacity_from_draws(std::span<const double> draws, const SystemConfig& cfg,
                                   Scheme scheme, User u, std::uint64_t seed);

/// Per-draw (rate_t + rate_r) / P_tot, averaged.
MetricEstimate ee_from_draws(std::span<const double> draws, const SystemConfig& cfg, Scheme scheme,
                             std::uint64_t seed);

// Convenience wrappers that simulate their own draws.

MetricEstimate empirical_outage(const SystemConfig& cfg, const Thresholds& th, Scheme scheme,
                                User u, std::uint64_t trials, std::uint64_t seed,
                                const McOptions& opt = {});

MetricEstimate empirical_capacity(const SystemConfig& cfg, Scheme scheme, User u,
                                  std::uint64_t trials, std::uint64_t seed,
                                  const McOptions& opt = {});

MetricEstimate empirical_ee(const SystemConfig& cfg, Scheme scheme, std::uint64_t trials,
                            std::uint64_t seed, const McOptions& opt = {});

/// Sample mean and (unbiased) variance with compensated sums.
struct SampleMoments {
  double mean;
  double variance;
};
SampleMoments sample_moments(std::span<const double> xs);

}  // namespace risnoma
