#pragma once

// Fisher-Snedecor F amplitude model for the RIS -> STAR-IOS elements and the
// Gaussian (CLT) approximation of the aggregate amplitude V = sum_k sum_l eta.

#include "risnoma/numerics.hpp"

namespace risnoma {

/// Shape pair of the per-element F amplitude. m1 is the fading severity,
/// m2 the shadowing parameter. The variance only exists for m2 > 2.
struct FadingParams {
  double m1 = 1.0;
  double m2 = 3.0;

  /// Throws std::domain_error unless m1 > 0 and m2 > 2 (both finite).
  void validate() const;
};

struct ElementMoments {
  double mean;
  double variance;
};

/// Moments of the aggregate V under the CLT approximation.
struct AggregateStats {
  double mu_v;
  double sigma2_v;
  double second_moment;  // mu_v^2 + sigma2_v

  double sigma_v() const;
};

/// mean = m2/(m2-1), variance = m2^2 (m1+m2-1) / (m1 (m2-1)^2 (m2-2)).
ElementMoments element_moments(const FadingParams& p);

/// One draw of the element amplitude: (m2 G1) / (m1 G2) with
/// G1 ~ Gamma(m1), G2 ~ Gamma(m2), i.e. a standard F(2 m1, 2 m2) variate.
double sample_envelope(const FadingParams& p, RandomStream& rng);

/// Reusable sampler for sample_envelope with the gamma setup hoisted.
class EnvelopeSampler {
 public:
  explicit EnvelopeSampler(const FadingParams& p);
  double operator()(RandomStream& rng) const {
    const double g1 = numerator_(rng);
    const double g2 = denominator_(rng);
    return ratio_ * g1 / g2;
  }

 private:
  double ratio_;  // m2 / m1
  GammaSampler numerator_;
  GammaSampler denominator_;
};

/// Moments of V for an n1 x n2 element pair. Throws std::domain_error for a
/// zero element count.
AggregateStats aggregate_stats(const FadingParams& p, unsigned n1, unsigned n2);

/// Gaussian CDF of V: 1 - Q((v - mu) / sigma).
double v_cdf(double v, const AggregateStats& s);

/// Gaussian density of V.
double v_pdf(double v, const AggregateStats& s);

/// Probability mass the untruncated Gaussian puts on v < 0.
inline double v_negative_mass(const AggregateStats& s) { return v_cdf(0.0, s); }

/// The Gaussian approximation is only trusted when v_cdf(0) < 1e-6.
constexpr double kNegativeMassLimit = 1e-6;

inline bool clt_reliable(const AggregateStats& s) {
  return v_negative_mass(s) < kNegativeMassLimit;
}

}  // namespace risnoma
