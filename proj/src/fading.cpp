#include "risnoma/fading.hpp"

#include <cmath>
#include <stdexcept>

namespace risnoma {

void FadingParams::validate() const {
  if (!std::isfinite(m1) || m1 <= 0.0) {
    throw std::domain_error("fading.m1 must be > 0");
  }
  if (!std::isfinite(m2) || m2 <= 2.0) {
    throw std::domain_error("fading.m2 must be > 2 (element variance undefined otherwise)");
  }
}

double AggregateStats::sigma_v() const { return std::sqrt(sigma2_v); }

ElementMoments element_moments(const FadingParams& p) {
  p.validate();
  const double m1 = p.m1;
  const double m2 = p.m2;
  const double mean = m2 / (m2 - 1.0);
  const double variance =
      m2 * m2 * (m1 + m2 - 1.0) / (m1 * (m2 - 1.0) * (m2 - 1.0) * (m2 - 2.0));
  return {mean, variance};
}

EnvelopeSampler::EnvelopeSampler(const FadingParams& p)
    : ratio_((p.validate(), p.m2 / p.m1)), numerator_(p.m1), denominator_(p.m2) {}

double sample_envelope(const FadingParams& p, RandomStream& rng) {
  return EnvelopeSampler(p)(rng);
}

AggregateStats aggregate_stats(const FadingParams& p, unsigned n1, unsigned n2) {
  if (n1 == 0 || n2 == 0) {
    throw std::domain_error("aggregate_stats: element counts must be >= 1");
  }
  const ElementMoments e = element_moments(p);
  const double count = static_cast<double>(n1) * static_cast<double>(n2);
  const double mu = count * e.mean;
  const double var = count * e.variance;
  return {mu, var, mu * mu + var};
}

double v_cdf(double v, const AggregateStats& s) {
  // 1 - Q(z), evaluated as 0.5 erfc(-z/sqrt2) to keep the lower tail accurate.
  return normal_cdf((v - s.mu_v) / s.sigma_v());
}

double v_pdf(double v, const AggregateStats& s) {
  const double sd = s.sigma_v();
  return normal_pdf((v - s.mu_v) / sd) / sd;
}

}  // namespace risnoma
