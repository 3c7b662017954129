#pragma once

// Scalar special functions, unit conversions and random primitives shared by
// every other module.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace risnoma {

// ---------------------------------------------------------------------------
// Special functions

/// Gaussian tail probability Q(x) = 0.5 * erfc(x / sqrt(2)).
/// Throws std::domain_error for non-finite x.
double q_function(double x);

/// Standard normal CDF, 1 - Q(x).
double normal_cdf(double x);

/// Standard normal density.
double normal_pdf(double x);

// ---------------------------------------------------------------------------
// Unit conversions. All throw std::domain_error on non-finite input.

double db_to_linear(double db);
double linear_to_db(double linear);
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

// ---------------------------------------------------------------------------
// Random streams

/// Philox-4x32-10 counter-based generator.
///
/// A stream is addressed by (seed, stream index); draws inside a stream are
/// addressed by a 64-bit block counter. Two streams with different indices
/// never share a counter block, so results do not depend on which worker
/// produced them. Each block yields four 32-bit words.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_index) noexcept
      : seed_(seed), stream_(stream_index) {}

  std::uint32_t next_u32() noexcept {
    if (pos_ == 4) refill();
    return buf_[pos_++];
  }

  std::uint64_t next_u64() noexcept {
    const std::uint64_t lo = next_u32();
    return (static_cast<std::uint64_t>(next_u32()) << 32) | lo;
  }

  /// Uniform on (0, 1] with 53-bit resolution; never returns 0.
  double uniform_open0() noexcept {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on the open interval (0, 1) from a single 32-bit word.
  double uniform32() noexcept { return (static_cast<double>(next_u32()) + 0.5) * 0x1.0p-32; }

  /// Standard normal draw (Box-Muller, one output per call).
  double normal() noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_index() const noexcept { return stream_; }
  std::uint64_t blocks_used() const noexcept { return block_; }

  /// Raw Philox-4x32-10 bijection; exposed for known-answer tests.
  static std::array<std::uint32_t, 4> philox(std::array<std::uint32_t, 4> ctr,
                                             std::array<std::uint32_t, 2> key) noexcept {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += 0x9E3779B9u;
        key[1] += 0xBB67AE85u;
      }
      const std::uint64_t p0 = std::uint64_t{0xD2511F53u} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{0xCD9E8D57u} * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
    }
    return ctr;
  }

 private:
  void refill() noexcept {
    buf_ = philox({static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
                   static_cast<std::uint32_t>(stream_), static_cast<std::uint32_t>(stream_ >> 32)},
                  {static_cast<std::uint32_t>(seed_), static_cast<std::uint32_t>(seed_ >> 32)});
    ++block_;
    pos_ = 0;
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buf_{};
  unsigned pos_ = 4;
};

/// Gamma(shape, 1) sampler with the per-shape setup done once.
///
/// Integer shapes up to 8 use the Erlang construction -log(U_1 ... U_k) with
/// 32-bit uniforms; other shapes use Marsaglia-Tsang, boosted by U^(1/a)
/// below 1.
class GammaSampler {
 public:
  /// Throws std::domain_error unless shape > 0 and finite.
  explicit GammaSampler(double shape);

  double operator()(RandomStream& rng) const;
  double shape() const noexcept { return shape_; }

 private:
  double shape_;
  int erlang_k_ = 0;  // > 0 selects the Erlang path
  double d_ = 0.0;    // Marsaglia-Tsang constants for max(shape, shape + 1)
  double c_ = 0.0;
};

/// Draw from Gamma(shape, 1). Throws std::domain_error unless shape > 0 and
/// finite.
double sample_gamma(double shape, RandomStream& rng);

// ---------------------------------------------------------------------------
// Small statistics helpers

/// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct Interval {
  double low;
  double high;
};

/// Wilson score interval for `successes` out of `trials` at two-sided level
/// given by the normal quantile z (1.959963984540054 for 95%).
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials,
                         double z = 1.959963984540054);

/// One-sample Kolmogorov-Smirnov statistic of `samples` against `cdf`.
/// The input is copied and sorted.
template <typename Cdf>
double ks_statistic(std::span<const double> samples, Cdf&& cdf);

/// Asymptotic Kolmogorov survival function P(K > lambda).
double kolmogorov_survival(double lambda);

/// Two-sample KS statistic.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

/// Asymptotic p-value for a two-sample KS statistic.
double ks_two_sample_pvalue(double d, std::size_t n_a, std::size_t n_b);

}  // namespace risnoma

#include <algorithm>

template <typename Cdf>
double risnoma::ks_statistic(std::span<const double> samples, Cdf&& cdf) {
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}
