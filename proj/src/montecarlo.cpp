#include "risnoma/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace risnoma {

namespace {

constexpr double kZ95 = 1.959963984540054;

unsigned resolve_workers(const McOptions& opt) {
  if (opt.workers != 0) return opt.workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

MetricEstimate mean_estimate(std::span<const double> xs, std::uint64_t seed) {
  const SampleMoments m = sample_moments(xs);
  const double half = xs.size() > 1 ? kZ95 * std::sqrt(m.variance / static_cast<double>(xs.size())) : 0.0;
  return {m.mean, m.mean - half, m.mean + half, xs.size(), seed};
}

}  // namespace

SampleMoments sample_moments(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("sample_moments: empty sample");
  CompensatedSum sum;
  for (double x : xs) sum.add(x);
  const double n = static_cast<double>(xs.size());
  const double mean = sum.value() / n;
  if (xs.size() == 1) return {mean, 0.0};
  CompensatedSum sq;
  for (double x : xs) sq.add((x - mean) * (x - mean));
  return {mean, sq.value() / (n - 1.0)};
}

std::vector<double> simulate_v(const FadingParams& fading, unsigned n1, unsigned n2,
                               std::uint64_t trials, std::uint64_t seed, const McOptions& opt) {
  fading.validate();
  if (n1 == 0 || n2 == 0) throw std::domain_error("simulate_v: element counts must be >= 1");
  if (trials == 0) throw std::invalid_argument("simulate_v: trials must be >= 1");

  const std::uint64_t elements = static_cast<std::uint64_t>(n1) * n2;
  const EnvelopeSampler envelope(fading);
  std::vector<double> out(trials);
  const std::uint64_t batches = (trials + kTrialBatch - 1) / kTrialBatch;
  std::atomic<std::uint64_t> next{0};

  auto work = [&] {
    for (std::uint64_t batch = next++; batch < batches; batch = next++) {
      const std::uint64_t end = std::min(trials, (batch + 1) * kTrialBatch);
      for (std::uint64_t i = batch * kTrialBatch; i < end; ++i) {
        RandomStream rng(seed, i);
        // Element sums are short; plain accumulation is deterministic per trial.
        double v = 0.0;
        for (std::uint64_t e = 0; e < elements; ++e) v += envelope(rng);
        out[i] = v;
      }
    }
  };

  const unsigned workers = static_cast<unsigned>(
      std::min<std::uint64_t>(resolve_workers(opt), batches));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return out;
}

std::vector<double> simulate_v(const SystemConfig& cfg, std::uint64_t trials, std::uint64_t seed,
                               const McOptions& opt) {
  return simulate_v(cfg.fading, cfg.surfaces.n1, cfg.surfaces.n2, trials, seed, opt);
}

bool outage_event(double v, const SystemConfig& cfg, const LinkBudget& b, const Thresholds& th,
                  Scheme scheme, User u) {
  if (scheme == Scheme::oma) return snr_oma(v, cfg, b, u) <= th.gamma_oma;
  if (u == User::t) return sinr_t_noma(v, cfg, b) <= th.gamma_t_noma;
  return sinr_sic(v, cfg, b) <= th.gamma_sic || snr_r_noma(v, cfg, b) <= th.gamma_r_noma;
}

double instantaneous_rate(double v, const SystemConfig& cfg, const LinkBudget& b, Scheme scheme,
                          User u) {
  if (scheme == Scheme::oma) {
    return cfg.oma_resource_fraction * std::log2(1.0 + snr_oma(v, cfg, b, u));
  }
  return std::log2(1.0 + (u == User::r ? snr_r_noma(v, cfg, b) : sinr_t_noma(v, cfg, b)));
}

MetricEstimate outage_from_draws(std::span<const double> draws, const SystemConfig& cfg,
                                 const Thresholds& th, Scheme scheme, User u, std::uint64_t seed) {
  if (draws.empty()) throw std::invalid_argument("outage_from_draws: no draws");
  th.validate();
  const LinkBudget b = link_budget(cfg);
  std::uint64_t hits = 0;
  for (double v : draws) hits += outage_event(v, cfg, b, th, scheme, u) ? 1 : 0;
  const Interval ci = wilson_interval(hits, draws.size());
  const double p = static_cast<double>(hits) / static_cast<double>(draws.size());
  return {p, ci.low, ci.high, draws.size(), seed};
}

MetricEstimate capacity_from_draws(std::span<const double> draws, const SystemConfig& cfg,
                                   Scheme scheme, User u, std::uint64_t seed) {
  if (draws.empty()) throw std::invalid_argument("capacity_from_draws: no draws");
  const LinkBudget b = link_budget(cfg);
  std::vector<double> rates(draws.size());
  std::transform(draws.begin(), draws.end(), rates.begin(),
                 [&](double v) { return instantaneous_rate(v, cfg, b, scheme, u); });
  return mean_estimate(rates, seed);
}

MetricEstimate ee_from_draws(std::span<const double> draws, const SystemConfig& cfg, Scheme scheme,
                             std::uint64_t seed) {
  if (draws.empty()) throw std::invalid_argument("ee_from_draws: no draws");
  const LinkBudget b = link_budget(cfg);
  std::vector<double> ee(draws.size());
  std::transform(draws.begin(), draws.end(), ee.begin(), [&](double v) {
    return energy_efficiency(cfg, instantaneous_rate(v, cfg, b, scheme, User::t),
                             instantaneous_rate(v, cfg, b, scheme, User::r));
  });
  return mean_estimate(ee, seed);
}

MetricEstimate empirical_outage(const SystemConfig& cfg, const Thresholds& th, Scheme scheme,
                                User u, std::uint64_t trials, std::uint64_t seed,
                                const McOptions& opt) {
  const auto draws = simulate_v(cfg, trials, seed, opt);
  return outage_from_draws(draws, cfg, th, scheme, u, seed);
}

MetricEstimate empirical_capacity(const SystemConfig& cfg, Scheme scheme, User u,
                                  std::uint64_t trials, std::uint64_t seed, const McOptions& opt) {
  const auto draws = simulate_v(cfg, trials, seed, opt);
  return capacity_from_draws(draws, cfg, scheme, u, seed);
}

MetricEstimate empirical_ee(const SystemConfig& cfg, Scheme scheme, std::uint64_t trials,
                            std::uint64_t seed, const McOptions& opt) {
  const auto draws = simulate_v(cfg, trials, seed, opt);
  return ee_from_draws(draws, cfg, scheme, seed);
}

}  // namespace risnoma
