#include "risnoma/analytics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace risnoma {

void Thresholds::validate() const {
  for (double g : {gamma_sic, gamma_r_noma, gamma_t_noma, gamma_oma}) {
    if (!std::isfinite(g) || g <= 0.0) {
      throw std::invalid_argument("thresholds must be finite and > 0");
    }
  }
}

Thresholds Thresholds::from_db(double sic_db, double r_noma_db, double t_noma_db, double oma_db) {
  Thresholds th{db_to_linear(sic_db), db_to_linear(r_noma_db), db_to_linear(t_noma_db),
                db_to_linear(oma_db)};
  th.validate();
  return th;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// V threshold for an SINR of the form x p_t / (x p_r + 1) with x = gain v^2.
double sinr_v_threshold(double threshold, double gain, double p_t, double p_r) {
  if (p_t <= threshold * p_r) return kInf;
  return std::sqrt(threshold / (gain * (p_t - p_r * threshold)));
}

double cdf_or_one(double v, const AggregateStats& st) {
  return std::isinf(v) ? 1.0 : v_cdf(v, st);
}

AggregateStats stats_of(const SystemConfig& cfg) {
  return aggregate_stats(cfg.fading, cfg.surfaces.n1, cfg.surfaces.n2);
}

}  // namespace

VThresholds v_thresholds(const SystemConfig& cfg, const Thresholds& th) {
  th.validate();
  const LinkBudget b = link_budget(cfg);
  const double p_r = cfg.power.p_r;
  const double p_t = cfg.power.p_t;
  VThresholds v{};
  v.t_noma = sinr_v_threshold(th.gamma_t_noma, b.gain_t, p_t, p_r);
  v.sic = sinr_v_threshold(th.gamma_sic, b.gain_r, p_t, p_r);
  v.r_noma = std::sqrt(th.gamma_r_noma / (b.gain_r * p_r));
  v.r_oma = std::sqrt(th.gamma_oma / b.gain_r);
  v.t_oma = std::sqrt(th.gamma_oma / b.gain_t);
  return v;
}

double outage_noma_t(const SystemConfig& cfg, const Thresholds& th) {
  return cdf_or_one(v_thresholds(cfg, th).t_noma, stats_of(cfg));
}

double outage_noma_r(const SystemConfig& cfg, const Thresholds& th) {
  const VThresholds v = v_thresholds(cfg, th);
  if (std::isinf(v.sic)) return 1.0;
  const AggregateStats st = stats_of(cfg);
  return v_cdf(v.sic, st) * v_cdf(v.r_noma, st);
}

double outage_oma(const SystemConfig& cfg, const Thresholds& th, User u) {
  const VThresholds v = v_thresholds(cfg, th);
  return v_cdf(u == User::r ? v.r_oma : v.t_oma, stats_of(cfg));
}

OutageReport outage_report(const SystemConfig& cfg, const Thresholds& th) {
  const VThresholds v = v_thresholds(cfg, th);
  OutageReport rep{};
  rep.p_out_r_noma = outage_noma_r(cfg, th);
  rep.p_out_t_noma = outage_noma_t(cfg, th);
  rep.p_out_r_oma = outage_oma(cfg, th, User::r);
  rep.p_out_t_oma = outage_oma(cfg, th, User::t);
  rep.feasible_r_noma = !std::isinf(v.sic);
  rep.feasible_t_noma = !std::isinf(v.t_noma);
  return rep;
}

double ec_upper_noma_r(const SystemConfig& cfg) {
  const LinkBudget b = link_budget(cfg);
  return std::log2(1.0 + b.gain_r * cfg.power.p_r * stats_of(cfg).second_moment);
}

double ec_upper_noma_t(const SystemConfig& cfg) {
  const LinkBudget b = link_budget(cfg);
  const double a = b.gain_t * stats_of(cfg).second_moment;
  return std::log2(1.0 + a * cfg.power.p_t / (a * cfg.power.p_r + 1.0));
}

double ec_upper_oma(const SystemConfig& cfg, User u) {
  const LinkBudget b = link_budget(cfg);
  return cfg.oma_resource_fraction * std::log2(1.0 + b.gain(u) * stats_of(cfg).second_moment);
}

double total_power_watts(const SystemConfig& cfg) {
  const PowerConfig& p = cfg.power;
  return dbm_to_watts(p.p_total_dbm) / p.alpha +
         cfg.surfaces.n1 * dbm_to_watts(p.p_ris_element_dbm) +
         cfg.surfaces.n2 * dbm_to_watts(p.p_star_element_dbm) + dbm_to_watts(p.p_circuit_t_dbm) +
         dbm_to_watts(p.p_circuit_r_dbm);
}

double energy_efficiency(const SystemConfig& cfg, double ec_t, double ec_r) {
  if (ec_t < 0.0 || ec_r < 0.0) throw std::invalid_argument("energy_efficiency: negative capacity");
  return (ec_t + ec_r) / total_power_watts(cfg);
}

CapacityReport capacity_report(const SystemConfig& cfg) {
  CapacityReport rep{};
  rep.ec_r_noma = ec_upper_noma_r(cfg);
  rep.ec_t_noma = ec_upper_noma_t(cfg);
  rep.ec_r_oma = ec_upper_oma(cfg, User::r);
  rep.ec_t_oma = ec_upper_oma(cfg, User::t);
  rep.ee_noma = energy_efficiency(cfg, rep.ec_t_noma, rep.ec_r_noma);
  rep.ee_oma = energy_efficiency(cfg, rep.ec_t_oma, rep.ec_r_oma);
  return rep;
}

}  // namespace risnoma
