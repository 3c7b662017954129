#pragma once

// Closed-form outage probability, Jensen upper bounds on ergodic capacity,
// and energy efficiency for the RIS + STAR-IOS link.

#include "risnoma/linkmodel.hpp"

namespace risnoma {

/// Linear decoding thresholds. Defaults are 0 dB.
struct Thresholds {
  double gamma_sic = 1.0;     // SIC stage at u_r
  double gamma_r_noma = 1.0;  // u_r own message
  double gamma_t_noma = 1.0;  // u_t, interference treated as noise
  double gamma_oma = 1.0;     // both users under OMA

  /// Throws std::invalid_argument unless every threshold is finite and > 0.
  void validate() const;

  static Thresholds from_db(double sic_db, double r_noma_db, double t_noma_db, double oma_db);
};

struct OutageReport {
  double p_out_r_noma;
  double p_out_t_noma;
  double p_out_r_oma;
  double p_out_t_oma;
  bool feasible_r_noma;  // p_t > gamma_sic * p_r
  bool feasible_t_noma;  // p_t > gamma_t_noma * p_r
};

struct CapacityReport {
  double ec_r_noma;
  double ec_t_noma;
  double ec_r_oma;
  double ec_t_oma;
  double ee_noma;
  double ee_oma;
};

// Outage. Infeasible NOMA power splits return exactly 1.

double outage_noma_t(const SystemConfig& cfg, const Thresholds& th);
/// Product of the two marginal CDFs (the SIC and own-message events are
/// treated as independent even though both depend on V).
double outage_noma_r(const SystemConfig& cfg, const Thresholds& th);
double outage_oma(const SystemConfig& cfg, const Thresholds& th, User u);

/// Amplitude thresholds on V for each event. Infinite when infeasible.
struct VThresholds {
  double t_noma;
  double sic;
  double r_noma;
  double r_oma;
  double t_oma;
};
VThresholds v_thresholds(const SystemConfig& cfg, const Thresholds& th);

OutageReport outage_report(const SystemConfig& cfg, const Thresholds& th);

// Ergodic capacity upper bounds [bit/s/Hz]. E[V^2] = mu_V^2 + sigma_V^2.

double ec_upper_noma_r(const SystemConfig& cfg);
double ec_upper_noma_t(const SystemConfig& cfg);
/// Includes the oma_resource_fraction factor.
double ec_upper_oma(const SystemConfig& cfg, User u);

/// Total consumed power [W]: P/alpha + N1 P_R + N2 P_S + P_t + P_r.
double total_power_watts(const SystemConfig& cfg);

/// (ec_t + ec_r) / total_power_watts(cfg)  [bit/s/Hz/W].
double energy_efficiency(const SystemConfig& cfg, double ec_t, double ec_r);

CapacityReport capacity_report(const SystemConfig& cfg);

}  // namespace risnoma
