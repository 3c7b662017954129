#pragma once

// Scenario configuration, LoS path loss, effective link gains and the
// instantaneous SINR/SNR maps under ideal phase alignment (the cascaded
// channel collapses to the scalar amplitude V).

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "risnoma/fading.hpp"

namespace risnoma {

enum class User { r, t };
enum class Scheme { noma, oma };

std::string_view to_string(User u);
std::string_view to_string(Scheme s);

/// Invalid configuration value. `key()` is the dotted config key at fault.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::invalid_argument(key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// How the LoS factor in the SNR prefactor is composed from the short hops.
enum class LossMode {
  single,   // D(d_Sw)
  product,  // D(d_sR) * D(d_Sw)
};

struct Geometry {
  double d_sR = 10.0;   // transmitter -> RIS [m]
  double d_St = 10.0;   // STAR-IOS -> refraction user [m]
  double d_Sr = 10.0;   // STAR-IOS -> reflection user [m]
  double d_RS = 100.0;  // RIS -> STAR-IOS [m]
  double kappa = 4.0;   // path-loss exponent of the RIS -> STAR-IOS hop
  LossMode loss_mode = LossMode::single;
  std::optional<double> d_loss_db;  // forces the LoS factor for both users
};

struct SurfaceConfig {
  unsigned n1 = 50;  // RIS elements
  unsigned n2 = 50;  // STAR-IOS elements
  double beta_r = 0.8;
  double beta_t = 0.6;
};

struct PowerConfig {
  double p_total_dbm = 30.0;
  double p_r = 0.4;
  double p_t = 0.6;
  double noise_dbm = -90.0;
  double alpha = 1.2;  // amplifier drain efficiency
  double p_ris_element_dbm = 10.0;
  double p_star_element_dbm = 10.0;
  double p_circuit_t_dbm = 10.0;
  double p_circuit_r_dbm = 10.0;
  /// When set, the transmit SNR P / sigma^2 is taken from here [dB] instead
  /// of the two powers. Consumption still uses p_total_dbm.
  std::optional<double> mean_snr_db;
};

struct SystemConfig {
  Geometry geometry;
  SurfaceConfig surfaces;
  PowerConfig power;
  FadingParams fading;
  double oma_resource_fraction = 0.5;

  /// Throws ConfigError naming the first offending key.
  void validate() const;

  /// Non-fatal issues: NOMA power order p_r >= p_t, Gaussian approximation
  /// placing noticeable mass below zero.
  std::vector<std::string> warnings() const;

  double beta(User u) const { return u == User::r ? surfaces.beta_r : surfaces.beta_t; }
  double d_star_user(User u) const { return u == User::r ? geometry.d_Sr : geometry.d_St; }
};

/// Linear-scale link quantities. gain(u) = gamma_bar * beta_u^2 * D_u * d_RS^-kappa
/// excludes the NOMA power split.
struct LinkBudget {
  double gamma_bar;
  double d_loss_r;
  double d_loss_t;
  double gain_r;
  double gain_t;

  double gain(User u) const { return u == User::r ? gain_r : gain_t; }
  double d_loss(User u) const { return u == User::r ? d_loss_r : d_loss_t; }
};

/// LoS path loss -37.5 - 22 log10(d / 1 m) dB, returned in linear scale.
/// Throws std::domain_error for d <= 0.
double path_loss_los(double d);

LinkBudget link_budget(const SystemConfig& cfg);

/// SINR of the SIC stage at the reflection user (decoding u_t's message).
double sinr_sic(double v, const SystemConfig& cfg, const LinkBudget& b);
/// SNR of u_r's own message after SIC.
double snr_r_noma(double v, const SystemConfig& cfg, const LinkBudget& b);
/// SINR at the refraction user, u_r's signal treated as interference.
double sinr_t_noma(double v, const SystemConfig& cfg, const LinkBudget& b);
/// Orthogonal-access SNR, full power in the user's slot.
double snr_oma(double v, const SystemConfig& cfg, const LinkBudget& b, User u);

}  // namespace risnoma
