#include "risnoma/linkmodel.hpp"

#include <cmath>
#include <sstream>

namespace risnoma {

std::string_view to_string(User u) { return u == User::r ? "r" : "t"; }
std::string_view to_string(Scheme s) { return s == Scheme::noma ? "noma" : "oma"; }

namespace {

void require(bool ok, const char* key, const char* message) {
  if (!ok) throw ConfigError(key, message);
}

bool finite_positive(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

void SystemConfig::validate() const {
  const Geometry& g = geometry;
  require(finite_positive(g.d_sR), "geometry.d_sR", "distance must be > 0");
  require(finite_positive(g.d_St), "geometry.d_St", "distance must be > 0");
  require(finite_positive(g.d_Sr), "geometry.d_Sr", "distance must be > 0");
  require(finite_positive(g.d_RS), "geometry.d_RS", "distance must be > 0");
  require(std::isfinite(g.kappa) && g.kappa > 2.0, "geometry.kappa", "path-loss exponent must be > 2");
  if (g.d_loss_db) require(std::isfinite(*g.d_loss_db), "geometry.d_loss_db", "must be finite");

  const SurfaceConfig& s = surfaces;
  require(s.n1 >= 1, "surfaces.n1", "element count must be >= 1");
  require(s.n2 >= 1, "surfaces.n2", "element count must be >= 1");
  require(std::isfinite(s.beta_r) && s.beta_r > 0.0 && s.beta_r <= 1.0, "surfaces.beta_r",
          "amplitude must lie in (0, 1]");
  require(std::isfinite(s.beta_t) && s.beta_t > 0.0 && s.beta_t <= 1.0, "surfaces.beta_t",
          "amplitude must lie in (0, 1]");
  // Small slack so that e.g. 0.6^2 + 0.8^2 (= 1 + 2e-16) is accepted.
  require(s.beta_r * s.beta_r + s.beta_t * s.beta_t <= 1.0 + 1e-12, "surfaces.beta_t",
          "energy split violated: beta_r^2 + beta_t^2 > 1");

  const PowerConfig& p = power;
  require(std::isfinite(p.p_total_dbm), "power.p_total_dbm", "must be finite");
  require(std::isfinite(p.noise_dbm), "power.noise_dbm", "must be finite");
  require(std::isfinite(p.p_r) && p.p_r > 0.0 && p.p_r < 1.0, "power.p_r", "must lie in (0, 1)");
  require(std::isfinite(p.p_t) && p.p_t > 0.0 && p.p_t < 1.0, "power.p_t", "must lie in (0, 1)");
  require(std::fabs(p.p_r + p.p_t - 1.0) <= 1e-9, "power.p_t", "power split must satisfy p_r + p_t = 1");
  require(finite_positive(p.alpha), "power.alpha", "drain efficiency must be > 0");
  require(std::isfinite(p.p_ris_element_dbm), "power.p_ris_element_dbm", "must be finite");
  require(std::isfinite(p.p_star_element_dbm), "power.p_star_element_dbm", "must be finite");
  require(std::isfinite(p.p_circuit_t_dbm), "power.p_circuit_t_dbm", "must be finite");
  require(std::isfinite(p.p_circuit_r_dbm), "power.p_circuit_r_dbm", "must be finite");
  if (p.mean_snr_db) require(std::isfinite(*p.mean_snr_db), "power.mean_snr_db", "must be finite");

  require(std::isfinite(fading.m1) && fading.m1 > 0.0, "fading.m1", "must be > 0");
  require(std::isfinite(fading.m2) && fading.m2 > 2.0, "fading.m2", "must be > 2");

  require(std::isfinite(oma_resource_fraction) && oma_resource_fraction > 0.0 &&
              oma_resource_fraction <= 1.0,
          "oma_resource_fraction", "must lie in (0, 1]");
}

std::vector<std::string> SystemConfig::warnings() const {
  std::vector<std::string> out;
  if (power.p_r >= power.p_t) {
    out.emplace_back("power.p_r >= power.p_t: the refraction user is expected to get more power under NOMA");
  }
  const AggregateStats st = aggregate_stats(fading, surfaces.n1, surfaces.n2);
  if (!clt_reliable(st)) {
    std::ostringstream os;
    os << "Gaussian approximation of V puts " << v_negative_mass(st)
       << " probability below zero (N1*N2 too small); closed forms are unreliable";
    out.push_back(os.str());
  }
  return out;
}

double path_loss_los(double d) {
  if (!std::isfinite(d) || d <= 0.0) throw std::domain_error("path_loss_los: distance must be > 0");
  return db_to_linear(-37.5 - 22.0 * std::log10(d));
}

LinkBudget link_budget(const SystemConfig& cfg) {
  const double gamma_bar =
      cfg.power.mean_snr_db ? db_to_linear(*cfg.power.mean_snr_db)
                            : dbm_to_watts(cfg.power.p_total_dbm) / dbm_to_watts(cfg.power.noise_dbm);

  auto d_loss = [&](User u) {
    if (cfg.geometry.d_loss_db) return db_to_linear(*cfg.geometry.d_loss_db);
    const double hop = path_loss_los(cfg.d_star_user(u));
    return cfg.geometry.loss_mode == LossMode::product ? path_loss_los(cfg.geometry.d_sR) * hop : hop;
  };
  const double large_scale = std::pow(cfg.geometry.d_RS, -cfg.geometry.kappa);

  LinkBudget b{};
  b.gamma_bar = gamma_bar;
  b.d_loss_r = d_loss(User::r);
  b.d_loss_t = d_loss(User::t);
  b.gain_r = gamma_bar * cfg.surfaces.beta_r * cfg.surfaces.beta_r * b.d_loss_r * large_scale;
  b.gain_t = gamma_bar * cfg.surfaces.beta_t * cfg.surfaces.beta_t * b.d_loss_t * large_scale;
  return b;
}

double sinr_sic(double v, const SystemConfig& cfg, const LinkBudget& b) {
  const double x = b.gain_r * v * v;
  return x * cfg.power.p_t / (x * cfg.power.p_r + 1.0);
}

double snr_r_noma(double v, const SystemConfig& cfg, const LinkBudget& b) {
  return b.gain_r * cfg.power.p_r * v * v;
}

double sinr_t_noma(double v, const SystemConfig& cfg, const LinkBudget& b) {
  const double x = b.gain_t * v * v;
  return x * cfg.power.p_t / (x * cfg.power.p_r + 1.0);
}

double snr_oma(double v, const SystemConfig& /*cfg*/, const LinkBudget& b, User u) {
  return b.gain(u) * v * v;
}

}  // namespace risnoma
