#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "oracles.hpp"
#include "risnoma/analytics.hpp"

using namespace risnoma;

namespace {

// Small unit-gain scenario: d_RS = 1, LoS factor 0 dB, transmit SNR 0 dB,
// so gain_w = beta_w^2 exactly. N = 2 x 2 at (1, 3) gives mu_V = 6,
// sigma_V^2 = 27, E[V^2] = 63.
SystemConfig unit_config() {
  SystemConfig c;
  c.geometry.d_RS = 1.0;
  c.geometry.d_loss_db = 0.0;
  c.power.mean_snr_db = 0.0;
  c.surfaces.n1 = 2;
  c.surfaces.n2 = 2;
  return c;
}

double phi(double z) { return 1.0 - static_cast<double>(oracle::q_ld(z)); }

}  // namespace

TEST_CASE("thresholds") {
  const Thresholds zero = Thresholds::from_db(0, 0, 0, 0);
  CHECK(zero.gamma_sic == 1.0);
  CHECK(zero.gamma_oma == 1.0);
  const Thresholds t = Thresholds::from_db(3, 10, -10, 20);
  CHECK(t.gamma_r_noma == doctest::Approx(10.0));
  CHECK(t.gamma_t_noma == doctest::Approx(0.1));
  CHECK(t.gamma_oma == doctest::Approx(100.0));
  CHECK_THROWS_AS((Thresholds{0.0, 1.0, 1.0, 1.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((Thresholds{1.0, -1.0, 1.0, 1.0}.validate()), std::invalid_argument);
}

TEST_CASE("V thresholds on the unit scenario") {
  const SystemConfig c = unit_config();
  const Thresholds th{1.0, 1.0, 1.0, 1.0};
  const VThresholds v = v_thresholds(c, th);
  // OMA: sqrt(1 / 0.64), sqrt(1 / 0.36)
  CHECK(v.r_oma == doctest::Approx(1.25));
  CHECK(v.t_oma == doctest::Approx(1.0 / 0.6));
  // NOMA-r own message: sqrt(1 / (0.64 * 0.4))
  CHECK(v.r_noma == doctest::Approx(1.0 / std::sqrt(0.256)));
  // SIC: sqrt(1 / (0.64 * (0.6 - 0.4)))
  CHECK(v.sic == doctest::Approx(1.0 / std::sqrt(0.128)));
  CHECK(v.t_noma == doctest::Approx(1.0 / std::sqrt(0.072)));
}

TEST_CASE("feasibility boundary: gamma >= p_t / p_r gives outage exactly 1") {
  SystemConfig c;
  for (double g : {1.5, 1.5000001, 2.0, 100.0}) {
    CAPTURE(g);
    const Thresholds th{g, 1.0, g, 1.0};
    CHECK(outage_noma_t(c, th) == 1.0);
    CHECK(outage_noma_r(c, th) == 1.0);
    const auto rep = outage_report(c, th);
    CHECK_FALSE(rep.feasible_r_noma);
    CHECK_FALSE(rep.feasible_t_noma);
    CHECK(std::isinf(v_thresholds(c, th).t_noma));
  }
  const Thresholds ok{1.4999, 1.0, 1.4999, 1.0};
  CHECK(outage_noma_t(c, ok) < 1.0);
  CHECK(outage_report(c, ok).feasible_t_noma);
}

TEST_CASE("median constructions") {
  SystemConfig c = unit_config();
  c.surfaces.n1 = 50;
  c.surfaces.n2 = 50;
  c.geometry.d_loss_db = -60.0;  // keeps gain * mu^2 moderate
  const double mu = 3750.0;
  const double g_r = 0.64e-6;
  const double g_t = 0.36e-6;
  const double x_r = g_r * mu * mu;
  const double x_t = g_t * mu * mu;

  // Each threshold placed at the SINR produced by V = mu_V.
  Thresholds th;
  th.gamma_oma = x_r;
  CHECK(outage_oma(c, th, User::r) == doctest::Approx(0.5).epsilon(1e-12));
  th.gamma_oma = x_t;
  CHECK(outage_oma(c, th, User::t) == doctest::Approx(0.5).epsilon(1e-12));

  th.gamma_t_noma = x_t * 0.6 / (x_t * 0.4 + 1.0);
  CHECK(outage_noma_t(c, th) == doctest::Approx(0.5).epsilon(1e-12));

  th.gamma_sic = x_r * 0.6 / (x_r * 0.4 + 1.0);
  th.gamma_r_noma = x_r * 0.4;
  CHECK(outage_noma_r(c, th) == doctest::Approx(0.25).epsilon(1e-12));

  // One sigma above the mean on the OMA link.
  const double sd = std::sqrt(16875.0);
  th.gamma_oma = g_r * (mu + sd) * (mu + sd);
  CHECK(outage_oma(c, th, User::r) == doctest::Approx(phi(1.0)).epsilon(1e-12));
}

TEST_CASE("outage is non-increasing in P and in N") {
  const Thresholds th;
  for (unsigned n : {10u, 20u, 30u}) {
    double prev_t = 1.0, prev_r = 1.0, prev_o = 1.0;
    for (double p = -30.0; p <= 30.0; p += 2.0) {
      SystemConfig c;
      c.surfaces.n1 = c.surfaces.n2 = n;
      c.power.p_total_dbm = p;
      const auto rep = outage_report(c, th);
      CHECK(rep.p_out_t_noma <= prev_t);
      CHECK(rep.p_out_r_noma <= prev_r);
      CHECK(rep.p_out_r_oma <= prev_o);
      prev_t = rep.p_out_t_noma;
      prev_r = rep.p_out_r_noma;
      prev_o = rep.p_out_r_oma;
    }
  }
  for (double p : {-20.0, -10.0, 0.0}) {
    double prev = 1.0;
    for (unsigned n = 5; n <= 60; n += 5) {
      SystemConfig c;
      c.surfaces.n1 = c.surfaces.n2 = n;
      c.power.p_total_dbm = p;
      const double op = outage_noma_t(c, th);
      CHECK(op <= prev);
      prev = op;
    }
  }
}

TEST_CASE("ergodic capacity bounds on the unit scenario") {
  const SystemConfig c = unit_config();
  // gain_r p_r E[V^2] = 0.64 * 0.4 * 63
  CHECK(ec_upper_noma_r(c) == doctest::Approx(std::log2(1.0 + 16.128)).epsilon(1e-14));
  // A = 0.36 * 63 = 22.68 -> A 0.6 / (A 0.4 + 1)
  const double a = 22.68;
  CHECK(ec_upper_noma_t(c) == doctest::Approx(std::log2(1.0 + a * 0.6 / (a * 0.4 + 1.0))).epsilon(1e-14));
  CHECK(ec_upper_oma(c, User::r) == doctest::Approx(0.5 * std::log2(1.0 + 0.64 * 63.0)).epsilon(1e-14));
  CHECK(ec_upper_oma(c, User::t) == doctest::Approx(0.5 * std::log2(1.0 + a)).epsilon(1e-14));

  SystemConfig full = c;
  full.oma_resource_fraction = 1.0;
  CHECK(ec_upper_oma(full, User::r) == doctest::Approx(2.0 * ec_upper_oma(c, User::r)));

  // 25.2 = 0.64 * 0.4 * 63 * 25 / 16 with a 1.5625x SNR.
  SystemConfig louder = c;
  louder.power.mean_snr_db = 10.0 * std::log10(25.2 / 16.128);
  CHECK(ec_upper_noma_r(louder) == doctest::Approx(std::log2(26.2)).epsilon(1e-13));
  CHECK(ec_upper_noma_r(louder) == doctest::Approx(4.7115).epsilon(1e-4));
}

TEST_CASE("NOMA-t bound stays strictly below log2(1 + p_t / p_r)") {
  const double cap = std::log2(1.0 + 0.6 / 0.4);
  for (unsigned n : {1u, 10u, 50u, 200u, 1000u}) {
    SystemConfig c;
    c.surfaces.n1 = c.surfaces.n2 = n;
    const double ec = ec_upper_noma_t(c);
    CHECK(ec < cap);
    CHECK(ec > 0.0);
  }
  SystemConfig huge;
  huge.power.mean_snr_db = 250.0;
  CHECK(ec_upper_noma_t(huge) == doctest::Approx(cap).epsilon(1e-12));
  CHECK(ec_upper_noma_t(huge) <= cap);
}

TEST_CASE("capacity bounds grow with N and with P") {
  double prev_r = 0.0, prev_t = 0.0;
  for (unsigned n = 1; n <= 100; n += 9) {
    SystemConfig c;
    c.surfaces.n1 = c.surfaces.n2 = n;
    CHECK(ec_upper_noma_r(c) > prev_r);
    CHECK(ec_upper_noma_t(c) > prev_t);
    prev_r = ec_upper_noma_r(c);
    prev_t = ec_upper_noma_t(c);
  }
  prev_r = 0.0;
  for (double p = -20.0; p <= 40.0; p += 5.0) {
    SystemConfig c;
    c.power.p_total_dbm = p;
    CHECK(ec_upper_noma_r(c) > prev_r);
    prev_r = ec_upper_noma_r(c);
  }
}

TEST_CASE("energy efficiency") {
  const SystemConfig c;
  // 1/1.2 + 50 * 0.01 + 50 * 0.01 + 0.01 + 0.01
  CHECK(total_power_watts(c) == doctest::Approx(1.0 / 1.2 + 1.02).epsilon(1e-14));
  CHECK(total_power_watts(c) == doctest::Approx(1.8533).epsilon(1e-4));
  CHECK(energy_efficiency(c, 1.0, 2.0) == doctest::Approx(3.0 / (1.0 / 1.2 + 1.02)));
  CHECK(energy_efficiency(c, 0.0, 0.0) == 0.0);
  CHECK_THROWS_AS(energy_efficiency(c, -1.0, 0.0), std::invalid_argument);

  const auto rep = capacity_report(c);
  CHECK(rep.ee_noma == doctest::Approx((rep.ec_t_noma + rep.ec_r_noma) / total_power_watts(c)));
  CHECK(rep.ee_oma == doctest::Approx((rep.ec_t_oma + rep.ec_r_oma) / total_power_watts(c)));

  // Positive everywhere, vanishing as P grows.
  double last = 0.0;
  for (double p = -20.0; p <= 80.0; p += 10.0) {
    SystemConfig q;
    q.power.p_total_dbm = p;
    last = capacity_report(q).ee_noma;
    CHECK(last > 0.0);
  }
  CHECK(last < 0.01);
}
