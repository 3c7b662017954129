#pragma once

// Single-point evaluation, parameter sweeps and closed-form vs Monte-Carlo
// validation, serialized as CSV rows.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "risnoma/montecarlo.hpp"

namespace risnoma {

enum class Metric { op, ec, ee };
enum class SweepParam { transmit_power_dbm, n_elements, mean_snr_db };
enum class SchemeSel { noma, oma, both };

std::string_view to_string(Metric m);
std::string_view to_string(SweepParam p);

struct ResultRow {
  std::string param;
  double value = 0.0;
  Scheme scheme = Scheme::noma;
  User user = User::r;
  Metric metric = Metric::op;
  double analytic = 0.0;
  std::optional<MetricEstimate> mc;  // empty when no trials were requested
};

inline constexpr const char* kCsvHeader =
    "param,value,scheme,user,metric,analytic,mc_mean,mc_ci_low,mc_ci_high,trials,seed";

/// Shortest decimal string that parses back to exactly `x`.
std::string format_double(double x);

std::string to_csv(const std::vector<ResultRow>& rows);

struct RunOptions {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  McOptions mc;
};

/// Every metric for both schemes and both users at one configuration.
/// EE is a per-scheme quantity and is repeated on the r and t rows.
/// The NOMA-r outage row carries the product closed form as `analytic` and
/// the exact joint-event estimate as `mc`.
std::vector<ResultRow> run_point(const SystemConfig& cfg, const Thresholds& th,
                                 const RunOptions& opt);

struct SweepSpec {
  SweepParam parameter = SweepParam::transmit_power_dbm;
  double from = 0.0;
  double to = 0.0;
  double step = 1.0;
  SchemeSel scheme = SchemeSel::both;
  std::vector<Metric> metrics{Metric::op, Metric::ec, Metric::ee};
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;

  /// Throws std::invalid_argument on from > to, step <= 0, no metrics, or a
  /// non-integral/zero element count for an N sweep.
  void validate() const;
  std::vector<double> values() const;
};

/// Applies one sweep coordinate to a copy of `base`.
SystemConfig apply_sweep_value(const SystemConfig& base, SweepParam p, double value);

/// Rows ordered by sweep value, then scheme (noma, oma), then user (r, t),
/// then metric (op, ec, ee). Points sharing the element count reuse one set
/// of V draws.
std::vector<ResultRow> run_sweep(const SystemConfig& cfg, const Thresholds& th,
                                 const SweepSpec& spec, const McOptions& mc = {});

struct ValidationCheck {
  std::string name;
  double analytic;
  double mc;
  double budget;       // allowed |analytic - mc| for outage; 0 for bounds
  bool passed;
  bool informational;  // reported but never fails the run
};

struct ValidationReport {
  std::vector<ResultRow> rows;
  std::vector<ValidationCheck> checks;
  bool ok() const;
};

/// Outage budget: max(0.01, 3 Wilson half-widths).
double outage_budget(const MetricEstimate& e);

/// Closed form vs simulation at one configuration:
///  - OMA r/t and NOMA-t outage within outage_budget,
///  - each EC and EE estimate at or below its analytic upper bound,
///  - NOMA-r product form vs joint event reported as informational.
ValidationReport validate_point(const SystemConfig& cfg, const Thresholds& th,
                                const RunOptions& opt);

}  // namespace risnoma
