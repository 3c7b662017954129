#include "risnoma/report.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace risnoma {

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::op: return "op";
    case Metric::ec: return "ec";
    case Metric::ee: return "ee";
  }
  return "?";
}

std::string_view to_string(SweepParam p) {
  switch (p) {
    case SweepParam::transmit_power_dbm: return "transmit_power_dbm";
    case SweepParam::n_elements: return "n_elements";
    case SweepParam::mean_snr_db: return "mean_snr_db";
  }
  return "?";
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string to_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const ResultRow& r : rows) {
    os << r.param << ',' << format_double(r.value) << ',' << to_string(r.scheme) << ','
       << to_string(r.user) << ',' << to_string(r.metric) << ',' << format_double(r.analytic) << ',';
    if (r.mc) {
      os << format_double(r.mc->value) << ',' << format_double(r.mc->ci_low) << ','
         << format_double(r.mc->ci_high) << ',' << r.mc->trials << ',' << r.mc->seed;
    } else {
      os << ",,,0,";
    }
    os << '\n';
  }
  return os.str();
}

namespace {

std::vector<Scheme> schemes_of(SchemeSel s) {
  switch (s) {
    case SchemeSel::noma: return {Scheme::noma};
    case SchemeSel::oma: return {Scheme::oma};
    case SchemeSel::both: break;
  }
  return {Scheme::noma, Scheme::oma};
}

double analytic_value(const SystemConfig& cfg, const Thresholds& th, Scheme s, User u, Metric m) {
  switch (m) {
    case Metric::op:
      if (s == Scheme::oma) return outage_oma(cfg, th, u);
      return u == User::r ? outage_noma_r(cfg, th) : outage_noma_t(cfg, th);
    case Metric::ec:
      if (s == Scheme::oma) return ec_upper_oma(cfg, u);
      return u == User::r ? ec_upper_noma_r(cfg) : ec_upper_noma_t(cfg);
    case Metric::ee: {
      const CapacityReport c = capacity_report(cfg);
      return s == Scheme::noma ? c.ee_noma : c.ee_oma;
    }
  }
  return 0.0;
}

MetricEstimate mc_value(std::span<const double> draws, const SystemConfig& cfg, const Thresholds& th,
                        Scheme s, User u, Metric m, std::uint64_t seed) {
  switch (m) {
    case Metric::op: return outage_from_draws(draws, cfg, th, s, u, seed);
    case Metric::ec: return capacity_from_draws(draws, cfg, s, u, seed);
    case Metric::ee: return ee_from_draws(draws, cfg, s, seed);
  }
  return {};
}

void append_rows(std::vector<ResultRow>& out, const SystemConfig& cfg, const Thresholds& th,
                 std::string_view param, double value, const std::vector<Scheme>& schemes,
                 const std::vector<Metric>& metrics, const std::vector<double>* draws,
                 std::uint64_t seed) {
  for (Scheme s : schemes) {
    // EE does not depend on the user; compute once per scheme.
    std::optional<MetricEstimate> ee_mc;
    for (User u : {User::r, User::t}) {
      for (Metric m : metrics) {
        ResultRow row;
        row.param = std::string(param);
        row.value = value;
        row.scheme = s;
        row.user = u;
        row.metric = m;
        row.analytic = analytic_value(cfg, th, s, u, m);
        if (draws) {
          if (m == Metric::ee) {
            if (!ee_mc) ee_mc = mc_value(*draws, cfg, th, s, u, m, seed);
            row.mc = ee_mc;
          } else {
            row.mc = mc_value(*draws, cfg, th, s, u, m, seed);
          }
        }
        out.push_back(std::move(row));
      }
    }
  }
}

}  // namespace

std::vector<ResultRow> run_point(const SystemConfig& cfg, const Thresholds& th,
                                 const RunOptions& opt) {
  cfg.validate();
  th.validate();
  std::vector<double> draws;
  if (opt.trials > 0) draws = simulate_v(cfg, opt.trials, opt.seed, opt.mc);
  std::vector<ResultRow> rows;
  append_rows(rows, cfg, th, to_string(SweepParam::transmit_power_dbm), cfg.power.p_total_dbm,
              {Scheme::noma, Scheme::oma}, {Metric::op, Metric::ec, Metric::ee},
              opt.trials > 0 ? &draws : nullptr, opt.seed);
  return rows;
}

void SweepSpec::validate() const {
  if (!std::isfinite(from) || !std::isfinite(to) || !std::isfinite(step)) {
    throw std::invalid_argument("sweep: bounds and step must be finite");
  }
  if (from > to) throw std::invalid_argument("sweep: from must be <= to");
  if (step <= 0.0) throw std::invalid_argument("sweep: step must be > 0");
  if (metrics.empty()) throw std::invalid_argument("sweep: at least one metric is required");
  if (parameter == SweepParam::n_elements) {
    for (double v : values()) {
      if (v < 1.0 || v != std::floor(v)) {
        throw std::invalid_argument("sweep: element counts must be positive integers");
      }
    }
  }
}

std::vector<double> SweepSpec::values() const {
  std::vector<double> out;
  const double tol = 1e-9 * step;
  for (std::uint64_t k = 0;; ++k) {
    const double v = from + static_cast<double>(k) * step;
    if (v > to + tol) break;
    out.push_back(v);
  }
  return out;
}

SystemConfig apply_sweep_value(const SystemConfig& base, SweepParam p, double value) {
  SystemConfig cfg = base;
  switch (p) {
    case SweepParam::transmit_power_dbm:
      cfg.power.p_total_dbm = value;
      break;
    case SweepParam::n_elements:
      cfg.surfaces.n1 = static_cast<unsigned>(value);
      cfg.surfaces.n2 = static_cast<unsigned>(value);
      break;
    case SweepParam::mean_snr_db:
      cfg.power.mean_snr_db = value;
      break;
  }
  cfg.validate();
  return cfg;
}

std::vector<ResultRow> run_sweep(const SystemConfig& base, const Thresholds& th,
                                 const SweepSpec& spec, const McOptions& mc) {
  base.validate();
  th.validate();
  spec.validate();
  const auto schemes = schemes_of(spec.scheme);
  std::map<std::pair<unsigned, unsigned>, std::vector<double>> draw_cache;
  std::vector<ResultRow> rows;
  for (double value : spec.values()) {
    const SystemConfig cfg = apply_sweep_value(base, spec.parameter, value);
    const std::vector<double>* draws = nullptr;
    if (spec.trials > 0) {
      const auto key = std::make_pair(cfg.surfaces.n1, cfg.surfaces.n2);
      auto it = draw_cache.find(key);
      if (it == draw_cache.end()) {
        // Only one element count is live at a time in an N sweep.
        if (spec.parameter == SweepParam::n_elements) draw_cache.clear();
        it = draw_cache.emplace(key, simulate_v(cfg, spec.trials, spec.seed, mc)).first;
      }
      draws = &it->second;
    }
    append_rows(rows, cfg, th, to_string(spec.parameter), value, schemes, spec.metrics, draws,
                spec.seed);
  }
  return rows;
}

bool ValidationReport::ok() const {
  for (const auto& c : checks) {
    if (!c.informational && !c.passed) return false;
  }
  return true;
}

double outage_budget(const MetricEstimate& e) { return std::max(0.01, 3.0 * e.half_width()); }

ValidationReport validate_point(const SystemConfig& cfg, const Thresholds& th,
                                const RunOptions& opt) {
  if (opt.trials == 0) throw std::invalid_argument("validate: trials must be >= 1");
  ValidationReport rep;
  rep.rows = run_point(cfg, th, opt);
  for (const ResultRow& r : rep.rows) {
    const std::string name = std::string(to_string(r.scheme)) + "-" + std::string(to_string(r.user)) +
                             " " + std::string(to_string(r.metric));
    const MetricEstimate& e = *r.mc;
    if (r.metric == Metric::op) {
      const double budget = outage_budget(e);
      const bool within = std::fabs(r.analytic - e.value) <= budget;
      const bool info = r.scheme == Scheme::noma && r.user == User::r;
      rep.checks.push_back({name, r.analytic, e.value, budget, within, info});
    } else if (r.metric == Metric::ee && r.user == User::t) {
      continue;  // duplicate of the r row
    } else {
      rep.checks.push_back({name, r.analytic, e.value, 0.0, e.value <= r.analytic, false});
    }
  }
  return rep;
}

}  // namespace risnoma
