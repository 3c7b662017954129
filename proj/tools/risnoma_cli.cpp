// risnoma: closed-form and Monte-Carlo performance figures for a RIS +
// STAR-IOS assisted V2V link.
//
//   risnoma point    --config cfg.json [--trials T] [--seed S] [--thresholds-db a,b,c,d]
//   risnoma sweep    --config cfg.json --param P|N|snr --from A --to B --step C
//                    --metric op,ec,ee --scheme noma|oma|both --out file.csv
//   risnoma validate --config cfg.json --trials T --seed S
//
// Exit codes: 0 ok, 2 configuration error, 3 validation failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "risnoma/config.hpp"
#include "risnoma/report.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitValidation = 3;

struct Common {
  std::string config_path;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::vector<double> thresholds_db{0.0, 0.0, 0.0, 0.0};
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--config", c.config_path, "JSON config with flat dotted keys (defaults if omitted)");
  cmd->add_option("--trials", c.trials, "Monte-Carlo trials (0 = analytic only)");
  cmd->add_option("--seed", c.seed, "64-bit seed");
  cmd->add_option("--workers", c.workers, "worker threads (0 = all cores)");
  cmd->add_option("--thresholds-db", c.thresholds_db,
                  "sic,r_noma,t_noma,oma decoding thresholds in dB")
      ->delimiter(',')
      ->expected(4);
  cmd->add_option("--out", c.out, "output CSV path (stdout if omitted)");
}

risnoma::SystemConfig load(const Common& c) {
  risnoma::SystemConfig cfg =
      c.config_path.empty() ? risnoma::parse_config("") : risnoma::load_config(c.config_path);
  for (const auto& w : cfg.warnings()) std::cerr << "warning: " << w << '\n';
  return cfg;
}

risnoma::Thresholds thresholds(const Common& c) {
  const auto& t = c.thresholds_db;
  return risnoma::Thresholds::from_db(t[0], t[1], t[2], t[3]);
}

void emit(const Common& c, const std::string& csv) {
  if (c.out.empty()) {
    std::cout << csv;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + c.out);
  f << csv;
}

risnoma::SweepParam parse_param(const std::string& s) {
  if (s == "P") return risnoma::SweepParam::transmit_power_dbm;
  if (s == "N") return risnoma::SweepParam::n_elements;
  return risnoma::SweepParam::mean_snr_db;
}

risnoma::SchemeSel parse_scheme(const std::string& s) {
  if (s == "noma") return risnoma::SchemeSel::noma;
  if (s == "oma") return risnoma::SchemeSel::oma;
  return risnoma::SchemeSel::both;
}

risnoma::Metric parse_metric(const std::string& s) {
  if (s == "op") return risnoma::Metric::op;
  if (s == "ec") return risnoma::Metric::ec;
  return risnoma::Metric::ee;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RIS + STAR-IOS V2V NOMA/OMA performance toolkit"};
  app.require_subcommand(1);

  Common point_opts;
  auto* point = app.add_subcommand("point", "all metrics at one configuration");
  add_common(point, point_opts);

  Common sweep_opts;
  std::string param = "P", scheme = "both";
  std::vector<std::string> metrics{"op", "ec", "ee"};
  double from = 0, to = 0, step = 1;
  auto* sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
  add_common(sweep, sweep_opts);
  sweep->add_option("--param", param, "swept parameter")->check(CLI::IsMember({"P", "N", "snr"}))->required();
  sweep->add_option("--from", from)->required();
  sweep->add_option("--to", to)->required();
  sweep->add_option("--step", step)->required();
  sweep->add_option("--metric", metrics, "op,ec,ee")
      ->delimiter(',')
      ->check(CLI::IsMember({"op", "ec", "ee"}));
  sweep->add_option("--scheme", scheme)->check(CLI::IsMember({"noma", "oma", "both"}));

  Common validate_opts;
  auto* validate = app.add_subcommand("validate", "closed form vs Monte Carlo; exit 3 on discrepancy");
  add_common(validate, validate_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    if (*point) {
      const auto cfg = load(point_opts);
      risnoma::RunOptions opt{point_opts.trials, point_opts.seed, {point_opts.workers}};
      emit(point_opts, risnoma::to_csv(risnoma::run_point(cfg, thresholds(point_opts), opt)));
    } else if (*sweep) {
      const auto cfg = load(sweep_opts);
      risnoma::SweepSpec spec;
      spec.parameter = parse_param(param);
      spec.from = from;
      spec.to = to;
      spec.step = step;
      spec.scheme = parse_scheme(scheme);
      spec.metrics.clear();
      for (const auto& m : metrics) spec.metrics.push_back(parse_metric(m));
      spec.trials = sweep_opts.trials;
      spec.seed = sweep_opts.seed;
      try {
        spec.validate();
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
      }
      emit(sweep_opts, risnoma::to_csv(risnoma::run_sweep(cfg, thresholds(sweep_opts), spec,
                                                          {sweep_opts.workers})));
    } else if (*validate) {
      const auto cfg = load(validate_opts);
      risnoma::RunOptions opt{validate_opts.trials, validate_opts.seed, {validate_opts.workers}};
      const auto rep = risnoma::validate_point(cfg, thresholds(validate_opts), opt);
      emit(validate_opts, risnoma::to_csv(rep.rows));
      for (const auto& c : rep.checks) {
        std::cerr << (c.informational ? "INFO" : (c.passed ? "PASS" : "FAIL")) << "  " << c.name
                  << "  analytic=" << risnoma::format_double(c.analytic)
                  << "  mc=" << risnoma::format_double(c.mc);
        if (c.budget > 0) std::cerr << "  |diff|=" << std::abs(c.analytic - c.mc) << " budget=" << c.budget;
        std::cerr << '\n';
      }
      if (!rep.ok()) return kExitValidation;
    }
  } catch (const risnoma::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
