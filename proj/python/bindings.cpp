#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "risnoma/config.hpp"
#include "risnoma/report.hpp"

namespace py = pybind11;
using namespace risnoma;

namespace {

Thresholds thresholds_of(const std::vector<double>& db) {
  if (db.size() != 4) throw std::invalid_argument("thresholds_db needs 4 values: sic, r_noma, t_noma, oma");
  return Thresholds::from_db(db[0], db[1], db[2], db[3]);
}

Scheme scheme_of(const std::string& s) {
  if (s == "noma") return Scheme::noma;
  if (s == "oma") return Scheme::oma;
  throw std::invalid_argument("scheme must be 'noma' or 'oma'");
}

User user_of(const std::string& u) {
  if (u == "r") return User::r;
  if (u == "t") return User::t;
  throw std::invalid_argument("user must be 'r' or 't'");
}

py::dict estimate_dict(const MetricEstimate& e) {
  py::dict d;
  d["value"] = e.value;
  d["ci_low"] = e.ci_low;
  d["ci_high"] = e.ci_high;
  d["trials"] = e.trials;
  d["seed"] = e.seed;
  return d;
}

const std::vector<double> kZeroDb{0.0, 0.0, 0.0, 0.0};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "RIS + STAR-IOS NOMA/OMA performance toolkit";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<SystemConfig>(m, "SystemConfig")
      .def(py::init<>())
      .def_static("from_json", &parse_config, py::arg("text"))
      .def_static("load", [](const std::string& path) { return load_config(path); }, py::arg("path"))
      .def("to_json", [](const SystemConfig& c) { return config_to_json(c); })
      .def("validate", &SystemConfig::validate)
      .def("warnings", &SystemConfig::warnings)
      .def("__repr__", [](const SystemConfig& c) { return "SystemConfig(" + config_to_json(c) + ")"; });

  m.def("config_keys", &config_keys);

  m.def("q_function", &q_function, py::arg("x"));
  m.def("element_moments", [](double m1, double m2) {
    const auto e = element_moments({m1, m2});
    return py::make_tuple(e.mean, e.variance);
  }, py::arg("m1"), py::arg("m2"));
  m.def("aggregate_stats", [](double m1, double m2, unsigned n1, unsigned n2) {
    const auto s = aggregate_stats({m1, m2}, n1, n2);
    py::dict d;
    d["mu_v"] = s.mu_v;
    d["sigma2_v"] = s.sigma2_v;
    d["second_moment"] = s.second_moment;
    return d;
  }, py::arg("m1"), py::arg("m2"), py::arg("n1"), py::arg("n2"));
  m.def("v_cdf", [](double v, const SystemConfig& c) {
    return v_cdf(v, aggregate_stats(c.fading, c.surfaces.n1, c.surfaces.n2));
  }, py::arg("v"), py::arg("config"));

  m.def("outage", [](const SystemConfig& c, const std::vector<double>& th_db) {
    c.validate();
    const auto r = outage_report(c, thresholds_of(th_db));
    py::dict d;
    d["noma_r"] = r.p_out_r_noma;
    d["noma_t"] = r.p_out_t_noma;
    d["oma_r"] = r.p_out_r_oma;
    d["oma_t"] = r.p_out_t_oma;
    d["feasible_r_noma"] = r.feasible_r_noma;
    d["feasible_t_noma"] = r.feasible_t_noma;
    return d;
  }, py::arg("config"), py::arg("thresholds_db") = kZeroDb);

  m.def("capacity", [](const SystemConfig& c) {
    c.validate();
    const auto r = capacity_report(c);
    py::dict d;
    d["ec_noma_r"] = r.ec_r_noma;
    d["ec_noma_t"] = r.ec_t_noma;
    d["ec_oma_r"] = r.ec_r_oma;
    d["ec_oma_t"] = r.ec_t_oma;
    d["ee_noma"] = r.ee_noma;
    d["ee_oma"] = r.ee_oma;
    return d;
  }, py::arg("config"));

  m.def("simulate_v", [](const SystemConfig& c, std::uint64_t trials, std::uint64_t seed, unsigned workers) {
    c.validate();
    std::vector<double> v;
    {
      py::gil_scoped_release release;
      v = simulate_v(c, trials, seed, {workers});
    }
    return py::array_t<double>(static_cast<py::ssize_t>(v.size()), v.data());
  }, py::arg("config"), py::arg("trials"), py::arg("seed") = 1, py::arg("workers") = 0);

  m.def("empirical_outage", [](const SystemConfig& c, const std::string& scheme, const std::string& user,
                               std::uint64_t trials, std::uint64_t seed, const std::vector<double>& th_db,
                               unsigned workers) {
    c.validate();
    const Thresholds th = thresholds_of(th_db);
    MetricEstimate e;
    {
      py::gil_scoped_release release;
      e = empirical_outage(c, th, scheme_of(scheme), user_of(user), trials, seed, {workers});
    }
    return estimate_dict(e);
  }, py::arg("config"), py::arg("scheme"), py::arg("user"), py::arg("trials"), py::arg("seed") = 1,
     py::arg("thresholds_db") = kZeroDb, py::arg("workers") = 0);

  m.def("empirical_capacity", [](const SystemConfig& c, const std::string& scheme, const std::string& user,
                                 std::uint64_t trials, std::uint64_t seed, unsigned workers) {
    c.validate();
    MetricEstimate e;
    {
      py::gil_scoped_release release;
      e = empirical_capacity(c, scheme_of(scheme), user_of(user), trials, seed, {workers});
    }
    return estimate_dict(e);
  }, py::arg("config"), py::arg("scheme"), py::arg("user"), py::arg("trials"), py::arg("seed") = 1,
     py::arg("workers") = 0);

  m.def("empirical_ee", [](const SystemConfig& c, const std::string& scheme, std::uint64_t trials,
                           std::uint64_t seed, unsigned workers) {
    c.validate();
    MetricEstimate e;
    {
      py::gil_scoped_release release;
      e = empirical_ee(c, scheme_of(scheme), trials, seed, {workers});
    }
    return estimate_dict(e);
  }, py::arg("config"), py::arg("scheme"), py::arg("trials"), py::arg("seed") = 1, py::arg("workers") = 0);

  m.def("point_csv", [](const SystemConfig& c, std::uint64_t trials, std::uint64_t seed,
                        const std::vector<double>& th_db, unsigned workers) {
    const Thresholds th = thresholds_of(th_db);
    py::gil_scoped_release release;
    return to_csv(run_point(c, th, {trials, seed, {workers}}));
  }, py::arg("config"), py::arg("trials") = 0, py::arg("seed") = 1, py::arg("thresholds_db") = kZeroDb,
     py::arg("workers") = 0);

  m.def("sweep_csv", [](const SystemConfig& c, const std::string& param, double from, double to, double step,
                        std::uint64_t trials, std::uint64_t seed, const std::vector<double>& th_db,
                        unsigned workers) {
    SweepSpec spec;
    if (param == "P") spec.parameter = SweepParam::transmit_power_dbm;
    else if (param == "N") spec.parameter = SweepParam::n_elements;
    else if (param == "snr") spec.parameter = SweepParam::mean_snr_db;
    else throw std::invalid_argument("param must be 'P', 'N' or 'snr'");
    spec.from = from;
    spec.to = to;
    spec.step = step;
    spec.trials = trials;
    spec.seed = seed;
    const Thresholds th = thresholds_of(th_db);
    py::gil_scoped_release release;
    return to_csv(run_sweep(c, th, spec, {workers}));
  }, py::arg("config"), py::arg("param"), py::arg("start"), py::arg("stop"), py::arg("step"),
     py::arg("trials") = 0, py::arg("seed") = 1, py::arg("thresholds_db") = kZeroDb, py::arg("workers") = 0);

  m.def("validate", [](const SystemConfig& c, std::uint64_t trials, std::uint64_t seed,
                       const std::vector<double>& th_db, unsigned workers) {
    const Thresholds th = thresholds_of(th_db);
    ValidationReport rep;
    {
      py::gil_scoped_release release;
      rep = validate_point(c, th, {trials, seed, {workers}});
    }
    py::list checks;
    for (const auto& ck : rep.checks) {
      py::dict d;
      d["name"] = ck.name;
      d["analytic"] = ck.analytic;
      d["mc"] = ck.mc;
      d["budget"] = ck.budget;
      d["passed"] = ck.passed;
      d["informational"] = ck.informational;
      checks.append(d);
    }
    py::dict out;
    out["ok"] = rep.ok();
    out["checks"] = checks;
    out["csv"] = to_csv(rep.rows);
    return out;
  }, py::arg("config"), py::arg("trials") = 100000, py::arg("seed") = 1, py::arg("thresholds_db") = kZeroDb,
     py::arg("workers") = 0);
}
