#include "risnoma/config.hpp"

#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include <json.hpp>

namespace risnoma {

namespace {

using nlohmann::json;

double as_number(const std::string& key, const json& v) {
  if (!v.is_number()) throw ConfigError(key, "expected a number");
  return v.get<double>();
}

unsigned as_count(const std::string& key, const json& v) {
  if (!v.is_number_integer() && !v.is_number_unsigned()) {
    throw ConfigError(key, "expected a non-negative integer");
  }
  const auto n = v.get<long long>();
  if (n < 0 || n > static_cast<long long>(std::numeric_limits<unsigned>::max())) {
    throw ConfigError(key, "expected a non-negative integer");
  }
  return static_cast<unsigned>(n);
}

LossMode as_loss_mode(const std::string& key, const json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "single") return LossMode::single;
    if (s == "product") return LossMode::product;
  }
  throw ConfigError(key, "expected \"single\" or \"product\"");
}

using Setter = std::function<void(SystemConfig&, const std::string&, const json&)>;

#define RISNOMA_NUM(field) [](SystemConfig& c, const std::string& k, const json& v) { c.field = as_number(k, v); }
#define RISNOMA_CNT(field) [](SystemConfig& c, const std::string& k, const json& v) { c.field = as_count(k, v); }

const std::vector<std::pair<std::string, Setter>>& setters() {
  static const std::vector<std::pair<std::string, Setter>> table = {
      {"geometry.d_sR", RISNOMA_NUM(geometry.d_sR)},
      {"geometry.d_St", RISNOMA_NUM(geometry.d_St)},
      {"geometry.d_Sr", RISNOMA_NUM(geometry.d_Sr)},
      {"geometry.d_RS", RISNOMA_NUM(geometry.d_RS)},
      {"geometry.kappa", RISNOMA_NUM(geometry.kappa)},
      {"geometry.d_loss_mode",
       [](SystemConfig& c, const std::string& k, const json& v) { c.geometry.loss_mode = as_loss_mode(k, v); }},
      {"geometry.d_loss_db", RISNOMA_NUM(geometry.d_loss_db)},
      {"surfaces.n1", RISNOMA_CNT(surfaces.n1)},
      {"surfaces.n2", RISNOMA_CNT(surfaces.n2)},
      {"surfaces.beta_r", RISNOMA_NUM(surfaces.beta_r)},
      {"surfaces.beta_t", RISNOMA_NUM(surfaces.beta_t)},
      {"power.p_total_dbm", RISNOMA_NUM(power.p_total_dbm)},
      {"power.p_r", RISNOMA_NUM(power.p_r)},
      {"power.p_t", RISNOMA_NUM(power.p_t)},
      {"power.noise_dbm", RISNOMA_NUM(power.noise_dbm)},
      {"power.alpha", RISNOMA_NUM(power.alpha)},
      {"power.p_ris_element_dbm", RISNOMA_NUM(power.p_ris_element_dbm)},
      {"power.p_star_element_dbm", RISNOMA_NUM(power.p_star_element_dbm)},
      {"power.p_circuit_t_dbm", RISNOMA_NUM(power.p_circuit_t_dbm)},
      {"power.p_circuit_r_dbm", RISNOMA_NUM(power.p_circuit_r_dbm)},
      {"power.mean_snr_db", RISNOMA_NUM(power.mean_snr_db)},
      {"fading.m1", RISNOMA_NUM(fading.m1)},
      {"fading.m2", RISNOMA_NUM(fading.m2)},
      {"oma_resource_fraction", RISNOMA_NUM(oma_resource_fraction)},
  };
  return table;
}

#undef RISNOMA_NUM
#undef RISNOMA_CNT

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, _] : setters()) k.push_back(name);
    return k;
  }();
  return keys;
}

SystemConfig parse_config(std::string_view json_text) {
  SystemConfig cfg;
  if (json_text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    cfg.validate();
    return cfg;
  }
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<json>", std::string("parse error: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("<json>", "top level must be an object");

  std::map<std::string, const Setter*> lookup;
  for (const auto& [name, fn] : setters()) lookup.emplace(name, &fn);

  for (const auto& [key, value] : doc.items()) {
    const auto it = lookup.find(key);
    if (it == lookup.end()) throw ConfigError(key, "unknown config key");
    (*it->second)(cfg, key, value);
  }
  cfg.validate();
  return cfg;
}

SystemConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_to_json(const SystemConfig& c) {
  json j = json::object();
  j["geometry.d_sR"] = c.geometry.d_sR;
  j["geometry.d_St"] = c.geometry.d_St;
  j["geometry.d_Sr"] = c.geometry.d_Sr;
  j["geometry.d_RS"] = c.geometry.d_RS;
  j["geometry.kappa"] = c.geometry.kappa;
  j["geometry.d_loss_mode"] = c.geometry.loss_mode == LossMode::single ? "single" : "product";
  if (c.geometry.d_loss_db) j["geometry.d_loss_db"] = *c.geometry.d_loss_db;
  j["surfaces.n1"] = c.surfaces.n1;
  j["surfaces.n2"] = c.surfaces.n2;
  j["surfaces.beta_r"] = c.surfaces.beta_r;
  j["surfaces.beta_t"] = c.surfaces.beta_t;
  j["power.p_total_dbm"] = c.power.p_total_dbm;
  j["power.p_r"] = c.power.p_r;
  j["power.p_t"] = c.power.p_t;
  j["power.noise_dbm"] = c.power.noise_dbm;
  j["power.alpha"] = c.power.alpha;
  j["power.p_ris_element_dbm"] = c.power.p_ris_element_dbm;
  j["power.p_star_element_dbm"] = c.power.p_star_element_dbm;
  j["power.p_circuit_t_dbm"] = c.power.p_circuit_t_dbm;
  j["power.p_circuit_r_dbm"] = c.power.p_circuit_r_dbm;
  if (c.power.mean_snr_db) j["power.mean_snr_db"] = *c.power.mean_snr_db;
  j["fading.m1"] = c.fading.m1;
  j["fading.m2"] = c.fading.m2;
  j["oma_resource_fraction"] = c.oma_resource_fraction;
  return j.dump(2);
}

}  // namespace risnoma
