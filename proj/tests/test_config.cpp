#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "risnoma/config.hpp"

using namespace risnoma;

namespace {

std::string error_key(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return {};
}

}  // namespace

TEST_CASE("empty documents give the defaults") {
  for (const char* text : {"", "   \n", "{}"}) {
    const SystemConfig c = parse_config(text);
    CHECK(c.surfaces.n1 == 50);
    CHECK(c.power.p_total_dbm == 30.0);
    CHECK(c.power.p_r == 0.4);
    CHECK(c.fading.m2 == 3.0);
    CHECK(c.geometry.loss_mode == LossMode::single);
    CHECK_FALSE(c.power.mean_snr_db.has_value());
  }
}

TEST_CASE("keys are applied") {
  const SystemConfig c = parse_config(R"({
    "surfaces.n1": 30, "surfaces.n2": 20, "power.p_total_dbm": -5.5,
    "fading.m1": 2, "fading.m2": 4.5, "geometry.d_loss_mode": "product",
    "geometry.d_loss_db": -100, "power.mean_snr_db": 40, "oma_resource_fraction": 1
  })");
  CHECK(c.surfaces.n1 == 30);
  CHECK(c.surfaces.n2 == 20);
  CHECK(c.power.p_total_dbm == -5.5);
  CHECK(c.fading.m1 == 2.0);
  CHECK(c.fading.m2 == 4.5);
  CHECK(c.geometry.loss_mode == LossMode::product);
  CHECK(*c.geometry.d_loss_db == -100.0);
  CHECK(*c.power.mean_snr_db == 40.0);
  CHECK(c.oma_resource_fraction == 1.0);
}

TEST_CASE("invalid documents name the key") {
  CHECK(error_key(R"({"power.p_r": 0.5})") == "power.p_t");
  CHECK(error_key(R"({"power.p_r": 0.5, "power.p_t": 0.5})").empty());
  CHECK(error_key(R"({"surfaces.beta_r": 0.9})") == "surfaces.beta_t");
  CHECK(error_key(R"({"surfaces.nope": 1})") == "surfaces.nope");
  CHECK(error_key(R"({"surfaces.n1": "ten"})") == "surfaces.n1");
  CHECK(error_key(R"({"surfaces.n1": -3})") == "surfaces.n1");
  CHECK(error_key(R"({"surfaces.n1": 2.5})") == "surfaces.n1");
  CHECK(error_key(R"({"geometry.d_loss_mode": "both"})") == "geometry.d_loss_mode");
  CHECK(error_key(R"({"fading.m2": 2})") == "fading.m2");
  CHECK(error_key(R"({"power.p_r": )") == "<json>");
  CHECK(error_key("[1, 2]") == "<json>");
}

TEST_CASE("files") {
  CHECK_THROWS_AS(load_config("/nonexistent/risnoma.json"), ConfigError);
  try {
    load_config("/nonexistent/risnoma.json");
  } catch (const ConfigError& e) {
    CHECK(e.key() == "<file>");
  }

  const auto path = std::filesystem::temp_directory_path() / "risnoma_test_config.json";
  {
    std::ofstream out(path);
    out << R"({"surfaces.n1": 12})";
  }
  CHECK(load_config(path).surfaces.n1 == 12);
  std::filesystem::remove(path);
}

TEST_CASE("round trip through JSON") {
  SystemConfig c;
  c.surfaces.n1 = 17;
  c.power.p_total_dbm = 12.25;
  c.geometry.d_loss_db = -70.0;
  c.geometry.loss_mode = LossMode::product;
  const SystemConfig back = parse_config(config_to_json(c));
  CHECK(back.surfaces.n1 == 17);
  CHECK(back.power.p_total_dbm == 12.25);
  CHECK(*back.geometry.d_loss_db == -70.0);
  CHECK(back.geometry.loss_mode == LossMode::product);
  CHECK_FALSE(back.power.mean_snr_db.has_value());
  CHECK(config_to_json(back) == config_to_json(c));

  // Every key that serialization emits is a documented key.
  c.power.mean_snr_db = 10.0;
  const std::string full = config_to_json(c);
  std::size_t found = 0;
  for (const auto& key : config_keys()) {
    if (full.find('"' + key + '"') != std::string::npos) ++found;
  }
  CHECK(found == config_keys().size());
  CHECK(config_keys().size() == 24);
}
