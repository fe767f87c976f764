#include "v2xi/scenario_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "v2xi/error.hpp"

namespace v2xi {
namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const char* where, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) throw Error(ErrorCode::config, std::string(where) + " must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : keys) known = known || it.key() == k;
    if (!known)
      throw Error(ErrorCode::config, "unknown key '" + it.key() + "' in " + where);
  }
}

template <typename T>
void read(const json& obj, const char* key, T& out) {
  if (!obj.contains(key)) return;
  try {
    out = obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::config, std::string("bad value for '") + key + "': " + e.what());
  }
}

}  // namespace

ScenarioConfig parse_scenario_json(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::config, std::string("scenario JSON: ") + e.what());
  }
  reject_unknown(root, "scenario", {"geometry", "traffic", "radio"});

  ScenarioConfig cfg;
  if (root.contains("geometry")) {
    const auto& g = root["geometry"];
    reject_unknown(g, "geometry",
                   {"diameter_ft", "alpha_deg", "lanes_per_arm", "lane_width_ft", "arm_length_ft"});
    read(g, "diameter_ft", cfg.geometry.diameter_ft);
    read(g, "alpha_deg", cfg.geometry.alpha_deg);
    read(g, "lanes_per_arm", cfg.geometry.lanes_per_arm);
    read(g, "lane_width_ft", cfg.geometry.lane_width_ft);
    read(g, "arm_length_ft", cfg.geometry.arm_length_ft);
  }
  if (root.contains("traffic")) {
    const auto& t = root["traffic"];
    reject_unknown(t, "traffic",
                   {"mode", "mean_spacing_ft", "min_gap_ft", "seed", "vehicles_per_arm"});
    std::string mode = "uniform";
    read(t, "mode", mode);
    if (mode == "uniform") {
      cfg.traffic.mode = PlacementMode::uniform;
    } else if (mode == "stochastic") {
      cfg.traffic.mode = PlacementMode::stochastic;
    } else {
      throw Error(ErrorCode::config, "traffic.mode must be \"uniform\" or \"stochastic\"");
    }
    read(t, "mean_spacing_ft", cfg.traffic.mean_spacing_ft);
    read(t, "min_gap_ft", cfg.traffic.min_gap_ft);
    read(t, "seed", cfg.traffic.seed);
    if (t.contains("vehicles_per_arm")) {
      const auto& v = t["vehicles_per_arm"];
      reject_unknown(v, "traffic.vehicles_per_arm", {"N", "S", "E", "W"});
      for (Arm a : kAllArms) read(v, to_string(a), cfg.traffic.vehicles_per_arm[static_cast<std::size_t>(a)]);
    }
  }
  if (root.contains("radio")) {
    const auto& r = root["radio"];
    reject_unknown(r, "radio", {"beta", "gamma", "power", "noise"});
    read(r, "beta", cfg.radio.beta);
    read(r, "gamma", cfg.radio.pathloss_exp);
    read(r, "power", cfg.radio.power);
    read(r, "noise", cfg.radio.noise);
  }
  return cfg;
}

ScenarioConfig load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::config, "cannot read scenario file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario_json(ss.str());
}

std::string scenario_to_json(const ScenarioConfig& c) {
  nlohmann::ordered_json j;
  j["geometry"] = {{"diameter_ft", c.geometry.diameter_ft},
                   {"alpha_deg", c.geometry.alpha_deg},
                   {"lanes_per_arm", c.geometry.lanes_per_arm},
                   {"lane_width_ft", c.geometry.lane_width_ft},
                   {"arm_length_ft", c.geometry.arm_length_ft}};
  const auto& v = c.traffic.vehicles_per_arm;
  j["traffic"] = {{"mode", c.traffic.mode == PlacementMode::uniform ? "uniform" : "stochastic"},
                  {"mean_spacing_ft", c.traffic.mean_spacing_ft},
                  {"min_gap_ft", c.traffic.min_gap_ft},
                  {"seed", c.traffic.seed},
                  {"vehicles_per_arm", {{"N", v[0]}, {"S", v[1]}, {"E", v[2]}, {"W", v[3]}}}};
  j["radio"] = {{"beta", c.radio.beta},
                {"gamma", c.radio.pathloss_exp},
                {"power", c.radio.power},
                {"noise", c.radio.noise}};
  return j.dump(2);
}

PlacementScenario build_scenario(const ScenarioConfig& config) {
  config.geometry.validate();
  config.radio.validate();
  if (config.traffic.mode == PlacementMode::uniform) {
    return uniform_scenario(config.geometry, config.traffic.mean_spacing_ft,
                            config.traffic.vehicles_per_arm, config.radio);
  }
  return stochastic_scenario(config.geometry, config.traffic.mean_spacing_ft,
                             config.traffic.min_gap_ft, config.traffic.vehicles_per_arm,
                             config.traffic.seed, config.radio);
}

}  // namespace v2xi
