#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "v2xi/geometry.hpp"
#include "v2xi/range.hpp"
#include "v2xi/traffic.hpp"

namespace v2xi {

enum class PlacementMode { uniform, stochastic };

struct TrafficConfig {
  PlacementMode mode = PlacementMode::uniform;
  double mean_spacing_ft = 50.0;
  double min_gap_ft = kDefaultMinGapFt;
  std::uint64_t seed = 1;
  std::array<int, 4> vehicles_per_arm{50, 50, 50, 50};  // N, S, E, W
};

struct ScenarioConfig {
  IntersectionGeometry geometry;
  TrafficConfig traffic;
  RadioParams radio;
};

// Schema:
//   { "geometry": {diameter_ft, alpha_deg, lanes_per_arm, lane_width_ft, arm_length_ft},
//     "traffic":  {mode: "uniform"|"stochastic", mean_spacing_ft, min_gap_ft, seed,
//                  vehicles_per_arm: {N, S, E, W}},
//     "radio":    {beta, gamma, power, noise} }
// Every key is optional; unknown keys and wrong types raise Error{config}.
ScenarioConfig parse_scenario_json(const std::string& text);
ScenarioConfig load_scenario_file(const std::string& path);
std::string scenario_to_json(const ScenarioConfig& config);

PlacementScenario build_scenario(const ScenarioConfig& config);

}  // namespace v2xi
