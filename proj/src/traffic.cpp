#include "v2xi/traffic.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "v2xi/error.hpp"

namespace v2xi {

double PlacementScenario::receiver_position_ft() const {
  validate();
  return arm(receiver.arm).positions_ft[static_cast<std::size_t>(receiver.index)];
}

std::array<int, 4> PlacementScenario::vehicle_counts() const {
  std::array<int, 4> counts{};
  for (std::size_t i = 0; i < arms.size(); ++i)
    counts[i] = static_cast<int>(arms[i].positions_ft.size());
  return counts;
}

void PlacementScenario::validate() const {
  geometry.validate();
  const auto& slot = arm(receiver.arm).positions_ft;
  if (receiver.index < 0 || static_cast<std::size_t>(receiver.index) >= slot.size()) {
    std::ostringstream msg;
    msg << "receiver (" << to_string(receiver.arm) << ", " << receiver.index
        << ") is not present in its arm placement";
    throw Error(ErrorCode::receiver_missing, msg.str());
  }
}

ArmPlacement uniform_placement(double h, int n, Arm arm) {
  if (!(h > 0.0)) throw Error(ErrorCode::parameter, "spacing h must be > 0");
  if (n < 0) throw Error(ErrorCode::parameter, "vehicle count must be >= 0");
  ArmPlacement out{arm, {}};
  out.positions_ft.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) out.positions_ft.push_back(j * h);
  return out;
}

ArmPlacement stochastic_placement(double mean_h, double min_gap, int n, std::uint64_t seed,
                                  Arm arm) {
  if (!(min_gap > 0.0) || !(mean_h > min_gap)) {
    std::ostringstream msg;
    msg << "stochastic placement needs mean_h > min_gap > 0 (mean_h=" << mean_h
        << ", min_gap=" << min_gap << ")";
    throw Error(ErrorCode::parameter, msg.str());
  }
  if (n < 0) throw Error(ErrorCode::parameter, "vehicle count must be >= 0");

  // Inverse-CDF sampling on raw 64-bit draws keeps the stream identical across
  // standard library implementations.
  std::mt19937_64 rng(seed);
  const double excess_mean = mean_h - min_gap;
  ArmPlacement out{arm, {}};
  out.positions_ft.reserve(static_cast<std::size_t>(n));
  double pos = 0.0;
  for (int j = 0; j < n; ++j) {
    if (j > 0) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
      pos += min_gap - excess_mean * std::log1p(-u);
    }
    out.positions_ft.push_back(pos);
  }
  return out;
}

PlacementScenario uniform_scenario(const IntersectionGeometry& geom, double h,
                                   const std::array<int, 4>& vehicles_per_arm,
                                   const RadioParams& radio) {
  PlacementScenario sc;
  sc.geometry = geom;
  sc.radio = radio;
  sc.mean_spacing_ft = h;
  for (Arm a : kAllArms)
    sc.arm(a) = uniform_placement(h, vehicles_per_arm[static_cast<std::size_t>(a)], a);
  return sc;
}

PlacementScenario stochastic_scenario(const IntersectionGeometry& geom, double mean_h,
                                      double min_gap,
                                      const std::array<int, 4>& vehicles_per_arm,
                                      std::uint64_t seed, const RadioParams& radio) {
  PlacementScenario sc;
  sc.geometry = geom;
  sc.radio = radio;
  sc.mean_spacing_ft = mean_h;
  for (Arm a : kAllArms) {
    const auto idx = static_cast<std::size_t>(a);
    sc.arm(a) = stochastic_placement(mean_h, min_gap, vehicles_per_arm[idx],
                                     derive_seed(seed, idx), a);
  }
  return sc;
}

double realized_mean_spacing(const PlacementScenario& scenario) {
  double total = 0.0;
  std::size_t gaps = 0;
  for (const auto& arm : scenario.arms) {
    const auto& p = arm.positions_ft;
    if (p.size() < 2) continue;
    total += p.back() - p.front();
    gaps += p.size() - 1;
  }
  return gaps == 0 ? 0.0 : total / static_cast<double>(gaps);
}

const char* to_string(LevelOfService los) {
  switch (los) {
    case LevelOfService::sparse_ab: return "A-B";
    case LevelOfService::mild_cd: return "C-D";
    case LevelOfService::dense_ef: return "E-F";
  }
  return "?";
}

LevelOfService classify_los(double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::parameter, "spacing h must be > 0");
  if (h > 100.0) return LevelOfService::sparse_ab;
  if (h >= 50.0) return LevelOfService::mild_cd;
  return LevelOfService::dense_ef;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finaliser over a golden-ratio stride
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace v2xi
