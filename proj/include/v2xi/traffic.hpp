#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "v2xi/geometry.hpp"
#include "v2xi/range.hpp"

namespace v2xi {

inline constexpr double kDefaultMinGapFt = 1.5;

/// Vehicle positions on one arm, measured upstream from its stop line.
struct ArmPlacement {
  Arm arm = Arm::N;
  std::vector<double> positions_ft;
};

struct ReceiverSlot {
  Arm arm = Arm::N;
  int index = 0;
};

/// Snapshot of every vehicle around the intersection. All vehicles except the
/// receiver transmit simultaneously (flooding).
struct PlacementScenario {
  IntersectionGeometry geometry;
  std::array<ArmPlacement, 4> arms{
      ArmPlacement{Arm::N, {}}, ArmPlacement{Arm::S, {}}, ArmPlacement{Arm::E, {}},
      ArmPlacement{Arm::W, {}}};
  ReceiverSlot receiver;
  RadioParams radio;
  double mean_spacing_ft = 50.0;

  const ArmPlacement& arm(Arm a) const { return arms[static_cast<std::size_t>(a)]; }
  ArmPlacement& arm(Arm a) { return arms[static_cast<std::size_t>(a)]; }

  double receiver_position_ft() const;
  std::array<int, 4> vehicle_counts() const;

  /// Throws Error{receiver_missing} if the receiver slot is empty.
  void validate() const;
};

ArmPlacement uniform_placement(double h, int n, Arm arm = Arm::N);

/// Gaps drawn i.i.d. from a shifted exponential with minimum `min_gap` and
/// mean `mean_h`. The first vehicle sits on the stop line.
ArmPlacement stochastic_placement(double mean_h, double min_gap, int n, std::uint64_t seed,
                                  Arm arm = Arm::N);

/// Uniform spacing h on every arm, receiver at the N stop line.
PlacementScenario uniform_scenario(const IntersectionGeometry& geom, double h,
                                   const std::array<int, 4>& vehicles_per_arm,
                                   const RadioParams& radio = {});

/// Independent stochastic arms; per-arm seeds derived from `seed`.
PlacementScenario stochastic_scenario(const IntersectionGeometry& geom, double mean_h,
                                      double min_gap,
                                      const std::array<int, 4>& vehicles_per_arm,
                                      std::uint64_t seed, const RadioParams& radio = {});

/// Mean of all consecutive gaps over all arms (0 if no arm has two vehicles).
double realized_mean_spacing(const PlacementScenario& scenario);

enum class LevelOfService { sparse_ab, mild_cd, dense_ef };

const char* to_string(LevelOfService los);

/// h > 100 -> A-B, 50 <= h <= 100 -> C-D, h < 50 -> E-F.
LevelOfService classify_los(double h);

/// Stateless seed mixing: distinct (seed, stream) pairs give decorrelated seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace v2xi
