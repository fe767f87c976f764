#pragma once

#include <array>
#include <optional>
#include <vector>

namespace v2xi {

// The four approaches of the intersection. The receiver sits on N by default;
// S is the opposing arm, E and W are the cross arms at angle alpha from N.
enum class Arm { N = 0, S = 1, E = 2, W = 3 };

inline constexpr std::array<Arm, 4> kAllArms = {Arm::N, Arm::S, Arm::E, Arm::W};

const char* to_string(Arm arm);
Arm arm_from_string(const char* name);

struct IntersectionGeometry {
  double diameter_ft = 40.0;
  double alpha_deg = 90.0;
  int lanes_per_arm = 1;
  double lane_width_ft = 12.0;
  double arm_length_ft = 2000.0;

  /// Throws Error{parameter} when any field is outside its admissible range.
  void validate() const;

  /// True iff D in [28, 125] ft and alpha in [60, 90] degrees.
  bool in_design_range() const;
};

struct SightTriangle {
  double leg_a_ft = 0.0;
  double leg_b_ft = 0.0;
  double leg_c_ft = 0.0;
  double posted_speed_mph = 0.0;
  double gap_time_s = 3.0;

  void validate() const;
};

struct Table1Row {
  double speed_mph;
  double c_ft;
  double alpha_deg;
};

double deg_to_rad(double deg);
double rad_to_deg(double rad);

// Squared receiver-to-vehicle distance for the j-th vehicle on a cross arm
// (law of cosines with both stop lines D/2 from the centre).
double cross_arm_distance_sq(int j, double h, const IntersectionGeometry& geom);

// Squared distance for the j-th vehicle on the opposing arm: D^2 + (D + jh)^2.
// Kept verbatim; the straight-across coordinate model gives (D + jh)^2 instead.
double opposing_arm_distance_sq(int j, double h, const IntersectionGeometry& geom);

namespace coords {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Unit direction of an arm: N along +y, S along -y, E/W at +/-alpha from N.
Point arm_direction(Arm arm, double alpha_deg);

/// Location of a vehicle `position_ft` upstream of the stop line of `arm`.
/// Stop lines are D/2 from the intersection centre.
Point vehicle_location(Arm arm, double position_ft, const IntersectionGeometry& geom);

double distance_sq(Point a, Point b);

}  // namespace coords

/// Horizontal angle (radians) of every lane centreline seen from a receiver
/// `reference_distance_ft` away: atan((m - ref) * lane_width / distance).
/// reference_lane defaults to default_reference_lane(lanes_per_arm).
std::vector<double> lane_horizontal_angles(const IntersectionGeometry& geom,
                                           double reference_distance_ft,
                                           std::optional<int> reference_lane = std::nullopt);

/// Lane nearest the arm centreline on the approach side (0-based). For the
/// four-lane layout with lanes numbered right to left this is lane 3.
int default_reference_lane(int lanes_per_arm);

/// a (or b) = 1.47 * V_posted * t_g. Throws Error{constraint} if t_g < 3 s.
double sight_leg_length(double posted_speed_mph, double gap_time_s);

/// Law of cosines solved for the included angle, in degrees.
/// Throws Error{infeasible_geometry} when the legs violate the triangle inequality.
double angle_from_legs(double a_ft, double b_ft, double c_ft);

/// Corner sight distances and intersection angles per posted speed (25..60 mph).
const std::vector<Table1Row>& table1_data();

/// Gap time t_g that makes a = b legs reproduce (c, alpha) for a sight-distance table row.
double implied_gap_time(const Table1Row& row);

}  // namespace v2xi
