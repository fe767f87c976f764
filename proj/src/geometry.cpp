#include "v2xi/geometry.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

#include "v2xi/error.hpp"
#include "v2xi/specfun.hpp"

namespace v2xi {
namespace {

void require(bool ok, ErrorCode code, const std::string& msg) {
  if (!ok) throw Error(code, msg);
}

}  // namespace

const char* to_string(Arm arm) {
  switch (arm) {
    case Arm::N: return "N";
    case Arm::S: return "S";
    case Arm::E: return "E";
    case Arm::W: return "W";
  }
  return "?";
}

Arm arm_from_string(const char* name) {
  if (std::strcmp(name, "N") == 0) return Arm::N;
  if (std::strcmp(name, "S") == 0) return Arm::S;
  if (std::strcmp(name, "E") == 0) return Arm::E;
  if (std::strcmp(name, "W") == 0) return Arm::W;
  throw Error(ErrorCode::parameter, std::string("unknown arm '") + name + "'");
}

void IntersectionGeometry::validate() const {
  require(diameter_ft > 0.0 && std::isfinite(diameter_ft), ErrorCode::parameter,
          "diameter_ft must be > 0");
  require(alpha_deg > 0.0 && alpha_deg < 180.0, ErrorCode::parameter,
          "alpha_deg must lie in (0, 180)");
  require(lanes_per_arm >= 1, ErrorCode::parameter, "lanes_per_arm must be >= 1");
  require(lane_width_ft > 0.0, ErrorCode::parameter, "lane_width_ft must be > 0");
  require(arm_length_ft > 0.0, ErrorCode::parameter, "arm_length_ft must be > 0");
}

bool IntersectionGeometry::in_design_range() const {
  return diameter_ft >= 28.0 && diameter_ft <= 125.0 && alpha_deg >= 60.0 &&
         alpha_deg <= 90.0;
}

void SightTriangle::validate() const {
  require(leg_a_ft > 0.0 && leg_b_ft > 0.0 && leg_c_ft > 0.0, ErrorCode::parameter,
          "sight triangle legs must be > 0");
  require(gap_time_s >= 3.0, ErrorCode::constraint, "t_g >= 3 sec is required");
}

double deg_to_rad(double deg) { return deg * specfun::kPi / 180.0; }
double rad_to_deg(double rad) { return rad * 180.0 / specfun::kPi; }

double cross_arm_distance_sq(int j, double h, const IntersectionGeometry& geom) {
  require(j >= 0, ErrorCode::parameter, "vehicle index j must be >= 0");
  require(h > 0.0, ErrorCode::parameter, "spacing h must be > 0");
  const double half = 0.5 * geom.diameter_ft;
  const double far = half + j * h;
  return half * half + far * far - 2.0 * half * far * std::cos(deg_to_rad(geom.alpha_deg));
}

double opposing_arm_distance_sq(int j, double h, const IntersectionGeometry& geom) {
  require(j >= 0, ErrorCode::parameter, "vehicle index j must be >= 0");
  require(h > 0.0, ErrorCode::parameter, "spacing h must be > 0");
  const double d = geom.diameter_ft;
  const double far = d + j * h;
  return d * d + far * far;
}

namespace coords {

Point arm_direction(Arm arm, double alpha_deg) {
  const double a = deg_to_rad(alpha_deg);
  switch (arm) {
    case Arm::N: return {0.0, 1.0};
    case Arm::S: return {0.0, -1.0};
    case Arm::E: return {std::sin(a), std::cos(a)};
    case Arm::W: return {-std::sin(a), std::cos(a)};
  }
  return {};
}

Point vehicle_location(Arm arm, double position_ft, const IntersectionGeometry& geom) {
  const Point dir = arm_direction(arm, geom.alpha_deg);
  const double r = 0.5 * geom.diameter_ft + position_ft;
  return {r * dir.x, r * dir.y};
}

double distance_sq(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

}  // namespace coords

int default_reference_lane(int lanes_per_arm) { return lanes_per_arm / 2; }

std::vector<double> lane_horizontal_angles(const IntersectionGeometry& geom,
                                           double reference_distance_ft,
                                           std::optional<int> reference_lane) {
  geom.validate();
  require(reference_distance_ft > 0.0, ErrorCode::domain, "reference distance must be > 0");
  const int ref = reference_lane.value_or(default_reference_lane(geom.lanes_per_arm));
  require(ref >= 0 && ref < geom.lanes_per_arm, ErrorCode::parameter,
          "reference lane index out of range");
  std::vector<double> thetas;
  thetas.reserve(static_cast<std::size_t>(geom.lanes_per_arm));
  for (int m = 0; m < geom.lanes_per_arm; ++m) {
    const double offset = (m - ref) * geom.lane_width_ft;
    thetas.push_back(std::atan(offset / reference_distance_ft));
  }
  return thetas;
}

double sight_leg_length(double posted_speed_mph, double gap_time_s) {
  require(posted_speed_mph > 0.0, ErrorCode::parameter, "posted speed must be > 0");
  if (gap_time_s < 3.0) {
    std::ostringstream msg;
    msg << "gap time " << gap_time_s << " s violates t_g >= 3 sec";
    throw Error(ErrorCode::constraint, msg.str());
  }
  return 1.47 * posted_speed_mph * gap_time_s;
}

double angle_from_legs(double a_ft, double b_ft, double c_ft) {
  require(a_ft > 0.0 && b_ft > 0.0 && c_ft > 0.0, ErrorCode::parameter,
          "triangle legs must be > 0");
  const double num = a_ft * a_ft + b_ft * b_ft - c_ft * c_ft;
  const double den = 2.0 * a_ft * b_ft;
  if (std::abs(num) > den) {
    std::ostringstream msg;
    msg << "legs (" << a_ft << ", " << b_ft << ", " << c_ft
        << ") violate the triangle inequality";
    throw Error(ErrorCode::infeasible_geometry, msg.str());
  }
  return rad_to_deg(std::acos(num / den));
}

const std::vector<Table1Row>& table1_data() {
  static const std::vector<Table1Row> rows = {
      {25, 280, 60}, {30, 355, 65}, {35, 415, 70}, {40, 470, 75},
      {45, 530, 78}, {50, 590, 80}, {55, 645, 85}, {60, 705, 88},
  };
  return rows;
}

double implied_gap_time(const Table1Row& row) {
  // c^2 = 2 a^2 (1 - cos alpha) when a = b
  const double one_minus_cos = 1.0 - std::cos(deg_to_rad(row.alpha_deg));
  const double leg = row.c_ft / std::sqrt(2.0 * one_minus_cos);
  return leg / (1.47 * row.speed_mph);
}

}  // namespace v2xi
