#include "v2xi/interference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "v2xi/error.hpp"

namespace v2xi {
namespace {

using specfun::kBasel;

bool opposing(Arm a, Arm b) {
  return (a == Arm::N && b == Arm::S) || (a == Arm::S && b == Arm::N) ||
         (a == Arm::E && b == Arm::W) || (a == Arm::W && b == Arm::E);
}

double one_minus_cos(double alpha_deg) {
  const double v = 1.0 - std::cos(deg_to_rad(alpha_deg));
  if (!(v > 0.0)) {
    std::ostringstream msg;
    msg << "alpha = " << alpha_deg << " deg makes 1 - cos(alpha) vanish";
    throw Error(ErrorCode::degenerate_geometry, msg.str());
  }
  return v;
}

void require_spacing(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw Error(ErrorCode::parameter, "spacing h must be > 0");
}

}  // namespace

const char* to_string(ComputationMode mode) {
  switch (mode) {
    case ComputationMode::exact: return "exact";
    case ComputationMode::finite_closed_form: return "finite";
    case ComputationMode::bound_printed: return "printed";
    case ComputationMode::bound_derived: return "derived";
    case ComputationMode::bound_fitted: return "fitted";
  }
  return "?";
}

ComputationMode computation_mode_from_string(const std::string& name) {
  for (auto m : {ComputationMode::exact, ComputationMode::finite_closed_form,
                 ComputationMode::bound_printed, ComputationMode::bound_derived,
                 ComputationMode::bound_fitted}) {
    if (name == to_string(m)) return m;
  }
  throw Error(ErrorCode::config, "unknown computation mode '" + name +
                                     "' (expected exact|finite|printed|derived|fitted)");
}

double InterferenceBreakdown::get(Arm arm) const {
  switch (arm) {
    case Arm::N: return north;
    case Arm::S: return south;
    case Arm::E: return east;
    case Arm::W: return west;
  }
  return 0.0;
}

InterferenceBreakdown make_breakdown(double north, double south, double east, double west,
                                     ComputationMode mode) {
  InterferenceBreakdown b;
  b.north = north;
  b.south = south;
  b.east = east;
  b.west = west;
  b.total = north + south + east + west;
  b.mode = mode;
  return b;
}

// --- exact ------------------------------------------------------------------

double pair_distance_sq(Arm receiver_arm, double receiver_pos_ft, Arm arm, double pos_ft,
                        const IntersectionGeometry& geom, DistanceModel model) {
  if (model == DistanceModel::coordinate) {
    return coords::distance_sq(coords::vehicle_location(receiver_arm, receiver_pos_ft, geom),
                               coords::vehicle_location(arm, pos_ft, geom));
  }
  const double D = geom.diameter_ft;
  if (arm == receiver_arm) {
    const double d = pos_ft - receiver_pos_ft;
    return d * d;
  }
  if (opposing(arm, receiver_arm)) {
    const double far = D + pos_ft + receiver_pos_ft;
    return D * D + far * far;
  }
  const auto u = coords::arm_direction(receiver_arm, geom.alpha_deg);
  const auto v = coords::arm_direction(arm, geom.alpha_deg);
  const double cos_between = u.x * v.x + u.y * v.y;
  const double r1 = 0.5 * D + receiver_pos_ft;
  const double r2 = 0.5 * D + pos_ft;
  return r1 * r1 + r2 * r2 - 2.0 * r1 * r2 * cos_between;
}

InterferenceBreakdown exact_interference(const PlacementScenario& scenario,
                                         DistanceModel distance_model) {
  scenario.validate();
  const auto& geom = scenario.geometry;
  const Arm rx_arm = scenario.receiver.arm;
  const double rx_pos = scenario.receiver_position_ft();

  std::array<double, 4> per_arm{};
  for (Arm arm : kAllArms) {
    const auto& pos = scenario.arm(arm).positions_ft;
    double acc = 0.0;
    for (std::size_t k = 0; k < pos.size(); ++k) {
      if (arm == rx_arm && static_cast<int>(k) == scenario.receiver.index) continue;
      const double d2 = pair_distance_sq(rx_arm, rx_pos, arm, pos[k], geom, distance_model);
      if (!(d2 > 0.0)) {
        std::ostringstream msg;
        msg << "interferer " << to_string(arm) << "[" << k << "] coincides with the receiver";
        throw Error(ErrorCode::singularity, msg.str());
      }
      acc += 1.0 / d2;
    }
    per_arm[static_cast<std::size_t>(arm)] = acc;
  }
  return make_breakdown(per_arm[0], per_arm[1], per_arm[2], per_arm[3],
                        ComputationMode::exact);
}

// --- finite sums ------------------------------------------------------------

InterferenceBreakdown per_arm_finite_sums(double h, const IntersectionGeometry& geom,
                                          const std::array<int, 4>& n_per_arm) {
  require_spacing(h);
  geom.validate();
  const int nN = n_per_arm[0], nS = n_per_arm[1], nE = n_per_arm[2], nW = n_per_arm[3];
  if (nN < 1) throw Error(ErrorCode::receiver_missing, "receiver arm N needs at least one vehicle");
  if (nS < 0 || nE < 0 || nW < 0) throw Error(ErrorCode::parameter, "vehicle counts must be >= 0");

  const double D = geom.diameter_ft;
  const double omc = one_minus_cos(geom.alpha_deg);

  // Summed from the far end so the small terms accumulate first.
  double north = 0.0;
  for (int j = nN - 1; j >= 1; --j) north += 1.0 / (static_cast<double>(j) * j);
  north /= h * h;

  double south = 0.0;
  for (int j = nS - 1; j >= 0; --j) {
    const double far = D + j * h;
    south += 1.0 / (D * D + far * far);
  }

  // printed stop-line constant 1 / (D^2 (2 - 2 cos a)), read as an additive term
  const double stop_line_term = 1.0 / (D * D * 2.0 * omc);
  auto cross = [&](int n) {
    if (n < 1) return 0.0;
    double acc = 0.0;
    for (int j = n - 1; j >= 1; --j) {
      const double jh = j * h;
      acc += 1.0 / (jh * jh + jh * D * omc);
    }
    return stop_line_term + acc;
  };

  auto out = make_breakdown(north, south, cross(nE), cross(nW),
                            ComputationMode::finite_closed_form);
  const int n_min = std::min({std::max(nN, 1), nS, nE, nW});
  out.tail_bound = finite_sum_tail_bound(h, n_min);
  return out;
}

int effective_vehicle_count(double h, double arm_length_ft) {
  require_spacing(h);
  const double n = std::floor(arm_length_ft / h) + 1.0;
  return static_cast<int>(std::min(n, 1e5));
}

double finite_sum_tail_bound(double h, int n) {
  require_spacing(h);
  if (n < 2) return std::numeric_limits<double>::infinity();
  return 4.0 / ((n - 1.0) * h * h);
}

// --- bounds -----------------------------------------------------------------

InterferenceBreakdown long_arm_bound(double h, const IntersectionGeometry& geom,
                                         BoundMode mode) {
  require_spacing(h);
  geom.validate();
  const double D = geom.diameter_ft;
  const double omc = one_minus_cos(geom.alpha_deg);
  const double ratio = D / h;

  const double north = kBasel / (h * h);
  const double south = 1.0 / (D * D) + specfun::trigamma(ratio).value / (h * h);

  if (mode == BoundMode::printed) {
    const double c = ratio * omc;
    const double gamma = specfun::kEulerGammaPrinted;
    const double lead = 1.0 / (0.5 * D * D * D * h * omc * omc);
    const double inner = specfun::digamma(c).value + 1.0 / c + gamma;
    const double squared = (lead * inner) * (lead * inner);
    const double stop_line = 1.0 / (0.5 * D * D * omc);
    // east keeps the standalone stop-line constant, west the trailing square
    return make_breakdown(north, south, stop_line, squared, ComputationMode::bound_printed);
  }

  // sum_{j>=1} 1/((jh)^2 + jhD(1-cos a)) = (Psi(c) + 1/c + gamma) / (h D (1-cos a)),
  // c = D (1 - cos a) / h; plus the exact j = 0 term 2 / (D^2 (1 - cos a)).
  const double c = D * omc / h;
  const double tail = (specfun::digamma(c).value + 1.0 / c + specfun::kEulerGamma) / (h * D * omc);
  const double cross = 2.0 / (D * D * omc) + tail;
  return make_breakdown(north, south, cross, cross, ComputationMode::bound_derived);
}

InterferenceBreakdown component_bound_chain(double h, const IntersectionGeometry& geom) {
  require_spacing(h);
  geom.validate();
  const double D = geom.diameter_ft;
  const double omc = one_minus_cos(geom.alpha_deg);
  const double ratio = D / h;
  const double c = ratio * omc;

  const double north = kBasel / (h * h);
  const double south = 1.0 / (D * D) + specfun::trigamma(ratio).value / (h * h);
  const double west = (specfun::digamma(c).value + 1.0 / c + specfun::kEulerGammaPrinted) /
                      (0.5 * D * D * D * h * omc * omc);
  const double east = 1.0 / (0.25 * D * D * 2.0 * omc) + west;
  return make_breakdown(north, south, east, west, ComputationMode::bound_printed);
}

double orthogonal_bound(double h, double D, BoundMode mode) {
  require_spacing(h);
  if (!(D > 0.0)) throw Error(ErrorCode::parameter, "diameter D must be > 0");
  if (mode == BoundMode::derived) {
    IntersectionGeometry geom;
    geom.diameter_ft = D;
    geom.alpha_deg = 90.0;
    return long_arm_bound(h, geom, BoundMode::derived).total;
  }
  const double ratio = D / h;
  const double third =
      2.0 / (D * D * D * h) *
      (specfun::kEulerGammaPrinted + h / D + specfun::digamma(ratio).value);
  return 3.0 / (D * D) + (kBasel + specfun::trigamma(ratio).value) / (h * h) + third * third;
}

const std::vector<BoundCoefficients>& bound_coefficient_table() {
  // alpha, 1/D^2 count, power coef, power exp, lead {num, den}, log coef,
  // offset, h/D slope, log argument scaled by (1 - cos a)
  static const std::vector<BoundCoefficients> table = {
      {60, 5.0, 1.3003, -1.067, {8.0, 1.0}, 1.0461, -0.024, 2.0, true},
      {65, 1.0 + 1.0 / 0.2887, 1.3003, -1.067, {1.0, 0.1666}, 1.0498, 0.0068, 0.5774, true},
      {70, 1.0 + 1.0 / 0.3289, 1.3003, -1.067, {1.0, 0.02165}, 1.0556, 0.0459, 0.6579, true},
      {75, 1.0 + 1.0 / 0.3705, 1.3003, -1.067, {1.0, 0.02746}, 1.0617, 0.0896, 0.7412, true},
      {78, 1.0 + 1.0 / 0.3706, 1.3003, -1.067, {1.0, 0.02747}, 1.0638, 0.1265, 0.7921, true},
      {80, 1.0 + 1.0 / 0.4131, 1.3003, -1.067, {1.0, 0.03414}, 1.066, 0.1479, 0.8263, true},
      {85, 1.0 + 1.0 / 0.4564, 1.3003, -1.067, {1.0, 0.04166}, 1.0727, 0.2016, 0.9128, true},
      {88, 1.0 + 1.0 / 0.4825, 1.3003, -1.067, {1.0, 0.04657}, 1.0774, 0.2380, 0.9651, true},
      {90, 3.0, 1.3003, -1.067, {2.0, 1.0}, 1.0799, 0.2658, 1.0, false},
  };
  return table;
}

const BoundCoefficients& bound_coefficients(double alpha_deg) {
  for (const auto& row : bound_coefficient_table()) {
    if (row.alpha_deg == alpha_deg) return row;
  }
  std::ostringstream msg;
  msg << "no fitted bound for alpha = " << alpha_deg << " deg; supported:";
  for (const auto& row : bound_coefficient_table()) msg << ' ' << row.alpha_deg;
  throw Error(ErrorCode::unsupported_angle, msg.str());
}

FittedBound evaluate_fitted(const BoundCoefficients& c, double h, double D) {
  require_spacing(h);
  if (!(D > 0.0)) throw Error(ErrorCode::parameter, "diameter D must be > 0");
  const double ratio = D / h;
  const double log_arg =
      c.log_scaled_by_cos ? ratio * (1.0 - std::cos(deg_to_rad(c.alpha_deg))) : ratio;
  const double lead =
      c.lead_denominator_form.numerator / (c.lead_denominator_form.denominator * D * D * D * h);
  const double inner = c.slope_h_over_D * h / D + c.log_coef * std::log(log_arg) + c.inner_offset;

  FittedBound out;
  out.value = c.const_term_count / (D * D) +
              (kBasel + c.trig_power_coef * std::pow(ratio, c.trig_power_exp)) / (h * h) +
              lead * inner * inner;
  if (ratio < kFitRatioMin || ratio > kFitRatioMax) {
    out.in_fit_range = false;
    std::ostringstream msg;
    msg << "D/h = " << ratio << " lies outside the fitted range [" << kFitRatioMin << ", "
        << kFitRatioMax << "]";
    out.warning = msg.str();
  }
  return out;
}

FittedBound orthogonal_bound_fitted(double h, double D) {
  return evaluate_fitted(bound_coefficients(90.0), h, D);
}

FittedBound nonorthogonal_bound_fitted(double h, double D, double alpha_deg) {
  return evaluate_fitted(bound_coefficients(alpha_deg), h, D);
}

// --- multi-lane -------------------------------------------------------------

double multilane_factor(std::span<const double> thetas, int reference_index,
                        MultilaneForm form) {
  if (thetas.empty()) throw Error(ErrorCode::parameter, "lane angle list is empty");
  if (reference_index < 0 || static_cast<std::size_t>(reference_index) >= thetas.size())
    throw Error(ErrorCode::parameter, "reference lane index out of range");
  const double half_pi = 0.5 * specfun::kPi;
  for (double t : thetas) {
    if (!(std::abs(t) < half_pi))
      throw Error(ErrorCode::domain, "lane angles must satisfy |theta| < pi/2");
  }
  const double base = form == MultilaneForm::two_minus_theta_sq ? 2.0 : 1.0;
  const double t_ref = thetas[static_cast<std::size_t>(reference_index)];
  const double den = base - t_ref * t_ref;
  if (den == 0.0) throw Error(ErrorCode::domain, "reference lane angle makes the ratio singular");

  double factor = 1.0;
  for (std::size_t m = 0; m < thetas.size(); ++m) {
    if (static_cast<int>(m) == reference_index) continue;
    const double ratio = (base - thetas[m] * thetas[m]) / den;
    factor += ratio * ratio;
  }
  return factor;
}

double multilane_interference(const InterferenceBreakdown& base,
                              std::span<const double> thetas, int reference_index,
                              MultilaneForm form) {
  return base.total * multilane_factor(thetas, reference_index, form);
}

}  // namespace v2xi
