#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "v2xi/geometry.hpp"
#include "v2xi/specfun.hpp"
#include "v2xi/traffic.hpp"

namespace v2xi {

enum class ComputationMode {
  exact,
  finite_closed_form,
  bound_printed,
  bound_derived,
  bound_fitted,
};

const char* to_string(ComputationMode mode);
ComputationMode computation_mode_from_string(const std::string& name);

enum class DistanceModel { closed_form, coordinate };

// PRINTED evaluates the closed forms exactly as written (including their
// dimensional slips and the 4-digit Euler constant). DERIVED re-derives each
// component bound from the series identities.
enum class BoundMode { printed, derived };

enum class MultilaneForm {
  two_minus_theta_sq,  // ((2 - t_m^2) / (2 - t_ref^2))^2
  one_minus_theta_sq,  // legacy ((1 - t_m^2) / (1 - t_ref^2))^2
};

/// Interference surrogate (sum of inverse squared distances, ft^-2) split by arm.
struct InterferenceBreakdown {
  double north = 0.0;
  double south = 0.0;
  double east = 0.0;
  double west = 0.0;
  double total = 0.0;
  ComputationMode mode = ComputationMode::exact;
  // Upper bound on the terms a finite arm leaves out (0 when not applicable).
  double tail_bound = 0.0;

  double get(Arm arm) const;
};

InterferenceBreakdown make_breakdown(double north, double south, double east, double west,
                                     ComputationMode mode);

// --- exact summation --------------------------------------------------------

/// Sum of x^-2 over every non-receiver vehicle in the scenario. Throws
/// Error{singularity} when an interferer coincides with the receiver.
InterferenceBreakdown exact_interference(const PlacementScenario& scenario,
                                         DistanceModel distance_model);

/// Squared receiver-to-vehicle distance for one vehicle under either model.
double pair_distance_sq(Arm receiver_arm, double receiver_pos_ft, Arm arm, double pos_ft,
                        const IntersectionGeometry& geom, DistanceModel model);

// --- per-arm finite sums ----------------------------------------------------

/// Arm sums with uniform spacing h and n vehicles per arm (indexed N,S,E,W).
/// The receiver is vehicle 0 of the N arm. Cross arms use the closed-form
/// summand (jh)^2 + jhD(1 - cos a), which drops the D^2/2 (1 - cos a) constant.
InterferenceBreakdown per_arm_finite_sums(double h, const IntersectionGeometry& geom,
                                          const std::array<int, 4>& n_per_arm);

/// min(1e5, floor(arm_length / h) + 1).
int effective_vehicle_count(double h, double arm_length_ft);

/// Upper bound on sum_{j>=n} (jh)^-2 over four arms: 4 / ((n - 1) h^2).
double finite_sum_tail_bound(double h, int n);

// --- closed-form bounds -----------------------------------------------------

/// Infinite-arm upper bound on the interference for spacing h and geometry
/// (D, alpha). Throws Error{degenerate_geometry} when 1 - cos(alpha) == 0.
InterferenceBreakdown long_arm_bound(double h, const IntersectionGeometry& geom,
                                         BoundMode mode);

/// Sum of the four printed component bounds taken one by one (the west term
/// unsquared, the east term carrying its own stop-line constant).
InterferenceBreakdown component_bound_chain(double h, const IntersectionGeometry& geom);

/// Orthogonal (alpha = 90) bound. PRINTED is the simplified closed form:
/// 3/D^2 + [pi^2/6 + Psi1(D/h)]/h^2 + [2/(D^3 h) (0.5772 + h/D + Psi(D/h))]^2.
double orthogonal_bound(double h, double D, BoundMode mode);

struct LeadDenominator {
  double numerator = 1.0;
  double denominator = 1.0;  // third term prefactor = numerator / (denominator D^3 h)
};

/// Regression constants of one fitted closed form.
struct BoundCoefficients {
  double alpha_deg;
  double const_term_count;  // multiplier of 1/D^2
  double trig_power_coef;   // 1.3003
  double trig_power_exp;    // -1.067
  LeadDenominator lead_denominator_form;
  double log_coef;
  double inner_offset;
  double slope_h_over_D;
  bool log_scaled_by_cos;  // ln(D/h (1 - cos a)) rather than ln(D/h)
};

const std::vector<BoundCoefficients>& bound_coefficient_table();

/// Throws Error{unsupported_angle} listing the tabulated angles.
const BoundCoefficients& bound_coefficients(double alpha_deg);

inline constexpr double kFitRatioMin = 0.33;
inline constexpr double kFitRatioMax = 83.33;

struct FittedBound {
  double value = 0.0;
  bool in_fit_range = true;
  std::string warning;  // empty when in range
};

FittedBound evaluate_fitted(const BoundCoefficients& c, double h, double D);

/// Power/log surrogate of the orthogonal bound (alpha = 90 row).
FittedBound orthogonal_bound_fitted(double h, double D);

/// Fitted bound for a tabulated angle; alpha = 90 routes to the orthogonal form.
FittedBound nonorthogonal_bound_fitted(double h, double D, double alpha_deg);

// --- multi-lane -------------------------------------------------------------

/// 1 + sum_{m != ref} ratio_m^2.
double multilane_factor(std::span<const double> thetas, int reference_index,
                        MultilaneForm form = MultilaneForm::two_minus_theta_sq);

double multilane_interference(const InterferenceBreakdown& base,
                              std::span<const double> thetas, int reference_index,
                              MultilaneForm form = MultilaneForm::two_minus_theta_sq);

}  // namespace v2xi
