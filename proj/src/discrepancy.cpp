#include <cmath>
#include <ostream>

#include "v2xi/experiments.hpp"
#include "v2xi/range.hpp"

namespace v2xi {
namespace {

DiscrepancyRow pair(std::string a, std::string b, double h, double D, double alpha,
                    double va, double vb) {
  DiscrepancyRow r;
  r.formula_a = std::move(a);
  r.formula_b = std::move(b);
  r.h = h;
  r.D = D;
  r.alpha_deg = alpha;
  r.value_a = va;
  r.value_b = vb;
  r.rel_gap = (va - vb) / std::abs(vb);
  return r;
}

IntersectionGeometry geometry(double D, double alpha) {
  IntersectionGeometry g;
  g.diameter_ft = D;
  g.alpha_deg = alpha;
  return g;
}

}  // namespace

std::vector<DiscrepancyRow> discrepancy_report(double h, double D, double beta) {
  std::vector<DiscrepancyRow> rows;
  const auto g90 = geometry(D, 90.0);
  const auto g60 = geometry(D, 60.0);

  // orthogonal simplification: printed vs re-derived, and vs its parent form
  const double orthogonal_printed = orthogonal_bound(h, D, BoundMode::printed);
  const double orthogonal_derived = orthogonal_bound(h, D, BoundMode::derived);
  rows.push_back(pair("orthogonal_printed", "orthogonal_derived", h, D, 90, orthogonal_printed, orthogonal_derived));
  rows.push_back(pair("general_printed_alpha90", "orthogonal_printed", h, D, 90,
                      long_arm_bound(h, g90, BoundMode::printed).total, orthogonal_printed));
  rows.push_back(pair("general_printed", "component_bound_sum", h, D, 90,
                      long_arm_bound(h, g90, BoundMode::printed).total,
                      component_bound_chain(h, g90).total));
  rows.push_back(pair("orthogonal_printed_const_3_over_D2", "derived_const_5_over_D2", h, D, 90, 3.0 / (D * D),
                      5.0 / (D * D)));

  // stop-line (j = 0) constants of the cross arms
  for (double alpha : {90.0, 60.0}) {
    const double omc = 1.0 - std::cos(deg_to_rad(alpha));
    const double eq9 = 1.0 / (D * D * 2.0 * omc);
    const double eq14 = 1.0 / (0.25 * D * D * 2.0 * omc);
    const double exact = 1.0 / cross_arm_distance_sq(0, h, geometry(D, alpha));
    // The west sum has no standalone j = 0 term; its constant multiplies the sum.
    rows.push_back(pair("west_sum_j0_term", "east_sum_j0_term", h, D, alpha, 0.0, eq9));
    rows.push_back(pair("east_sum_j0_term", "east_bound_j0_term", h, D, alpha, eq9, eq14));
    rows.push_back(pair("east_bound_j0_term", "exact_cross_arm_j0_term", h, D, alpha, eq14, exact));
  }

  // south arm: printed sum vs the sum over its own distance formula
  {
    const int n = effective_vehicle_count(h, g90.arm_length_ft);
    double printed = 1.0 / (D * D);
    for (int j = n - 1; j >= 1; --j) printed += 1.0 / ((D + j * h) * (D + j * h));
    const double eq4 = per_arm_finite_sums(h, g90, {1, n, 0, 0}).south;
    rows.push_back(pair("south_sum_printed", "south_sum_opposing_distances", h, D, 90, printed, eq4));
  }

  // opposing-arm distance: printed lateral offset vs straight across
  {
    const double printed = opposing_arm_distance_sq(1, h, g90);
    const double coord = coords::distance_sq(coords::vehicle_location(Arm::N, 0.0, g90),
                                             coords::vehicle_location(Arm::S, h, g90));
    rows.push_back(pair("closed_form_opposing_distance_sq_j1", "coordinate_opposing_distance_sq_j1", h, D,
                        90, printed, coord));
  }

  // fitted surrogate vs the form it replaces
  rows.push_back(pair("orthogonal_fitted", "orthogonal_printed", h, D, 90,
                      orthogonal_bound_fitted(h, D).value, orthogonal_printed));

  // range: bound factor (beta + 1)/beta vs solving the SINR test directly
  rows.push_back(pair("range_bound_r_b", "naive_sinr_radius", h, D, 90,
                      transmission_range_bound(beta, orthogonal_printed).r_b_ft,
                      naive_sinr_radius(beta, orthogonal_printed)));

  // angle ordering, alpha = 60 vs 90; rel_gap < 0 means less interference at 60
  {
    const int n = effective_vehicle_count(h, g90.arm_length_ft);
    rows.push_back(pair("general_printed_alpha60", "general_printed_alpha90", h, D, 60,
                        long_arm_bound(h, g60, BoundMode::printed).total,
                        long_arm_bound(h, g90, BoundMode::printed).total));
    rows.push_back(pair("derived_bound_alpha60", "derived_bound_alpha90", h, D, 60,
                        long_arm_bound(h, g60, BoundMode::derived).total,
                        long_arm_bound(h, g90, BoundMode::derived).total));
    rows.push_back(pair("fitted_alpha60", "fitted_alpha90", h, D, 60,
                        nonorthogonal_bound_fitted(h, D, 60.0).value,
                        orthogonal_bound_fitted(h, D).value));
    rows.push_back(pair("exact_coordinate_alpha60", "exact_coordinate_alpha90", h, D, 60,
                        exact_interference(uniform_scenario(g60, h, {n, n, n, n}),
                                           DistanceModel::coordinate)
                            .total,
                        exact_interference(uniform_scenario(g90, h, {n, n, n, n}),
                                           DistanceModel::coordinate)
                            .total));
  }

  // multi-lane ratio: (1 - theta^2) form vs (2 - theta^2) form, four 12 ft lanes
  {
    auto g = g90;
    g.lanes_per_arm = 4;
    const auto thetas = lane_horizontal_angles(g, D);
    const int ref = default_reference_lane(4);
    rows.push_back(pair("multilane_one_minus_theta_sq_factor", "multilane_two_minus_theta_sq_factor", h, D,
                        90, multilane_factor(thetas, ref, MultilaneForm::one_minus_theta_sq),
                        multilane_factor(thetas, ref, MultilaneForm::two_minus_theta_sq)));
  }
  return rows;
}

void write_discrepancy_csv(std::ostream& os, const std::vector<DiscrepancyRow>& rows) {
  os << kDiscrepancyCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.formula_a << ',' << r.formula_b << ',' << format_number(r.h) << ','
       << format_number(r.D) << ',' << format_number(r.alpha_deg) << ','
       << format_number(r.value_a) << ',' << format_number(r.value_b) << ','
       << format_number(r.rel_gap) << '\n';
  }
}

}  // namespace v2xi
