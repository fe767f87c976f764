#pragma once

namespace v2xi {

/// Homogeneous radio parameters shared by every vehicle.
struct RadioParams {
  double power = 1.0;          // P, normalised
  double pathloss_exp = 2.0;   // gamma, 2 <= gamma <= 6
  double noise = 0.0;          // N
  double beta = 0.15;          // SINR threshold

  void validate() const;
};

enum class OptimizationSense { min, max, point };

const char* to_string(OptimizationSense sense);

struct SinrResult {
  double sinr = 0.0;
  bool success = false;
  bool unbounded = false;  // N + P*I == 0
};

struct RangeResult {
  double r_b_ft = 0.0;
  double lambda_used = 0.0;
  double beta_used = 0.0;
  OptimizationSense optimization_sense = OptimizationSense::point;
  bool unbounded = false;
};

// SINR = P x^-gamma / (N + P * interference); success iff SINR >= beta.
SinrResult sinr_check(const RadioParams& radio, double tx_distance_ft, double interference);

// r_b = sqrt((beta + 1) / beta / lambda). lambda == 0 gives an unbounded result.
RangeResult transmission_range_bound(double beta, double lambda,
                                     OptimizationSense sense = OptimizationSense::point);

// Radius obtained by solving the SINR test directly with P = 1, gamma = 2, N = 0:
// r = (beta * lambda)^(-1/2).
double naive_sinr_radius(double beta, double lambda);

}  // namespace v2xi
