#pragma once

#include <functional>

#include "v2xi/range.hpp"

namespace v2xi {

/// Closed interval [lo, hi], or (lo, hi] when lo_open is set.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_open = false;
};

/// Feasible box of the mathematical program: 1.5 < h <= 86, 28 <= D <= 125.
inline constexpr Interval kFeasibleSpacingBox{1.5, 86.0, true};
inline constexpr Interval kFeasibleDiameterBox{28.0, 125.0, false};

inline constexpr double kDefaultSpacingStep = 0.5;
inline constexpr double kDefaultDiameterStep = 1.0;

using BoundFunction = std::function<double(double h, double D)>;

struct OptResult {
  double objective_value = 0.0;
  double arg_h_ft = 0.0;
  double arg_D_ft = 0.0;
  OptimizationSense objective_sense = OptimizationSense::min;
  double h_step = 0.0;
  double D_step = 0.0;
  long long evaluations = 0;
};

struct OptimizeOptions {
  bool unsafe_box = false;  // allow ranges outside the feasible box
  unsigned threads = 1;     // 0 = hardware concurrency
};

/// Exhaustive grid search. An open lower end starts at lo + step. Ties go to
/// the lexicographically smaller (h, D). `sense` must be min or max.
OptResult optimize_bound(const BoundFunction& bound, OptimizationSense sense,
                         const Interval& h_range, const Interval& D_range, double h_step,
                         double D_step, const OptimizeOptions& options = {});

/// Grid coordinates generated for a range (exposed for tests and reports).
std::vector<double> grid_points(const Interval& range, double step);

}  // namespace v2xi
