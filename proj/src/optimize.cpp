#include "v2xi/optimize.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "v2xi/error.hpp"
#include "v2xi/parallel.hpp"

namespace v2xi {
namespace {

struct Candidate {
  double value = 0.0;
  double h = 0.0;
  double D = 0.0;
  bool valid = false;
};

// true if a should replace b
bool better(const Candidate& a, const Candidate& b, OptimizationSense sense) {
  if (!a.valid) return false;
  if (!b.valid) return true;
  if (a.value != b.value)
    return sense == OptimizationSense::min ? a.value < b.value : a.value > b.value;
  if (a.h != b.h) return a.h < b.h;
  return a.D < b.D;
}

bool inside(const Interval& r, const Interval& box) {
  const bool lo_ok = r.lo > box.lo || (r.lo == box.lo && (r.lo_open || !box.lo_open));
  return lo_ok && r.hi <= box.hi;
}

}  // namespace

std::vector<double> grid_points(const Interval& range, double step) {
  if (!(step > 0.0)) throw Error(ErrorCode::parameter, "grid step must be > 0");
  std::vector<double> pts;
  const double start_index = range.lo_open ? 1.0 : 0.0;
  // Points are lo + i * step; a relative slack absorbs rounding at the upper end.
  const double slack = 1e-9 * std::max(1.0, std::abs(range.hi));
  for (long long i = static_cast<long long>(start_index);; ++i) {
    const double x = range.lo + static_cast<double>(i) * step;
    if (x > range.hi + slack) break;
    pts.push_back(std::min(x, range.hi));
  }
  return pts;
}

OptResult optimize_bound(const BoundFunction& bound, OptimizationSense sense,
                         const Interval& h_range, const Interval& D_range, double h_step,
                         double D_step, const OptimizeOptions& options) {
  if (sense == OptimizationSense::point)
    throw Error(ErrorCode::parameter, "optimisation sense must be min or max");
  if (!(h_step > 0.0) || !(D_step > 0.0))
    throw Error(ErrorCode::parameter, "grid steps must be > 0");
  if (!options.unsafe_box &&
      (!inside(h_range, kFeasibleSpacingBox) || !inside(D_range, kFeasibleDiameterBox))) {
    std::ostringstream msg;
    msg << "search box exceeds 1.5 < h <= 86, 28 <= D <= 125 (pass unsafe_box to override)";
    throw Error(ErrorCode::constraint, msg.str());
  }

  const auto hs = grid_points(h_range, h_step);
  const auto Ds = grid_points(D_range, D_step);
  if (hs.empty() || Ds.empty()) throw Error(ErrorCode::parameter, "search grid is empty");

  // one candidate per h row, reduced in row order
  auto rows = parallel_map<Candidate>(
      hs.size(),
      [&](std::size_t i) {
        Candidate best;
        for (double D : Ds) {
          Candidate c{bound(hs[i], D), hs[i], D, true};
          if (std::isnan(c.value)) continue;
          if (better(c, best, sense)) best = c;
        }
        return best;
      },
      options.threads);

  Candidate best;
  for (const auto& c : rows) {
    if (better(c, best, sense)) best = c;
  }
  if (!best.valid) throw Error(ErrorCode::domain, "bound evaluated to NaN on the whole grid");

  OptResult out;
  out.objective_value = best.value;
  out.arg_h_ft = best.h;
  out.arg_D_ft = best.D;
  out.objective_sense = sense;
  out.h_step = h_step;
  out.D_step = D_step;
  out.evaluations = static_cast<long long>(hs.size() * Ds.size());
  return out;
}

}  // namespace v2xi
