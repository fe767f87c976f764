#include "v2xi/range.hpp"

#include <cmath>
#include <limits>

#include "v2xi/error.hpp"

namespace v2xi {

void RadioParams::validate() const {
  if (!(power > 0.0)) throw Error(ErrorCode::parameter, "power must be > 0");
  if (!(pathloss_exp >= 2.0 && pathloss_exp <= 6.0))
    throw Error(ErrorCode::parameter, "path-loss exponent must lie in [2, 6]");
  if (!(noise >= 0.0)) throw Error(ErrorCode::parameter, "noise must be >= 0");
  if (!(beta > 0.0)) throw Error(ErrorCode::parameter, "beta must be > 0");
}

const char* to_string(OptimizationSense sense) {
  switch (sense) {
    case OptimizationSense::min: return "min";
    case OptimizationSense::max: return "max";
    case OptimizationSense::point: return "point";
  }
  return "?";
}

SinrResult sinr_check(const RadioParams& radio, double tx_distance_ft, double interference) {
  radio.validate();
  if (!(tx_distance_ft > 0.0)) throw Error(ErrorCode::domain, "transmission distance must be > 0");
  if (!(interference >= 0.0)) throw Error(ErrorCode::domain, "interference must be >= 0");

  const double signal = radio.power * std::pow(tx_distance_ft, -radio.pathloss_exp);
  const double denom = radio.noise + radio.power * interference;
  SinrResult out;
  if (denom == 0.0) {
    out.sinr = std::numeric_limits<double>::infinity();
    out.success = true;
    out.unbounded = true;
    return out;
  }
  out.sinr = signal / denom;
  out.success = out.sinr >= radio.beta;
  return out;
}

RangeResult transmission_range_bound(double beta, double lambda, OptimizationSense sense) {
  if (!(beta > 0.0)) throw Error(ErrorCode::domain, "beta must be > 0");
  if (!(lambda >= 0.0)) throw Error(ErrorCode::domain, "lambda must be >= 0");
  RangeResult out;
  out.lambda_used = lambda;
  out.beta_used = beta;
  out.optimization_sense = sense;
  if (lambda == 0.0) {
    out.r_b_ft = std::numeric_limits<double>::infinity();
    out.unbounded = true;
    return out;
  }
  out.r_b_ft = std::sqrt(((beta + 1.0) / beta) / lambda);
  return out;
}

double naive_sinr_radius(double beta, double lambda) {
  if (!(beta > 0.0) || !(lambda > 0.0))
    throw Error(ErrorCode::domain, "beta and lambda must be > 0");
  return 1.0 / std::sqrt(beta * lambda);
}

}  // namespace v2xi
