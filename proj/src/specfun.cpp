#include "v2xi/specfun.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "v2xi/error.hpp"

namespace v2xi::specfun {
namespace {

constexpr double kShiftThreshold = 10.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_{2k} for k = 1..7.
constexpr double kBernoulli[] = {1.0 / 6.0,   -1.0 / 30.0,     1.0 / 42.0, -1.0 / 30.0,
                                 5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0};

void require_positive(double z, const char* fn) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    std::ostringstream msg;
    msg << fn << ": argument must be a finite positive real, got " << z;
    throw Error(ErrorCode::domain, msg.str());
  }
}

}  // namespace

SpecialValue digamma(double z) {
  require_positive(z, "digamma");

  // Shift terms are accumulated separately and added smallest-first.
  int shifts = 0;
  double x = z;
  while (x < kShiftThreshold) {
    x += 1.0;
    ++shifts;
  }
  double shift_sum = 0.0;
  for (int k = shifts - 1; k >= 0; --k) shift_sum += 1.0 / (z + k);

  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // sum_{k=1..6} B_{2k} / (2k x^{2k}), Horner in 1/x^2
  double series = 0.0;
  for (int k = 6; k >= 1; --k) series = (series + kBernoulli[k - 1] / (2.0 * k)) * inv2;
  const double asym = std::log(x) - 0.5 * inv - series;
  const double truncation = std::abs(kBernoulli[6] / 14.0) * std::pow(inv2, 7);

  SpecialValue out;
  out.value = asym - shift_sum;
  out.abs_error_estimate =
      truncation + 2.0 * kEps * (std::abs(asym) + shift_sum + std::abs(out.value));
  return out;
}

SpecialValue trigamma(double z) {
  require_positive(z, "trigamma");

  int shifts = 0;
  double x = z;
  while (x < kShiftThreshold) {
    x += 1.0;
    ++shifts;
  }
  double shift_sum = 0.0;
  for (int k = shifts - 1; k >= 0; --k) {
    const double t = z + k;
    shift_sum += 1.0 / (t * t);
  }

  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // 1/x + 1/(2x^2) + sum_{k=1..6} B_{2k} / x^{2k+1}
  double series = 0.0;
  for (int k = 6; k >= 1; --k) series = (series + kBernoulli[k - 1]) * inv2;
  series *= inv;
  const double asym = inv + 0.5 * inv2 + series;
  const double truncation = std::abs(kBernoulli[6]) * std::pow(inv2, 7) * inv;

  SpecialValue out;
  out.value = asym + shift_sum;
  out.abs_error_estimate = truncation + 2.0 * kEps * (asym + shift_sum + out.value);
  return out;
}

SpecialValue hurwitz_zeta2(double a) {
  require_positive(a, "hurwitz_zeta2");
  return trigamma(a);
}

}  // namespace v2xi::specfun
