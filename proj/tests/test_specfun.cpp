#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "v2xi/error.hpp"
#include "v2xi/specfun.hpp"

using namespace v2xi;
using namespace v2xi::specfun;

TEST_CASE("digamma at small integers") {
  CHECK(std::abs(digamma(1.0).value + kEulerGamma) <= 1e-14);
  CHECK(std::abs(digamma(2.0).value - (1.0 - kEulerGamma)) <= 1e-14);
}

TEST_CASE("digamma agrees with the series oracle") {
  for (double z : {0.05, 0.33, 0.5, 1.7, 9.99, 10.0, 37.5, 83.33, 1000.0}) {
    CAPTURE(z);
    const long double ref = oracle::digamma(z);
    CHECK(std::abs(digamma(z).value - static_cast<double>(ref)) <=
          1e-13 * std::max(1.0L, std::fabs(ref)));
  }
}

TEST_CASE("trigamma at small integers") {
  CHECK(std::abs(trigamma(1.0).value - kBasel) <= 1e-14);
  CHECK(std::abs(trigamma(2.0).value - (kBasel - 1.0)) <= 1e-14);
}

TEST_CASE("trigamma agrees with the partial-sum oracle") {
  for (double z : {0.05, 0.33, 1.0, 2.5, 10.0, 83.33, 1e4}) {
    CAPTURE(z);
    const long double ref = oracle::trigamma(z);
    CHECK(std::abs(trigamma(z).value - static_cast<double>(ref)) <= 1e-13 * std::fabs(ref));
  }
}

TEST_CASE("hurwitz zeta at order two") {
  CHECK(std::abs(hurwitz_zeta2(1.0).value - kBasel) <= 1e-14);
  CHECK(std::abs(hurwitz_zeta2(0.5).value - kPi * kPi / 2.0) <= 1e-13);
  CHECK(std::abs(hurwitz_zeta2(2.5).value - trigamma(2.5).value) <= 1e-13);
}

TEST_CASE("hurwitz zeta within the partial-sum tail bound") {
  constexpr long kTerms = 1000000;
  for (double a : {0.33, 1.0, 2.0, 10.0, 83.33}) {
    CAPTURE(a);
    long double partial = 0.0L;
    for (long k = kTerms - 1; k >= 0; --k) {
      const long double t = k + static_cast<long double>(a);
      partial += 1.0L / (t * t);
    }
    const long double tail_bound = 1.0L / (kTerms + a - 1.0L);
    const long double gap = hurwitz_zeta2(a).value - partial;
    CHECK(gap >= -1e-15L);
    CHECK(gap <= tail_bound);
  }
}

TEST_CASE("recurrence residuals on random arguments") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.05, 100.0);
  double worst_psi = 0.0, worst_psi1 = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double z = u(rng);
    worst_psi = std::max(worst_psi, std::abs(digamma(z + 1).value - digamma(z).value - 1.0 / z));
    worst_psi1 =
        std::max(worst_psi1, std::abs(trigamma(z + 1).value - trigamma(z).value + 1.0 / (z * z)));
  }
  CHECK(worst_psi <= 1e-12);
  CHECK(worst_psi1 <= 1e-12);
}

TEST_CASE("trigamma positive and strictly decreasing") {
  double prev = trigamma(0.01).value;
  for (int i = 1; i <= 10000; ++i) {
    const double z = 0.01 + i * 0.01;
    const double v = trigamma(z).value;
    REQUIRE(v > 0.0);
    REQUIRE(v < prev);
    prev = v;
  }
}

TEST_CASE("error estimates stay below 1e-12") {
  for (double z : {0.05, 0.1, 1.0, 9.5, 10.0, 123.0, 1e6}) {
    CHECK(digamma(z).abs_error_estimate <= 1e-12);
    CHECK(trigamma(z).abs_error_estimate <= 1e-12);
  }
}

TEST_CASE("non-positive arguments are domain errors") {
  for (double z : {0.0, -1.0, -0.5}) {
    CHECK_THROWS_AS(digamma(z), Error);
    CHECK_THROWS_AS(trigamma(z), Error);
    CHECK_THROWS_AS(hurwitz_zeta2(z), Error);
  }
  try {
    digamma(0.0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::domain);
  }
}

TEST_CASE("euler constant toggle") {
  CHECK(euler_gamma(EulerConstant::full) == kEulerGamma);
  CHECK(euler_gamma(EulerConstant::printed) == 0.5772);
}
