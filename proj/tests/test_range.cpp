#include <doctest.h>

#include <cmath>
#include <random>

#include "v2xi/error.hpp"
#include "v2xi/interference.hpp"
#include "v2xi/optimize.hpp"
#include "v2xi/range.hpp"
#include "v2xi/traffic.hpp"

using namespace v2xi;

TEST_CASE("range bound cancellation") {
  const double beta = 0.15;
  CHECK(transmission_range_bound(beta, (beta + 1) / beta).r_b_ft == 1.0);
}

TEST_CASE("range bound scaling and ordering") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> ub(0.01, 10.0), ul(1e-6, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const double beta = ub(rng), lambda = ul(rng);
    const double r = transmission_range_bound(beta, lambda).r_b_ft;
    CHECK(std::abs(transmission_range_bound(beta, 4 * lambda).r_b_ft - r / 2) <= 1e-12 * r);
    CHECK(transmission_range_bound(beta * 1.001, lambda).r_b_ft < r);
    CHECK(transmission_range_bound(beta, lambda * 1.001).r_b_ft < r);
    CHECK(std::abs(r / naive_sinr_radius(beta, lambda) - std::sqrt(1 + beta)) <= 1e-12 * std::sqrt(1 + beta));
  }
}

TEST_CASE("zero interference is unbounded") {
  const auto r = transmission_range_bound(0.15, 0.0);
  CHECK(r.unbounded);
  CHECK(std::isinf(r.r_b_ft));
  CHECK_THROWS_AS(transmission_range_bound(0.0, 1.0), Error);
  CHECK_THROWS_AS(transmission_range_bound(0.15, -1.0), Error);
}

TEST_CASE("sinr check") {
  RadioParams radio;
  // x = 1, P = 1: SINR = 1 / I, so I = 1 / beta sits exactly on the threshold
  const auto edge = sinr_check(radio, 1.0, 1.0 / radio.beta);
  CHECK(edge.sinr == doctest::Approx(radio.beta).epsilon(1e-15));
  CHECK(sinr_check(radio, 1.0, 4.0).success);
  CHECK(sinr_check(radio, 1.0, 1.0 / 0.125).success == (0.125 >= radio.beta));
  RadioParams boundary;
  boundary.beta = 0.25;
  CHECK(sinr_check(boundary, 1.0, 4.0).success);  // 1/4 == beta, inclusive

  double prev = INFINITY;
  for (double n : {0.0, 1e-6, 1e-4, 1e-2}) {
    radio.noise = n;
    const double s = sinr_check(radio, 100.0, 1e-3).sinr;
    CHECK(s < prev);
    prev = s;
  }
  radio.noise = 0.0;
  const auto free = sinr_check(radio, 100.0, 0.0);
  CHECK(free.unbounded);
  CHECK(free.success);

  IntersectionGeometry g;
  const double lambda = exact_interference(uniform_scenario(g, 50, {17, 17, 8, 8}), DistanceModel::coordinate).total;
  const auto s = sinr_check(radio, 100.0, lambda);
  CHECK(s.sinr == doctest::Approx(1e-4 / lambda).epsilon(1e-14));
  CHECK(s.success == (s.sinr >= 0.15));
}

TEST_CASE("radio validation") {
  RadioParams r;
  r.pathloss_exp = 7;
  CHECK_THROWS_AS(r.validate(), Error);
  r.pathloss_exp = 2;
  r.noise = -1;
  CHECK_THROWS_AS(r.validate(), Error);
}

TEST_CASE("range of the optimised interference") {
  const BoundFunction f = [](double h, double D) { return orthogonal_bound_fitted(h, D).value; };
  const auto opt = optimize_bound(f, OptimizationSense::min, kFeasibleSpacingBox, kFeasibleDiameterBox, 0.5, 1.0);
  const auto r = transmission_range_bound(0.15, opt.objective_value, OptimizationSense::min);
  CHECK(r.r_b_ft == doctest::Approx(std::sqrt((1.15 / 0.15) / f(86, 125))).epsilon(1e-14));
  CHECK(r.optimization_sense == OptimizationSense::min);
}
