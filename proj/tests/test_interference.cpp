#include <doctest.h>

#include <cmath>
#include <random>
#include <tuple>

#include "oracles.hpp"
#include "v2xi/error.hpp"
#include "v2xi/interference.hpp"
#include "v2xi/traffic.hpp"

using namespace v2xi;
using oracle::ld;

namespace {

IntersectionGeometry geom(double D, double alpha) {
  IntersectionGeometry g;
  g.diameter_ft = D;
  g.alpha_deg = alpha;
  return g;
}

ld omc(ld alpha) { return 1.0L - std::cos(alpha * oracle::kPi / 180.0L); }

// closed forms evaluated with the series oracles
ld derived_oracle(ld h, ld D, ld alpha) {
  const ld o = omc(alpha);
  const ld c = D * o / h;
  const ld cross = 2.0L / (D * D * o) + (oracle::digamma(c) + 1.0L / c + oracle::kGamma) / (h * D * o);
  return oracle::kPi * oracle::kPi / (6 * h * h) + 1.0L / (D * D) + oracle::trigamma(D / h) / (h * h) +
         2.0L * cross;
}

ld general_printed_oracle(ld h, ld D, ld alpha) {
  const ld o = omc(alpha);
  const ld c = D / h * o;
  const ld sq = (oracle::digamma(c) + 1.0L / c + 0.5772L) / (0.5L * D * D * D * h * o * o);
  return oracle::kPi * oracle::kPi / (6 * h * h) + 1.0L / (D * D) + 1.0L / (D * D / 2 * o) +
         oracle::trigamma(D / h) / (h * h) + sq * sq;
}

ld orthogonal_printed_oracle(ld h, ld D) {
  const ld t = 2.0L / (D * D * D * h) * (0.5772L + h / D + oracle::digamma(D / h));
  return 3.0L / (D * D) + (oracle::kPi * oracle::kPi / 6 + oracle::trigamma(D / h)) / (h * h) + t * t;
}

double specfun_basel() { return static_cast<double>(oracle::kPi * oracle::kPi / 6.0L); }

}  // namespace

TEST_CASE("exact interference trivial cases") {
  auto sc = uniform_scenario(geom(40, 90), 50, {1, 0, 0, 0});
  CHECK(exact_interference(sc, DistanceModel::closed_form).total == 0.0);
  sc = uniform_scenario(geom(40, 90), 10, {2, 0, 0, 0});
  CHECK(exact_interference(sc, DistanceModel::closed_form).total == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(exact_interference(sc, DistanceModel::coordinate).total == doctest::Approx(0.01).epsilon(1e-15));
}

TEST_CASE("exact interference matches brute force (50 per arm)") {
  const auto sc = uniform_scenario(geom(40, 90), 50, {50, 50, 50, 50});
  std::array<std::vector<double>, 4> pos;
  for (int a = 0; a < 4; ++a) pos[static_cast<std::size_t>(a)] = sc.arms[static_cast<std::size_t>(a)].positions_ft;
  for (bool closed_form : {true, false}) {
    const auto ref = oracle::brute_force(pos, 0, 0, 40, 90, closed_form);
    const auto got = exact_interference(sc, closed_form ? DistanceModel::closed_form : DistanceModel::coordinate);
    for (Arm a : kAllArms) CHECK(oracle::rel(got.get(a), ref[static_cast<std::size_t>(a)]) <= 1e-10);
  }
}

TEST_CASE("breakdown partition holds in every mode") {
  const auto g = geom(60, 75);
  const auto sc = stochastic_scenario(g, 40, 1.5, {80, 60, 40, 20}, 17);
  std::vector<InterferenceBreakdown> all{
      exact_interference(sc, DistanceModel::closed_form), exact_interference(sc, DistanceModel::coordinate),
      per_arm_finite_sums(40, g, {80, 60, 40, 20}), long_arm_bound(40, g, BoundMode::printed),
      long_arm_bound(40, g, BoundMode::derived), component_bound_chain(40, g)};
  for (const auto& b : all) {
    CHECK(std::abs(b.total - (b.north + b.south + b.east + b.west)) <= 1e-12 * b.total);
    CHECK(b.north >= 0.0);
    CHECK(b.south >= 0.0);
    CHECK(b.east >= 0.0);
    CHECK(b.west >= 0.0);
  }
}

TEST_CASE("singular receiver coincidence is reported") {
  auto sc = uniform_scenario(geom(40, 90), 50, {2, 0, 0, 0});
  sc.arm(Arm::N).positions_ft[1] = 0.0;
  try {
    exact_interference(sc, DistanceModel::closed_form);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::singularity);
  }
}

TEST_CASE("finite sums trivial cases") {
  CHECK(per_arm_finite_sums(50, geom(40, 90), {1, 0, 0, 0}).total == 0.0);
  CHECK(per_arm_finite_sums(50, geom(40, 90), {1, 1, 0, 0}).south == doctest::Approx(1.0 / 3200).epsilon(1e-15));
  try {
    per_arm_finite_sums(50, geom(40, 90), {0, 5, 5, 5});
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::receiver_missing);
  }
}

TEST_CASE("finite sums match the term-by-term oracle") {
  for (double alpha : {60.0, 90.0}) {
    const auto got = per_arm_finite_sums(50, geom(40, alpha), {200, 200, 200, 200});
    const auto ref = oracle::finite_sums(50, 40, alpha, {200, 200, 200, 200});
    for (Arm a : kAllArms) CHECK(oracle::rel(got.get(a), ref[static_cast<std::size_t>(a)]) <= 1e-13);
  }
}

TEST_CASE("finite sums equal exact closed-form distances on north and south") {
  const auto g = geom(40, 90);
  const auto fs = per_arm_finite_sums(30, g, {120, 120, 120, 120});
  const auto ex = exact_interference(uniform_scenario(g, 30, {120, 120, 120, 120}), DistanceModel::closed_form);
  CHECK(oracle::rel(fs.north, ex.north) <= 1e-12);
  CHECK(oracle::rel(fs.south, ex.south) <= 1e-12);
}

TEST_CASE("finite sums converge within the tail bound") {
  for (double h : {5.0, 30.0, 86.0}) {
    const auto g = geom(60, 75);
    const double small = per_arm_finite_sums(h, g, {1000, 1000, 1000, 1000}).total;
    const double large = per_arm_finite_sums(h, g, {100000, 100000, 100000, 100000}).total;
    CHECK(large >= small);
    CHECK(large - small <= finite_sum_tail_bound(h, 1000));
    CHECK(finite_sum_tail_bound(h, 1000) <= 4.0 / (999.0 * h * h) * (1 + 1e-15));
  }
}

TEST_CASE("effective vehicle count") {
  CHECK(effective_vehicle_count(50, 2000) == 41);
  CHECK(effective_vehicle_count(0.001, 2000) == 100000);
}

TEST_CASE("derived bound against the special-function oracle") {
  for (auto [h, D, a] : {std::tuple{50.0, 40.0, 90.0}, {30.0, 60.0, 60.0}, {5.0, 125.0, 75.0}}) {
    CAPTURE(h);
    const auto b = long_arm_bound(h, geom(D, a), BoundMode::derived);
    CHECK(oracle::rel(b.total, derived_oracle(h, D, a)) <= 1e-12);
    CHECK(b.east == b.west);
    CHECK(b.total >= specfun_basel() / (h * h));
  }
}

TEST_CASE("derived bound at right angles carries 5/D^2") {
  const double h = 30, D = 60;
  const ld c = D / h;
  const ld ref = 5.0L / (D * D) + (oracle::kPi * oracle::kPi / 6 + oracle::trigamma(c)) / (h * h) +
                 2.0L * (oracle::digamma(c) + 1.0L / c + oracle::kGamma) / (h * D);
  CHECK(oracle::rel(orthogonal_bound(h, D, BoundMode::derived), ref) <= 1e-12);
}

TEST_CASE("printed bounds as transcribed") {
  for (auto [h, D, a] : {std::tuple{30.0, 60.0, 90.0}, {50.0, 40.0, 60.0}, {10.0, 100.0, 80.0}}) {
    CHECK(oracle::rel(long_arm_bound(h, geom(D, a), BoundMode::printed).total,
                      general_printed_oracle(h, D, a)) <= 1e-12);
  }
  CHECK(oracle::rel(orthogonal_bound(30, 60, BoundMode::printed), orthogonal_printed_oracle(30, 60)) <= 1e-12);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> uh(1.5, 200), uD(5, 200);
  for (int i = 0; i < 500; ++i) {
    const double h = uh(rng);
    CHECK(orthogonal_bound(h, uD(rng), BoundMode::printed) >= specfun_basel() / (h * h));
  }
}

TEST_CASE("dominance of the derived bound") {
  for (double h : {5.0, 50.0})
    for (double D : {28.0, 125.0})
      for (double a : {60.0, 90.0}) {
        const auto g = geom(D, a);
        const auto b = long_arm_bound(h, g, BoundMode::derived);
        const auto fs = per_arm_finite_sums(h, g, {100000, 100000, 100000, 100000});
        CHECK(b.total >= fs.total);
        for (Arm arm : kAllArms) CHECK(b.get(arm) >= fs.get(arm));
      }
}

TEST_CASE("alpha zero is degenerate") {
  try {
    long_arm_bound(30, geom(40, 1e-9), BoundMode::derived);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK((e.code() == ErrorCode::degenerate_geometry || e.code() == ErrorCode::parameter));
  }
}

TEST_CASE("fitted bounds") {
  const auto& table = bound_coefficient_table();
  REQUIRE(table.size() == 9);
  std::vector<double> angles;
  for (const auto& r : table) angles.push_back(r.alpha_deg);
  CHECK(angles == std::vector<double>{60, 65, 70, 75, 78, 80, 85, 88, 90});

  // D/h = 1: the power term is exactly 1.3003 / h^2
  {
    const double h = 40, D = 40;
    const auto& c = bound_coefficients(90);
    const double inner = 0.2658 + 1.0;
    const double expect = 3.0 / (D * D) + (specfun_basel() + 1.3003) / (h * h) +
                          2.0 / (D * D * D * h) * inner * inner;
    CHECK(evaluate_fitted(c, h, D).value == doctest::Approx(expect).epsilon(1e-14));
    CHECK(orthogonal_bound_fitted(h, D).value == evaluate_fitted(c, h, D).value);
  }
  // alpha = 60 with (D/h)(1 - cos a) = 1: the log vanishes
  {
    const double h = 30, D = 60;  // 2 * 0.5 = 1
    const double inner = 2 * h / D - 0.024;
    const double expect = 5.0 / (D * D) + (specfun_basel() + 1.3003 * std::pow(D / h, -1.067)) / (h * h) +
                          8.0 / (D * D * D * h) * inner * inner;
    CHECK(nonorthogonal_bound_fitted(h, D, 60).value == doctest::Approx(expect).epsilon(1e-12));
  }
  // the 75 degree row as printed
  {
    const ld h = 30, D = 60;
    const ld inner = 0.7412L * h / D + 1.0617L * std::log(D / h * omc(75)) + 0.0896L;
    const ld expect = (1.0L + 1.0L / 0.3705L) / (D * D) +
                      (oracle::kPi * oracle::kPi / 6 + 1.3003L * std::pow(D / h, -1.067L)) / (h * h) +
                      inner * inner / (0.02746L * D * D * D * h);
    CHECK(oracle::rel(nonorthogonal_bound_fitted(30, 60, 75).value, expect) <= 1e-12);
  }
  CHECK(orthogonal_bound_fitted(86, 125).in_fit_range);
  CHECK_FALSE(orthogonal_bound_fitted(100, 20).in_fit_range);
  try {
    nonorthogonal_bound_fitted(30, 60, 59);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unsupported_angle);
  }
}

TEST_CASE("exact coordinate interference is monotone") {
  const std::array<int, 4> n{60, 60, 60, 60};
  double prev = 1e300;
  for (double h = 15; h <= 175; h += 20) {
    const double t = exact_interference(uniform_scenario(geom(40, 90), h, n), DistanceModel::coordinate).total;
    CHECK(t < prev);
    prev = t;
  }
  prev = 1e300;
  for (double D = 30; D <= 120; D += 15) {
    const double t = exact_interference(uniform_scenario(geom(D, 90), 40, n), DistanceModel::coordinate).total;
    CHECK(t < prev);
    prev = t;
  }
  prev = 1e300;
  for (double a = 60; a <= 120; a += 5) {
    const double t = exact_interference(uniform_scenario(geom(40, a), 40, n), DistanceModel::coordinate).total;
    CHECK(t <= prev);
    prev = t;
  }
}

TEST_CASE("multilane scaling") {
  const double single[] = {0.3};
  CHECK(multilane_factor(single, 0) == 1.0);
  const double equal[] = {0.2, 0.2, 0.2, 0.2};
  CHECK(multilane_factor(equal, 2) == 4.0);
  const auto base = long_arm_bound(30, geom(40, 90), BoundMode::derived);
  CHECK(multilane_interference(base, equal, 2) == 4.0 * base.total);

  IntersectionGeometry g = geom(40, 90);
  g.lanes_per_arm = 4;
  const auto thetas = lane_horizontal_angles(g, 40.0);
  const int ref = default_reference_lane(4);
  ld expect = 1.0L;
  for (int m = 0; m < 4; ++m) {
    if (m == ref) continue;
    const ld t = std::atan2(static_cast<ld>((m - ref) * 12), 40.0L);
    const ld r = (2.0L - t * t) / 2.0L;  // reference lane sits at theta = 0
    expect += r * r;
  }
  CHECK(oracle::rel(multilane_factor(thetas, ref), expect) <= 1e-14);
  const ld legacy = multilane_factor(thetas, ref, MultilaneForm::one_minus_theta_sq);
  CHECK(legacy < expect);

  const double bad[] = {2.0, 0.0};
  CHECK_THROWS_AS(multilane_factor(bad, 1), Error);
  CHECK_THROWS_AS(multilane_factor(std::span<const double>{}, 0), Error);
}
