#include <cmath>

#include <json.hpp>

#include <string>

#include "v2xi/error.hpp"
#include "v2xi/experiments.hpp"
#include "v2xi/specfun.hpp"

namespace v2xi {
namespace {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};

// Ordinary least squares y = slope * x + intercept.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) throw Error(ErrorCode::fit, "degenerate fit grid");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double sse = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.slope * x[i] + f.intercept);
    sse += r * r;
  }
  f.r2 = 1.0 - sse / syy;
  return f;
}

double r_squared(const std::vector<double>& y, const std::vector<double>& pred) {
  double my = 0.0;
  for (double v : y) my += v;
  my /= static_cast<double>(y.size());
  double sse = 0.0, sst = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    sse += (y[i] - pred[i]) * (y[i] - pred[i]);
    sst += (y[i] - my) * (y[i] - my);
  }
  return 1.0 - sse / sst;
}

}  // namespace

std::vector<double> log_ratio_grid(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) throw Error(ErrorCode::fit, "invalid log grid");
  std::vector<double> g;
  g.reserve(static_cast<std::size_t>(n));
  const double a = std::log(lo), b = std::log(hi);
  for (int i = 0; i < n; ++i) g.push_back(std::exp(a + (b - a) * i / (n - 1)));
  g.front() = lo;
  g.back() = hi;
  return g;
}

FitReport refit_approximations(const std::vector<double>& ratio_grid) {
  if (ratio_grid.size() < 50) throw Error(ErrorCode::fit, "refit needs at least 50 grid points");
  for (double r : ratio_grid) {
    if (!(r > 0.0)) throw Error(ErrorCode::fit, "grid ratios must be positive");
  }

  std::vector<double> ln_r, ln_tri, tri, dig;
  for (double r : ratio_grid) {
    const double t = specfun::trigamma(r).value;
    ln_r.push_back(std::log(r));
    tri.push_back(t);
    ln_tri.push_back(std::log(t));
    dig.push_back(specfun::digamma(r).value);
  }

  FitReport rep;
  rep.points = static_cast<int>(ratio_grid.size());

  // power law fitted as a line in log-log space
  const LineFit pw = fit_line(ln_r, ln_tri);
  rep.power_coef = std::exp(pw.intercept);
  rep.power_exp = pw.slope;
  rep.power_r2_log = pw.r2;
  std::vector<double> pred;
  for (double r : ratio_grid) pred.push_back(rep.power_coef * std::pow(r, rep.power_exp));
  rep.power_r2_linear = r_squared(tri, pred);

  const LineFit lg = fit_line(ln_r, dig);
  rep.log_coef = lg.slope;
  rep.log_offset = lg.intercept;
  rep.log_r2 = lg.r2;

  for (const auto& row : bound_coefficient_table()) {
    if (!row.log_scaled_by_cos) continue;
    const double omc = 1.0 - std::cos(deg_to_rad(row.alpha_deg));
    std::vector<double> x, y;
    for (double r : ratio_grid) {
      x.push_back(std::log(r * omc));
      y.push_back(specfun::digamma(r * omc).value);
    }
    const LineFit f = fit_line(x, y);
    rep.angle_fits.push_back(
        {row.alpha_deg, f.slope, f.intercept, f.r2, row.log_coef, row.inner_offset});
  }
  return rep;
}

namespace {

// JSON numbers follow the 12-significant-digit output rule.
double r12(double v) { return std::stod(format_number(v)); }

}  // namespace

std::string fit_report_json(const FitReport& r) {
  nlohmann::ordered_json j;
  j["points"] = r.points;
  j["power_fit"] = {{"coef", r12(r.power_coef)},
                    {"exp", r12(r.power_exp)},
                    {"r2_log", r12(r.power_r2_log)},
                    {"r2_linear", r12(r.power_r2_linear)},
                    {"reference_coef", r12(kReferencePowerCoef)},
                    {"reference_exp", r12(kReferencePowerExp)},
                    {"coef_gap", r12(r.power_coef - kReferencePowerCoef)},
                    {"exp_gap", r12(r.power_exp - kReferencePowerExp)}};
  j["log_fit"] = {{"coef", r12(r.log_coef)},
                  {"offset", r12(r.log_offset)},
                  {"r2", r12(r.log_r2)},
                  {"reference_coef", r12(kReferenceLogCoef)},
                  {"reference_offset", r12(kReferenceLogOffset)},
                  {"coef_gap", r12(r.log_coef - kReferenceLogCoef)},
                  {"offset_gap", r12(r.log_offset - kReferenceLogOffset)}};
  auto angles = nlohmann::ordered_json::array();
  for (const auto& a : r.angle_fits) {
    angles.push_back({{"alpha_deg", r12(a.alpha_deg)},
                      {"coef", r12(a.log_coef)},
                      {"offset", r12(a.offset)},
                      {"r2", r12(a.r2)},
                      {"reference_coef", r12(a.reference_log_coef)},
                      {"reference_offset", r12(a.reference_offset)},
                      {"coef_gap", r12(a.log_coef - a.reference_log_coef)},
                      {"offset_gap", r12(a.offset - a.reference_offset)}});
  }
  j["angle_log_fits"] = std::move(angles);
  return j.dump(2);
}

}  // namespace v2xi
