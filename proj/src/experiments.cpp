#include "v2xi/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "v2xi/error.hpp"
#include "v2xi/parallel.hpp"
#include "v2xi/range.hpp"

namespace v2xi {

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

const char* to_string(SweptParam p) {
  switch (p) {
    case SweptParam::h: return "h";
    case SweptParam::D: return "D";
    case SweptParam::alpha: return "alpha";
  }
  return "?";
}

SweptParam swept_param_from_string(const std::string& name) {
  if (name == "h") return SweptParam::h;
  if (name == "D") return SweptParam::D;
  if (name == "alpha") return SweptParam::alpha;
  throw Error(ErrorCode::config, "unknown sweep parameter '" + name + "' (expected h|D|alpha)");
}

void SweepSpec::validate() const {
  if (values.empty()) throw Error(ErrorCode::parameter, "sweep values are empty");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] > values[i - 1]))
      throw Error(ErrorCode::parameter, "sweep values must be strictly increasing");
  }
  if (modes.empty()) throw Error(ErrorCode::parameter, "sweep needs at least one mode");
  const bool fitted =
      std::find(modes.begin(), modes.end(), ComputationMode::bound_fitted) != modes.end();
  if (fitted) {
    if (swept == SweptParam::alpha) {
      for (double a : values) bound_coefficients(a);
    } else {
      bound_coefficients(fixed_alpha);
    }
  }
}

double interference_for_mode(ComputationMode mode, double h, const IntersectionGeometry& geom,
                             DistanceModel distance_model, std::optional<int> vehicles_per_arm) {
  const int n = vehicles_per_arm.value_or(effective_vehicle_count(h, geom.arm_length_ft));
  switch (mode) {
    case ComputationMode::exact:
      return exact_interference(uniform_scenario(geom, h, {n, n, n, n}), distance_model).total;
    case ComputationMode::finite_closed_form:
      return per_arm_finite_sums(h, geom, {n, n, n, n}).total;
    case ComputationMode::bound_printed:
      if (geom.alpha_deg == 90.0) return orthogonal_bound(h, geom.diameter_ft, BoundMode::printed);
      return long_arm_bound(h, geom, BoundMode::printed).total;
    case ComputationMode::bound_derived:
      return long_arm_bound(h, geom, BoundMode::derived).total;
    case ComputationMode::bound_fitted:
      return nonorthogonal_bound_fitted(h, geom.diameter_ft, geom.alpha_deg).value;
  }
  return 0.0;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  spec.validate();
  const std::size_t n_modes = spec.modes.size();
  auto rows = parallel_map<SweepRow>(
      spec.values.size() * n_modes,
      [&](std::size_t idx) {
        const double value = spec.values[idx / n_modes];
        const ComputationMode mode = spec.modes[idx % n_modes];
        IntersectionGeometry geom;
        geom.diameter_ft = spec.fixed_D;
        geom.alpha_deg = spec.fixed_alpha;
        geom.arm_length_ft = spec.arm_length_ft;
        double h = spec.fixed_h;
        switch (spec.swept) {
          case SweptParam::h: h = value; break;
          case SweptParam::D: geom.diameter_ft = value; break;
          case SweptParam::alpha: geom.alpha_deg = value; break;
        }
        SweepRow row;
        row.param = spec.swept;
        row.value = value;
        row.mode = mode;
        row.lambda = interference_for_mode(mode, h, geom, spec.distance_model, spec.vehicles_per_arm);
        row.r_b_ft = transmission_range_bound(spec.beta, row.lambda).r_b_ft;
        row.los = classify_los(h);
        return row;
      },
      spec.threads);

  if (!spec.output_path.empty()) {
    std::ofstream out(spec.output_path, std::ios::binary);
    if (!out) throw Error(ErrorCode::config, "cannot open " + spec.output_path + " for writing");
    write_sweep_csv(out, rows);
  }
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    os << to_string(r.param) << ',' << format_number(r.value) << ',' << to_string(r.mode) << ','
       << format_number(r.lambda) << ',' << format_number(r.r_b_ft) << ',' << to_string(r.los)
       << '\n';
  }
}

namespace {

std::vector<double> arithmetic(double lo, double hi, double step) {
  std::vector<double> v;
  for (int i = 0;; ++i) {
    const double x = lo + i * step;
    if (x > hi + 1e-9) break;
    v.push_back(x);
  }
  return v;
}

}  // namespace

std::vector<double> default_h_sweep() { return arithmetic(15.0, 175.0, 5.0); }
std::vector<double> default_D_sweep() { return arithmetic(30.0, 120.0, 10.0); }
std::vector<double> default_alpha_sweep() { return {60, 65, 70, 75, 78, 80, 85, 88, 90}; }

// --- MAPE -------------------------------------------------------------------

MapeReport mape(std::vector<double> truth, std::vector<double> model) {
  if (truth.empty() || truth.size() != model.size())
    throw Error(ErrorCode::parameter, "MAPE needs two non-empty series of equal length");
  double acc = 0.0;
  for (std::size_t t = 0; t < truth.size(); ++t) {
    if (truth[t] == 0.0) {
      std::ostringstream msg;
      msg << "truth value at t=" << t << " is zero; MAPE is undefined";
      throw Error(ErrorCode::undefined_mape, msg.str());
    }
    if (!(truth[t] > 0.0)) throw Error(ErrorCode::parameter, "truth values must be positive");
    acc += std::abs(model[t] - truth[t]) / truth[t];
  }
  MapeReport r;
  r.timestep_count = static_cast<int>(truth.size());
  r.mape_percent = acc / static_cast<double>(truth.size()) * 100.0;
  r.series_truth = std::move(truth);
  r.series_model = std::move(model);
  return r;
}

const char* to_string(Testbed t) {
  return t == Testbed::orthogonal ? "orthogonal" : "nonorthogonal";
}

Testbed testbed_from_string(const std::string& name) {
  if (name == "orthogonal") return Testbed::orthogonal;
  if (name == "nonorthogonal") return Testbed::nonorthogonal;
  throw Error(ErrorCode::config, "unknown testbed '" + name + "' (expected orthogonal|nonorthogonal)");
}

IntersectionGeometry testbed_geometry(Testbed t) {
  IntersectionGeometry g;
  if (t == Testbed::orthogonal) {
    g.diameter_ft = 40.0;
    g.alpha_deg = 90.0;
  } else {
    g.diameter_ft = 60.0;
    g.alpha_deg = 60.0;
  }
  return g;
}

GroundTruthRun ground_truth_run(const GroundTruthConfig& config) {
  if (config.timesteps < 1) throw Error(ErrorCode::parameter, "timesteps must be >= 1");
  const IntersectionGeometry geom = testbed_geometry(config.testbed);

  struct Snapshot {
    double truth = 0.0;
    double model = 0.0;
    double spacing = 0.0;
  };
  auto snaps = parallel_map<Snapshot>(
      static_cast<std::size_t>(config.timesteps),
      [&](std::size_t t) {
        const auto sc = stochastic_scenario(geom, config.mean_spacing_ft, config.min_gap_ft,
                                            config.vehicles_per_arm, derive_seed(config.seed, t));
        Snapshot s;
        s.truth = exact_interference(sc, DistanceModel::coordinate).total;
        s.spacing = realized_mean_spacing(sc);
        s.model = per_arm_finite_sums(s.spacing, geom, sc.vehicle_counts()).total;
        return s;
      },
      config.threads);

  std::vector<double> truth, model;
  GroundTruthRun run;
  truth.reserve(snaps.size());
  model.reserve(snaps.size());
  run.realized_spacing_ft.reserve(snaps.size());
  for (const auto& s : snaps) {
    truth.push_back(s.truth);
    model.push_back(s.model);
    run.realized_spacing_ft.push_back(s.spacing);
  }
  run.report = mape(std::move(truth), std::move(model));
  return run;
}

MapeReport ground_truth_experiment(Testbed testbed, int timesteps, std::uint64_t seed) {
  GroundTruthConfig cfg;
  cfg.testbed = testbed;
  cfg.timesteps = timesteps;
  cfg.seed = seed;
  return ground_truth_run(cfg).report;
}

// --- receiver offset --------------------------------------------------------

std::vector<OffsetRow> receiver_offset_study(const PlacementScenario& scenario,
                                             const std::vector<double>& offsets_ft) {
  scenario.validate();
  const auto& lane = scenario.arm(scenario.receiver.arm).positions_ft;
  const double base = scenario.receiver_position_ft();
  std::vector<OffsetRow> rows;
  rows.reserve(offsets_ft.size());
  for (double off : offsets_ft) {
    if (!(off >= 0.0)) throw Error(ErrorCode::parameter, "offsets must be >= 0");
    const double target = base + off;
    if (target > scenario.geometry.arm_length_ft) {
      std::ostringstream msg;
      msg << "offset " << off << " ft moves the receiver beyond the arm length";
      throw Error(ErrorCode::parameter, msg.str());
    }
    int index = -1;
    for (std::size_t k = 0; k < lane.size(); ++k) {
      if (std::abs(lane[k] - target) <= 1e-6) {
        index = static_cast<int>(k);
        break;
      }
    }
    if (index < 0) {
      std::ostringstream msg;
      msg << "offset " << off << " ft does not land on a vehicle of the receiver arm";
      throw Error(ErrorCode::parameter, msg.str());
    }
    PlacementScenario moved = scenario;
    moved.receiver.index = index;
    OffsetRow row;
    row.offset_ft = off;
    row.lambda = exact_interference(moved, DistanceModel::coordinate).total;
    row.r_b_ft = transmission_range_bound(scenario.radio.beta, row.lambda).r_b_ft;
    row.non_increase_holds = rows.empty() || row.lambda <= rows.back().lambda;
    rows.push_back(row);
  }
  return rows;
}

void write_offset_csv(std::ostream& os, const std::vector<OffsetRow>& rows) {
  os << kOffsetCsvHeader << '\n';
  for (const auto& r : rows) {
    os << format_number(r.offset_ft) << ',' << format_number(r.lambda) << ','
       << format_number(r.r_b_ft) << ',' << (r.non_increase_holds ? 1 : 0) << '\n';
  }
}

}  // namespace v2xi
