#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "v2xi/interference.hpp"
#include "v2xi/traffic.hpp"

namespace v2xi {

// --- sweeps -----------------------------------------------------------------

enum class SweptParam { h, D, alpha };

const char* to_string(SweptParam p);
SweptParam swept_param_from_string(const std::string& name);

struct SweepSpec {
  SweptParam swept = SweptParam::h;
  std::vector<double> values;
  double fixed_h = 50.0;
  double fixed_D = 40.0;
  double fixed_alpha = 90.0;
  std::vector<ComputationMode> modes{ComputationMode::bound_derived};
  std::string output_path;  // empty: no file written
  double beta = 0.15;
  DistanceModel distance_model = DistanceModel::coordinate;
  // Vehicles per arm for exact/finite modes; default is the effective count
  // for the arm length.
  std::optional<int> vehicles_per_arm;
  double arm_length_ft = 2000.0;
  unsigned threads = 1;

  void validate() const;
};

struct SweepRow {
  SweptParam param = SweptParam::h;
  double value = 0.0;
  ComputationMode mode = ComputationMode::exact;
  double lambda = 0.0;
  double r_b_ft = 0.0;
  LevelOfService los = LevelOfService::mild_cd;
};

inline constexpr const char* kSweepCsvHeader = "param,value,mode,lambda_ft_neg2,r_b_ft,los";

/// Single-point interference for one computation mode.
double interference_for_mode(ComputationMode mode, double h, const IntersectionGeometry& geom,
                             DistanceModel distance_model, std::optional<int> vehicles_per_arm);

/// One row per (value, mode), values outer. Writes CSV to output_path when set.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

std::vector<double> default_h_sweep();      // 15, 20, ..., 175
std::vector<double> default_D_sweep();      // 30, 40, ..., 120
std::vector<double> default_alpha_sweep();  // fitted angles plus 90

// --- MAPE -------------------------------------------------------------------

struct MapeReport {
  double mape_percent = 0.0;
  int timestep_count = 0;
  std::vector<double> series_truth;
  std::vector<double> series_model;
};

/// (1/T) sum |model_t - truth_t| / truth_t * 100.
MapeReport mape(std::vector<double> truth, std::vector<double> model);

enum class Testbed { orthogonal, nonorthogonal };

const char* to_string(Testbed t);
Testbed testbed_from_string(const std::string& name);

struct GroundTruthConfig {
  Testbed testbed = Testbed::orthogonal;
  int timesteps = 2000;
  std::uint64_t seed = 42;
  double mean_spacing_ft = 60.0;
  double min_gap_ft = kDefaultMinGapFt;
  // Proportional to the testbed entry volumes (NB/SB 170, WB/EB 80 veh/h/ln).
  std::array<int, 4> vehicles_per_arm{17, 17, 8, 8};
  unsigned threads = 1;
};

/// Testbed geometry: orthogonal D = 40 ft, alpha = 90; non-orthogonal D = 60 ft, alpha = 60.
IntersectionGeometry testbed_geometry(Testbed t);

struct GroundTruthRun {
  MapeReport report;
  std::vector<double> realized_spacing_ft;
};

/// Per snapshot: stochastic placement, truth = exact (coordinate) interference,
/// model = per-arm finite sums at the realised mean spacing.
GroundTruthRun ground_truth_run(const GroundTruthConfig& config);

MapeReport ground_truth_experiment(Testbed testbed, int timesteps, std::uint64_t seed);

// --- receiver offset --------------------------------------------------------

struct OffsetRow {
  double offset_ft = 0.0;
  double lambda = 0.0;
  double r_b_ft = 0.0;
  bool non_increase_holds = true;  // lambda <= previous row's lambda
};

inline constexpr const char* kOffsetCsvHeader = "offset_ft,lambda_ft_neg2,r_b_ft,non_increase_holds";

/// Moves the receiver role upstream to the vehicle `offset` behind the base
/// receiver on the same arm and recomputes the coordinate interference.
/// Offsets must land on a vehicle and stay within the arm length.
std::vector<OffsetRow> receiver_offset_study(const PlacementScenario& scenario,
                                             const std::vector<double>& offsets_ft);

void write_offset_csv(std::ostream& os, const std::vector<OffsetRow>& rows);

// --- refits -----------------------------------------------------------------

struct AngleLogFit {
  double alpha_deg = 0.0;
  double log_coef = 0.0;
  double offset = 0.0;
  double r2 = 0.0;
  double reference_log_coef = 0.0;
  double reference_offset = 0.0;
};

struct FitReport {
  int points = 0;
  double power_coef = 0.0;  // a in a r^b ~ Psi1(r)
  double power_exp = 0.0;   // b
  double power_r2_log = 0.0;
  double power_r2_linear = 0.0;
  double log_coef = 0.0;    // c in c ln r + d ~ Psi(r)
  double log_offset = 0.0;  // d
  double log_r2 = 0.0;
  std::vector<AngleLogFit> angle_fits;
};

inline constexpr double kReferencePowerCoef = 1.3003;
inline constexpr double kReferencePowerExp = -1.067;
inline constexpr double kReferenceLogCoef = 1.0799;
inline constexpr double kReferenceLogOffset = 0.2658;

/// n points uniform in log(ratio) between lo and hi.
std::vector<double> log_ratio_grid(double lo, double hi, int n);

FitReport refit_approximations(const std::vector<double>& ratio_grid);

std::string fit_report_json(const FitReport& report);

// --- discrepancy report -----------------------------------------------------

struct DiscrepancyRow {
  std::string formula_a;
  std::string formula_b;
  double h = 0.0;
  double D = 0.0;
  double alpha_deg = 0.0;
  double value_a = 0.0;
  double value_b = 0.0;
  double rel_gap = 0.0;  // (value_a - value_b) / |value_b|
};

inline constexpr const char* kDiscrepancyCsvHeader =
    "formula_a,formula_b,h,D,alpha_deg,value_a,value_b,rel_gap";

/// Paired evaluations of mutually inconsistent closed forms at one (h, D).
std::vector<DiscrepancyRow> discrepancy_report(double h = 30.0, double D = 60.0,
                                               double beta = 0.15);

void write_discrepancy_csv(std::ostream& os, const std::vector<DiscrepancyRow>& rows);

/// 12 significant digits, shortest form.
std::string format_number(double v);

}  // namespace v2xi
