#ifndef DELTADG_EXPERIMENTS_HPP_
#define DELTADG_EXPERIMENTS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "deltadg/config.hpp"
#include "deltadg/integrate.hpp"
#include "json.hpp"

namespace deltadg {

inline constexpr int kSummarySchemaVersion = 1;

/// Max nodal errors against the exact solution; x = 0 nodes are evaluated one-sided.
struct ErrorNorms {
  double t = 0.0;
  double psibar = 0.0;
  double pi = 0.0;
  double phi = 0.0;
  double interface = 0.0;  // psibar error over the two x = 0 nodes
  double away_from_interface = 0.0;
};

/// One diagnostics.csv row; absent quantities are std::nullopt.
struct DiagnosticsRow {
  double t = 0.0;
  std::optional<double> max_constraint;
  std::optional<double> l2_constraint;
  std::optional<double> offset_left;
  std::optional<double> offset_right;
};

struct SolveResult {
  SolveResult(RunConfig cfg, Grid g) : config(std::move(cfg)), grid(std::move(g)) {}

  RunConfig config;
  Grid grid;
  TimeStepper stepper;
  ReducedSource reduced;            // wave: G, F and reconstruction terms
  DistributionalPart distribution;  // wave or advection reconstruction
  std::vector<Snapshot<StateVector>> snapshots;  // t = 0, requested times, t_final
  std::vector<StateVector> exact;                // same times, when an exact solution exists
  std::vector<ErrorNorms> errors;                // same times, when an exact solution exists
  std::vector<DiagnosticsRow> diagnostics;

  const StateVector& final_state() const { return snapshots.back().state; }
  std::optional<ErrorNorms> final_errors() const;
  nlohmann::json summary() const;
};

/// Reduce, discretize, evolve and measure one configuration.
SolveResult run_solve(const RunConfig& config);

struct ConvergenceRow {
  std::string mode;
  int degree = 0;
  int elements = 0;
  double dt = 0.0;
  double max_error = 0.0;
  double interface_error = 0.0;
  double away_error = 0.0;
};

struct ConvergenceFit {
  int degree = 0;
  double slope = 0.0;  // d log(error) / d log(elements)
  int points = 0;
};

struct ConvergenceResult {
  RunConfig config;
  std::vector<ConvergenceRow> rows;
  std::vector<ConvergenceFit> fits;  // h-mode only, degrees with at least 2 points
  nlohmann::json summary() const;
};

/// Least-squares slope of y against x over the last min(3, n) points.
double tail_slope(const std::vector<double>& x, const std::vector<double>& y);

/// h-mode: for each degree, the listed element counts (default 4, 8, 16, 32).
/// p-mode: for each element count, the listed degrees (default 2..12).
ConvergenceResult run_converge(const RunConfig& config);

/// The three impulsive-start scenarios: cos and sin sources of order 1 on trivial
/// data, and the cos source behind the erf turn-on. Run names get a suffix.
std::vector<SolveResult> run_constraint_study(const RunConfig& config);
std::vector<RunConfig> constraint_study_configs(const RunConfig& config);

/// ExactValue and fields at config.query in both causal and global modes.
nlohmann::json run_exact(const RunConfig& config);

}  // namespace deltadg

#endif  // DELTADG_EXPERIMENTS_HPP_
