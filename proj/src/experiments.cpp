#include "deltadg/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "deltadg/diagnostics.hpp"

namespace deltadg {

using nlohmann::json;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

json terms_json(const std::vector<DeltaTerm>& terms) {
  json out = json::array();
  for (const auto& d : terms) out.push_back({{"order", d.order}, {"coefficient", d.coefficient.to_json()}});
  return out;
}

json values_json(const std::vector<std::pair<int, double>>& values) {
  json out = json::array();
  for (const auto& [order, c] : values) out.push_back({{"order", order}, {"coefficient", c}});
  return out;
}

// Reference solution at the nodes: closed-form fields, or the causal classical
// part alone (pi, phi NaN) when only quadrature is available.
StateVector exact_state(const Grid& grid, const ExactProblem& problem, double t) {
  StateVector u(grid);
  const bool closed = has_closed_form(problem);
  for (int e = 0; e < grid.elements(); ++e) {
    for (int i = 0; i < grid.nodes_per_element(); ++i) {
      const SidedPoint p = grid.point(e, i);
      if (closed) {
        const ExactFields f = exact_fields(problem, t, p);
        u.psibar(e, i) = f.psibar;
        u.pi(e, i) = f.pi;
        u.phi(e, i) = f.phi;
      } else {
        u.psibar(e, i) = exact_eval(problem, t, p).classical;
        u.pi(e, i) = kNaN;
        u.phi(e, i) = kNaN;
      }
    }
  }
  return u;
}

StateVector advection_state(const Grid& grid, const TimeFunction& g, Direction dir, double t) {
  StateVector u(grid);
  u.psibar = sample(grid, [&](SidedPoint p) { return advection_exact(g, dir, t, p); });
  // Scalar equation: pi and phi have no meaning, so their errors come out NaN.
  u.pi = GridFunction(grid, kNaN);
  u.phi = GridFunction(grid, kNaN);
  return u;
}

double max_diff(const GridFunction& a, const GridFunction& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

ErrorNorms error_norms(const Grid& grid, const StateVector& num, const StateVector& ref, double t) {
  ErrorNorms n;
  n.t = t;
  n.psibar = max_diff(num.psibar, ref.psibar);
  n.pi = std::isnan(ref.pi.data().front()) ? kNaN : max_diff(num.pi, ref.pi);
  n.phi = std::isnan(ref.phi.data().front()) ? kNaN : max_diff(num.phi, ref.phi);
  const int k = grid.basis().degree();
  const int left = grid.mesh().left_of_interface();
  const int right = grid.mesh().right_of_interface();
  for (int e = 0; e < grid.elements(); ++e) {
    for (int i = 0; i <= k; ++i) {
      const double d = std::abs(num.psibar(e, i) - ref.psibar(e, i));
      const bool at_zero = (e == left && i == k) || (e == right && i == 0);
      if (at_zero)
        n.interface = std::max(n.interface, d);
      else
        n.away_from_interface = std::max(n.away_from_interface, d);
    }
  }
  return n;
}

json error_json(const ErrorNorms& e) {
  return {{"t", e.t},
          {"psibar_max", e.psibar},
          {"pi_max", std::isnan(e.pi) ? json(nullptr) : json(e.pi)},
          {"phi_max", std::isnan(e.phi) ? json(nullptr) : json(e.phi)},
          {"interface_psibar", e.interface},
          {"away_from_interface_psibar", e.away_from_interface}};
}

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

std::optional<ErrorNorms> SolveResult::final_errors() const {
  if (errors.empty()) return std::nullopt;
  return errors.back();
}

SolveResult run_solve(const RunConfig& config) {
  SolveResult r(config, Grid(config.mesh(), config.degree));
  const Grid& grid = r.grid;

  std::vector<double> times = config.snapshots;
  times.push_back(0.0);
  times.push_back(config.t_final);
  r.stepper = TimeStepper::make(grid, config.t_final, config.cfl, config.dt_max, times);

  std::function<StateVector(double)> reference;
  StateVector initial(grid);
  Trajectory<StateVector> traj;

  if (config.equation == Equation::kWave) {
    const Potential& v = config.potential;
    r.reduced = v.is_zero() ? reduce(config.source)
                            : reduce_with_potential(config.source, v(0.0), v.derivative(0.0));
    if (config.turnon)
      r.reduced = apply_turnon(r.reduced, config.turnon->tau, config.turnon->rate,
                               config.turnon->apply_to_g);
    r.distribution = DistributionalPart::from(r.reduced);
    if (config.exact) {
      const ExactProblem problem = *config.exact;
      reference = [&grid, problem](double t) { return exact_state(grid, problem, t); };
    }
    if (config.initial_data == InitialData::kExact && reference) initial = reference(0.0);
    const InterfaceMod mod = interface_modification(r.reduced);
    const GridFunction potential = v.sample(grid);
    const MassMatrix mass = config.mass;
    StateVector scratch(grid);
    auto f = [&](const StateVector& u, double t) {
      rhs(u, t, grid, potential, mod, BoundaryCondition::kSommerfeld, mass, scratch);
      return scratch;
    };
    traj = evolve(std::move(initial), f, r.stepper);
  } else {
    const double speed = config.direction == Direction::kRightMoving ? 1.0 : -1.0;
    AdvectionSource src = reduce_advection(config.source, speed);
    if (config.turnon)
      src.amplitude = TimeFunction::product(
          TimeFunction::erf_window(config.turnon->tau, config.turnon->rate), src.amplitude);
    r.distribution = {src.recon, TimeFunction::zero()};
    r.reduced.g = src.amplitude;
    r.reduced.recon = src.recon;
    const TimeFunction g = src.amplitude;
    const Direction dir = config.direction;
    reference = [&grid, g, dir](double t) { return advection_state(grid, g, dir, t); };
    if (config.initial_data == InitialData::kExact) initial.psibar = reference(0.0).psibar;
    const MassMatrix mass = config.mass;
    auto f = [&](const StateVector& u, double t) {
      StateVector du(grid);
      du.psibar = advection_rhs(u.psibar, t, grid, g, dir, mass);
      return du;
    };
    traj = evolve(std::move(initial), f, r.stepper);
  }
  r.snapshots = std::move(traj.snapshots);

  for (const auto& snap : r.snapshots) {
    DiagnosticsRow row;
    row.t = snap.t;
    if (config.equation == Equation::kWave) {
      const ConstraintReport c = constraint(grid, snap.state, r.reduced, snap.t);
      row.max_constraint = c.max_norm;
      row.l2_constraint = c.l2_norm;
    }
    if (reference) {
      StateVector ref = reference(snap.t);
      r.errors.push_back(error_norms(grid, snap.state, ref, snap.t));
      const OffsetSummary o = measure_offset(grid, snap.state.psibar, ref.psibar, snap.t);
      if (o.left_nodes > 0) row.offset_left = o.left_mean;
      if (o.right_nodes > 0) row.offset_right = o.right_mean;
      r.exact.push_back(std::move(ref));
    }
    r.diagnostics.push_back(row);
  }
  return r;
}

json SolveResult::summary() const {
  json j;
  j["schema_version"] = kSummarySchemaVersion;
  j["command"] = "solve";
  j["config"] = config.to_json();
  j["mesh"] = {{"elements", grid.elements()},
               {"degree", grid.basis().degree()},
               {"nodes", grid.elements() * grid.nodes_per_element()},
               {"h_min", grid.mesh().h_min()}};
  j["time"] = {{"dt", stepper.dt}, {"steps", stepper.total_steps()}, {"t_final", stepper.t_final}};
  if (config.equation == Equation::kWave)
    j["reduced"] = {{"g", reduced.g.to_json()}, {"f", reduced.f.to_json()}, {"recon", terms_json(reduced.recon)}};
  else
    j["reduced"] = {{"amplitude", reduced.g.to_json()}, {"recon", terms_json(reduced.recon)}};
  const double t = snapshots.back().t;
  j["distributional_part"] = {
      {"t", t},
      {"psi_delta_terms", values_json(distribution.evaluate(t))},
      {"phi_delta", distribution.phi_delta.is_zero() ? 0.0 : distribution.phi_delta(t)}};
  const auto fe = final_errors();
  j["errors"] = fe ? error_json(*fe) : json(nullptr);
  json snaps = json::array();
  for (std::size_t i = 0; i < snapshots.size(); ++i) {
    json s = {{"t", snapshots[i].t},
              {"max_constraint", opt(diagnostics[i].max_constraint)},
              {"l2_constraint", opt(diagnostics[i].l2_constraint)},
              {"offset_left", opt(diagnostics[i].offset_left)},
              {"offset_right", opt(diagnostics[i].offset_right)}};
    if (!errors.empty()) s["errors"] = error_json(errors[i]);
    snaps.push_back(std::move(s));
  }
  j["snapshots"] = std::move(snaps);
  return j;
}

double tail_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 2) throw std::invalid_argument("tail_slope: need at least two points");
  const std::size_t first = n > 3 ? n - 3 : 0;
  const double m = static_cast<double>(n - first);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = first; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

ConvergenceResult run_converge(const RunConfig& config) {
  if (!config.exact && config.equation == Equation::kWave)
    throw std::invalid_argument("converge: needs an exact problem");
  ConvergenceResult out;
  out.config = config;
  const bool h_mode = config.sweep.mode == "h";
  std::vector<int> degrees = config.sweep.degrees;
  std::vector<int> elements = config.sweep.elements;
  if (degrees.empty()) {
    if (h_mode)
      degrees = {config.degree};
    else
      for (int k = 2; k <= 12; ++k) degrees.push_back(k);
  }
  if (elements.empty()) elements = h_mode ? std::vector<int>{4, 8, 16, 32} : std::vector<int>{config.elements};

  auto run_one = [&](int k, int e) {
    RunConfig c = config;
    c.degree = k;
    c.elements = e;
    c.breakpoints.clear();
    c.snapshots.clear();
    const SolveResult r = run_solve(c);
    const ErrorNorms err = *r.final_errors();
    out.rows.push_back({config.sweep.mode, k, e, r.stepper.plan().back().dt, err.psibar, err.interface,
                        err.away_from_interface});
  };
  if (h_mode) {
    for (int k : degrees) {
      std::vector<double> lx, ly;
      for (int e : elements) {
        run_one(k, e);
        lx.push_back(std::log(static_cast<double>(e)));
        ly.push_back(std::log(out.rows.back().max_error));
      }
      if (lx.size() >= 2) out.fits.push_back({k, tail_slope(lx, ly), static_cast<int>(std::min<std::size_t>(3, lx.size()))});
    }
  } else {
    for (int e : elements)
      for (int k : degrees) run_one(k, e);
  }
  return out;
}

json ConvergenceResult::summary() const {
  json j;
  j["schema_version"] = kSummarySchemaVersion;
  j["command"] = "converge";
  j["config"] = config.to_json();
  j["mode"] = config.sweep.mode;
  json rows_json = json::array();
  for (const auto& r : rows)
    rows_json.push_back({{"degree", r.degree},
                         {"elements", r.elements},
                         {"dt", r.dt},
                         {"max_error", r.max_error},
                         {"interface_error", r.interface_error}});
  j["runs"] = std::move(rows_json);
  json fits_json = json::array();
  for (const auto& f : fits)
    fits_json.push_back({{"degree", f.degree}, {"slope", f.slope}, {"expected", -(f.degree + 1)}, {"points", f.points}});
  j["fits"] = std::move(fits_json);
  return j;
}

std::vector<RunConfig> constraint_study_configs(const RunConfig& config) {
  std::vector<double> snaps = config.snapshots;
  if (snaps.empty()) snaps = {8.0, 40.0, 70.0};
  const double t_end = *std::max_element(snaps.begin(), snaps.end());
  std::vector<RunConfig> out;
  auto make = [&](const std::string& suffix, const TimeFunction& amp, bool turnon) {
    RunConfig c = config;
    c.name = config.name + "-" + suffix;
    c.equation = Equation::kWave;
    c.potential = Potential::zero();
    c.source = SourceSpec({{1, amp}});
    c.initial_data = InitialData::kTrivial;
    c.exact = ExactProblem{1, amp, ExactMode::kGlobal};
    c.turnon.reset();
    if (turnon) c.turnon = config.turnon.value_or(TurnOn{});
    c.t_final = t_end;
    c.snapshots = snaps;
    out.push_back(std::move(c));
  };
  make("cos-trivial", TimeFunction::cos(), false);
  make("sin-trivial", TimeFunction::sin(), false);
  make("cos-turnon", TimeFunction::cos(), true);
  return out;
}

std::vector<SolveResult> run_constraint_study(const RunConfig& config) {
  std::vector<SolveResult> out;
  for (const RunConfig& c : constraint_study_configs(config)) out.push_back(run_solve(c));
  return out;
}

json run_exact(const RunConfig& config) {
  if (!config.exact) throw std::invalid_argument("exact: the config defines no exact problem");
  const ExactQuery& q = config.query;
  const SidedPoint p{q.x, q.side};
  json j;
  j["schema_version"] = kSummarySchemaVersion;
  j["command"] = "exact";
  j["t"] = q.t;
  j["x"] = q.x;
  j["side"] = q.side == Side::kLeft ? "left" : "right";
  j["s"] = config.exact->s;
  j["amplitude"] = config.exact->amplitude.to_json();
  j["closed_form"] = has_closed_form(*config.exact);
  for (ExactMode mode : {ExactMode::kCausal, ExactMode::kGlobal}) {
    ExactProblem problem = *config.exact;
    problem.mode = mode;
    const char* key = mode == ExactMode::kCausal ? "causal" : "global";
    if (!has_closed_form(problem) && mode == ExactMode::kGlobal) {
      j[key] = nullptr;
      continue;
    }
    const ExactValue v = exact_eval(problem, q.t, p);
    json m = {{"classical", v.classical}, {"delta_coeffs", values_json(v.delta_coeffs)}};
    if (has_closed_form(problem)) {
      const ExactFields f = exact_fields(problem, q.t, p);
      m["fields"] = {{"psibar", f.psibar}, {"pi", f.pi}, {"phi", f.phi}};
    }
    j[key] = std::move(m);
  }
  return j;
}

}  // namespace deltadg
