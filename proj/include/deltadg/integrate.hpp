#ifndef DELTADG_INTEGRATE_HPP_
#define DELTADG_INTEGRATE_HPP_

#include <functional>
#include <type_traits>
#include <vector>

#include "deltadg/mesh.hpp"

namespace deltadg {

inline void axpy(double& y, double a, double x) { y += a * x; }
inline void axpy(std::vector<double>& y, double a, const std::vector<double>& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}
inline void axpy(GridFunction& y, double a, const GridFunction& x) { axpy(y.data(), a, x.data()); }
inline void axpy(StateVector& y, double a, const StateVector& x) { y.axpy(a, x); }

/// Classic four-stage Runge--Kutta step for u' = f(u, t).
template <typename State, typename Rhs>
State step_rk4(const State& u, double t, double dt, Rhs&& f) {
  const State k1 = f(u, t);
  State stage = u;
  axpy(stage, 0.5 * dt, k1);
  const State k2 = f(stage, t + 0.5 * dt);
  stage = u;
  axpy(stage, 0.5 * dt, k2);
  const State k3 = f(stage, t + 0.5 * dt);
  stage = u;
  axpy(stage, dt, k3);
  const State k4 = f(stage, t + dt);
  State next = u;
  axpy(next, dt / 6.0, k1);
  axpy(next, dt / 3.0, k2);
  axpy(next, dt / 3.0, k3);
  axpy(next, dt / 6.0, k4);
  return next;
}

/**
 * Step-size plan. The nominal step is cfl * h_min / (2k + 1), capped by dt_max.
 * Each stretch between consecutive stop times (snapshots, then t_final) is
 * split into an integer number of equal steps no larger than the nominal one,
 * so every stop is hit exactly.
 */
struct TimeStepper {
  double dt = 0.0;  // nominal step
  double t_final = 0.0;
  double cfl = 0.5;
  std::vector<double> snapshot_times;

  struct Segment {
    double t_end;
    long steps;
    double dt;
    bool snapshot;
  };

  static TimeStepper make(const Grid& grid, double t_final, double cfl, double dt_max = 0.0,
                          std::vector<double> snapshots = {});
  std::vector<Segment> plan() const;
  long total_steps() const;
};

template <typename State>
struct Snapshot {
  double t;
  State state;
};

template <typename State>
struct Trajectory {
  std::vector<Snapshot<State>> snapshots;
  State final_state;
  double t_final = 0.0;
  long steps = 0;
};

/**
 * Integrates from t = 0 to stepper.t_final with RK4. `on_step(state, t)` runs
 * after every step and may throw to abort.
 */
template <typename State, typename Rhs>
Trajectory<State> evolve(State initial, Rhs&& f, const TimeStepper& stepper,
                         const std::function<void(const std::type_identity_t<State>&, double)>& on_step = {}) {
  Trajectory<State> out;
  double t = 0.0;
  State u = std::move(initial);
  for (const auto& seg : stepper.plan()) {
    const double t0 = t;
    for (long s = 1; s <= seg.steps; ++s) {
      u = step_rk4(u, t, seg.dt, f);
      t = s == seg.steps ? seg.t_end : t0 + s * seg.dt;
      ++out.steps;
      if (on_step) on_step(u, t);
    }
    if (seg.snapshot) out.snapshots.push_back({t, u});
  }
  out.t_final = t;
  out.final_state = std::move(u);
  return out;
}

}  // namespace deltadg

#endif  // DELTADG_INTEGRATE_HPP_
