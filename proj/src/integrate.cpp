#include "deltadg/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace deltadg {

TimeStepper TimeStepper::make(const Grid& grid, double t_final, double cfl, double dt_max,
                              std::vector<double> snapshots) {
  if (!(t_final >= 0.0)) throw std::invalid_argument("time stepper: t_final must be >= 0");
  if (!(cfl > 0.0)) throw std::invalid_argument("time stepper: cfl must be positive");
  TimeStepper s;
  s.cfl = cfl;
  s.t_final = t_final;
  s.dt = cfl * grid.mesh().h_min() / (2 * grid.basis().degree() + 1);
  if (dt_max > 0.0) s.dt = std::min(s.dt, dt_max);
  for (double ts : snapshots) {
    if (!(ts >= 0.0 && ts <= t_final))
      throw std::invalid_argument("time stepper: snapshot time outside [0, t_final]");
  }
  std::sort(snapshots.begin(), snapshots.end());
  snapshots.erase(std::unique(snapshots.begin(), snapshots.end()), snapshots.end());
  s.snapshot_times = std::move(snapshots);
  return s;
}

std::vector<TimeStepper::Segment> TimeStepper::plan() const {
  std::vector<Segment> segs;
  double t = 0.0;
  auto push = [&](double t_end, bool snap) {
    const double len = t_end - t;
    const long steps = len > 0.0 ? static_cast<long>(std::ceil(len / dt - 1e-9)) : 0;
    segs.push_back({t_end, steps, steps > 0 ? len / steps : 0.0, snap});
    t = t_end;
  };
  for (double ts : snapshot_times) push(ts, true);
  if (snapshot_times.empty() || snapshot_times.back() < t_final) push(t_final, false);
  return segs;
}

long TimeStepper::total_steps() const {
  long n = 0;
  for (const auto& s : plan()) n += s.steps;
  return n;
}

}  // namespace deltadg
