#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "deltadg/diagnostics.hpp"
#include "deltadg/dg_operator.hpp"
#include "deltadg/exact.hpp"
#include "deltadg/integrate.hpp"
#include "oracles.hpp"

using namespace deltadg;

namespace {

StateVector exact_state(const Grid& grid, const ExactProblem& p, double t) {
  StateVector u(grid);
  u.psibar = sample(grid, [&](SidedPoint q) { return exact_fields(p, t, q).psibar; });
  u.pi = sample(grid, [&](SidedPoint q) { return exact_fields(p, t, q).pi; });
  u.phi = sample(grid, [&](SidedPoint q) { return exact_fields(p, t, q).phi; });
  return u;
}

}  // namespace

TEST_CASE("diagnostics: spurious solution examples") {
  CHECK(spurious_solution(1.0, 8.0, {-3.0, Side::kRight}) == 0.5);
  CHECK(spurious_solution(1.0, 40.0, {3.0, Side::kRight}) == -0.5);
  CHECK(spurious_solution(1.0, 2.0, {3.0, Side::kRight}) == 0.0);
  CHECK(spurious_solution(1.0, 2.0, {-3.0, Side::kRight}) == 0.0);
  CHECK(spurious_solution(1.0, 2.0, {0.0, Side::kRight}) == -0.5);
  CHECK(spurious_solution(1.0, 2.0, {0.0, Side::kLeft}) == 0.5);
  CHECK(spurious_solution(0.0, 8.0, {-3.0, Side::kRight}) == 0.0);
  CHECK(spurious_solution(-2.0, 8.0, {-3.0, Side::kRight}) == -1.0);
}

TEST_CASE("diagnostics: property - spurious solution matches transported constraint data") {
  oracle::Rng rng(41);
  for (int i = 0; i < 500; ++i) {
    const double f0 = rng.uniform(-3, 3), t = rng.uniform(0.1, 50);
    const double x = rng.uniform(-60, 60);
    if (std::abs(std::abs(x) - t) < 1e-9 || x == 0.0) continue;
    CHECK(spurious_solution(f0, t, {x, Side::kRight}) == doctest::Approx(oracle::transported_offset(f0, t, x)));
  }
  // Odd in x about the interface, at any late time.
  for (int i = 0; i < 100; ++i) {
    const double t = rng.uniform(20, 100), x = rng.uniform(0.1, 19.9);
    CHECK(spurious_solution(1.0, t, {x, Side::kRight}) == -spurious_solution(1.0, t, {-x, Side::kRight}));
  }
}

TEST_CASE("diagnostics: front elements") {
  const Mesh mesh = Mesh::uniform(-10, 10, 20);
  CHECK(front_elements(mesh, 2.5) == std::vector<int>{7, 12});
  // A front on a breakpoint excludes both neighbours.
  CHECK(front_elements(mesh, 8.0) == std::vector<int>{1, 2, 17, 18});
  CHECK(front_elements(mesh, 40.0).empty());
  CHECK(front_elements(mesh, 0.0) == std::vector<int>{9, 10});
}

TEST_CASE("diagnostics: constraint of trivial and exact data") {
  const Grid grid(Mesh::uniform(-10, 10, 20), 6);
  const ReducedSource r1 = reduce(SourceSpec({{1, TimeFunction::cos()}}));
  const ConstraintReport zero = constraint(grid, StateVector(grid), r1, 0.0);
  CHECK(zero.max_norm == 0.0);
  CHECK(zero.l2_norm == 0.0);
  CHECK(zero.delta_part_expected == doctest::Approx(1.0));

  const ReducedSource r2 = reduce(SourceSpec({{2, TimeFunction::cos()}}));
  const ExactProblem p2{2, TimeFunction::cos(), ExactMode::kGlobal};
  const ConstraintReport ex = constraint(grid, exact_state(grid, p2, 0.0), r2, 0.0);
  CHECK(ex.max_norm <= 1e-4);
  CHECK(ex.l2_norm <= ex.max_norm * std::sqrt(20.0) + 1e-300);
  // s = 2 has no delta in phi (the delta sits in psi itself).
  CHECK(ex.delta_part_expected == 0.0);

  const ConstraintReport none = constraint(grid, StateVector(grid), ReducedSource{}, 1.0);
  CHECK(none.max_norm == 0.0);
  CHECK(none.delta_part_expected == 0.0);
}

TEST_CASE("diagnostics: property - constraint is preserved by the source-free evolution") {
  // A state with phi = psibar_x (polynomial of degree <= k) has zero discrete constraint;
  // exact data likewise converges with resolution.
  const ExactProblem p1{1, TimeFunction::sin(), ExactMode::kGlobal};
  const ReducedSource r1 = reduce(SourceSpec({{1, TimeFunction::sin()}}));
  double prev = INFINITY;
  for (int k : {3, 5, 7, 9}) {
    const Grid grid(Mesh::uniform(-10, 10, 20), k);
    const double c = constraint(grid, exact_state(grid, p1, 3.0), r1, 3.0).max_norm;
    CHECK(c < prev);
    prev = c;
  }
  CHECK(prev <= 1e-5);
}

TEST_CASE("diagnostics: turn-on window") {
  const ReducedSource r1 = reduce(SourceSpec({{1, TimeFunction::cos()}}));
  const ReducedSource on = apply_turnon(r1, 30.0, 0.15);
  CHECK(std::abs(on.f(0.0)) <= 1e-15);
  CHECK(std::abs(on.f.derivative(1)(0.0)) <= 1e-14);
  CHECK(on.f(40.0) == doctest::Approx(std::cos(40.0)).epsilon(1e-14));
  CHECK(on.f(100.0) == doctest::Approx(std::cos(100.0)).epsilon(1e-14));
  // The window (erf(sqrt(rate) (t - tau/2)) + 1) / 2 is centred at tau/2.
  CHECK(on.f(15.0) == doctest::Approx(0.5 * std::cos(15.0)));
  // G is untouched unless asked for.
  const ReducedSource r2 = reduce(SourceSpec({{2, TimeFunction::cos()}}));
  CHECK(apply_turnon(r2, 30.0, 0.15).g(0.0) == r2.g(0.0));
  CHECK(std::abs(apply_turnon(r2, 30.0, 0.15, true).g(0.0)) <= 1e-15);
  CHECK_THROWS_AS(apply_turnon(r1, 30.0, 0.0), std::invalid_argument);
}

TEST_CASE("diagnostics: impulsive start leaves the predicted offset") {
  const Grid grid(Mesh::uniform(-10, 10, 20), 6);
  const ExactProblem p{1, TimeFunction::cos(), ExactMode::kGlobal};
  const ReducedSource red = reduce(SourceSpec({{1, TimeFunction::cos()}}));
  const InterfaceMod mod = interface_modification(red);
  const GridFunction v(grid);
  auto f = [&](const StateVector& s, double t) { return rhs(s, t, grid, v, mod); };
  const double t_end = 8.0;
  const auto traj = evolve(StateVector(grid), f, TimeStepper::make(grid, t_end, 0.5, 5e-3));
  const GridFunction ref = sample(grid, [&](SidedPoint q) { return exact_eval(p, t_end, q).classical; });
  // Pointwise away from the fronts: the offset regions have different signs, and the
  // jump riding on each front rings one element ahead of it.
  const std::vector<int> skip = front_elements(grid.mesh(), t_end);
  auto near_front = [&](int e) {
    return std::any_of(skip.begin(), skip.end(), [e](int f) { return std::abs(e - f) <= 1; });
  };
  double worst = 0.0;
  for (int e = 0; e < grid.elements(); ++e) {
    if (near_front(e)) continue;
    for (int i = 0; i < grid.nodes_per_element(); ++i) {
      const double d = traj.final_state.psibar(e, i) - ref(e, i);
      worst = std::max(worst, std::abs(d - spurious_solution(1.0, t_end, grid.point(e, i))));
    }
  }
  CAPTURE(worst);
  CHECK(worst <= 1e-3);
  const OffsetSummary off = measure_offset(grid, traj.final_state.psibar, ref, t_end);
  CHECK(off.left_nodes + off.right_nodes == (20 - static_cast<int>(skip.size())) * 7);
}

TEST_CASE("diagnostics: turn-on leaves no late-time offset") {
  // Past tau + (b - a) the windowed run matches the unwindowed global solution;
  // k = 10 keeps the discretization error itself below the tolerance.
  const Grid grid(Mesh::uniform(-10, 10, 20), 10);
  const ExactProblem p{1, TimeFunction::cos(), ExactMode::kGlobal};
  const ReducedSource red = apply_turnon(reduce(SourceSpec({{1, TimeFunction::cos()}})), 30.0, 0.15);
  const InterfaceMod mod = interface_modification(red);
  const GridFunction v(grid);
  auto f = [&](const StateVector& s, double t) { return rhs(s, t, grid, v, mod); };
  const auto traj = evolve(StateVector(grid), f, TimeStepper::make(grid, 70.0, 0.5, 2e-3, {55.0, 70.0}));
  REQUIRE(traj.snapshots.size() == 2);
  for (const auto& snap : traj.snapshots) {
    const GridFunction ref = sample(grid, [&](SidedPoint q) { return exact_eval(p, snap.t, q).classical; });
    double worst = 0.0;
    for (std::size_t i = 0; i < ref.data().size(); ++i)
      worst = std::max(worst, std::abs(snap.state.psibar.data()[i] - ref.data()[i]));
    CAPTURE(snap.t);
    CHECK(worst <= 1e-10);
  }
}
