#include <cmath>
#include <numbers>

#include "doctest.h"
#include "deltadg/exact.hpp"
#include "deltadg/mesh.hpp"
#include "oracles.hpp"

using namespace deltadg;

TEST_CASE("mesh: uniform construction") {
  const Mesh two = Mesh::uniform(-10, 10, 2);
  CHECK(two.breakpoints() == std::vector<double>{-10.0, 0.0, 10.0});
  CHECK(two.interface_index() == 1);

  CHECK_THROWS_AS(Mesh::uniform(-10, 10, 3), std::invalid_argument);
  CHECK_THROWS_AS(Mesh::uniform(10, -10, 2), std::invalid_argument);
  CHECK_THROWS_AS(Mesh::uniform(0, 10, 2), std::invalid_argument);
  CHECK_THROWS_AS(Mesh::uniform(-10, 10, 0), std::invalid_argument);

  const Mesh twenty = Mesh::uniform(-10, 10, 20);
  CHECK(twenty.elements() == 20);
  CHECK(twenty.interface_index() == 10);
  CHECK(twenty.breakpoints()[10] == 0.0);
  CHECK(!std::signbit(twenty.breakpoints()[10]));
  for (int e = 0; e < 20; ++e) CHECK(twenty.width(e) == doctest::Approx(1.0));
  CHECK(twenty.h_min() == doctest::Approx(1.0));
  CHECK(twenty.left_of_interface() == 9);
  CHECK(twenty.right_of_interface() == 10);

  // Asymmetric domain with a uniform partition through 0.
  const Mesh asym = Mesh::uniform(-2, 6, 4);
  CHECK(asym.interface_index() == 1);
}

TEST_CASE("mesh: explicit breakpoints") {
  const Mesh m = Mesh::from_breakpoints({-3.0, -1.0, 0.0, 0.5, 4.0});
  CHECK(m.elements() == 4);
  CHECK(m.interface_index() == 2);
  CHECK(m.h_min() == doctest::Approx(0.5));
  CHECK_THROWS_AS(Mesh::from_breakpoints({-1.0, 0.5, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(Mesh::from_breakpoints({-1.0, 0.0, 0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(Mesh::from_breakpoints({0.0, 1.0}), std::invalid_argument);
  for (int e = 0; e < m.elements(); ++e) {
    CHECK(m.to_physical(e, -1.0) == m.left(e));
    CHECK(m.to_physical(e, 1.0) == m.right(e));
    CHECK(m.to_reference(e, m.to_physical(e, 0.3)) == doctest::Approx(0.3));
  }
}

TEST_CASE("mesh: sided evaluation of the s=1 solution") {
  const Grid grid(Mesh::uniform(-10, 10, 20), 6);
  const ExactProblem p{1, TimeFunction::cos(), ExactMode::kGlobal};
  const double t = 2 * std::numbers::pi;
  const GridFunction u = sample(grid, [&](SidedPoint q) { return exact_eval(p, t, q).classical; });
  CHECK(eval_sided(grid, u, {0.0, Side::kRight}) == doctest::Approx(0.5));
  CHECK(eval_sided(grid, u, {0.0, Side::kLeft}) == doctest::Approx(-0.5));

  const GridFunction smooth = sample(grid, [](SidedPoint q) { return std::cos(q.x); });
  CHECK(eval_sided(grid, smooth, {0.0, Side::kLeft}) == eval_sided(grid, smooth, {0.0, Side::kRight}));
  CHECK_THROWS_AS(eval_sided(grid, smooth, {10.5, Side::kLeft}), std::out_of_range);
}

TEST_CASE("mesh: property - side only matters at breakpoints, polynomials round-trip") {
  const int k = 5;
  const Grid grid(Mesh::from_breakpoints({-4.0, -2.5, 0.0, 1.0, 3.0}), k);
  oracle::Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> c(k + 1);
    for (double& x : c) x = rng.uniform(-1, 1);
    const oracle::Poly poly{c};
    const GridFunction u = sample(grid, [&](SidedPoint q) { return poly(q.x); });
    for (int s = 0; s < 20; ++s) {
      const double x = rng.uniform(-4.0, 3.0);
      const double l = eval_sided(grid, u, {x, Side::kLeft});
      CHECK(l == eval_sided(grid, u, {x, Side::kRight}));
      CHECK(std::abs(l - poly(x)) <= 1e-12 * std::max(1.0, std::abs(poly(x))));
    }
  }
}

TEST_CASE("mesh: Heaviside conventions") {
  const Grid grid(Mesh::uniform(-10, 10, 2), 4);
  const GridFunction right = heaviside_on_grid(grid, Direction::kRightMoving);
  const GridFunction left = heaviside_on_grid(grid, Direction::kLeftMoving);
  for (int i = 0; i < 5; ++i) {
    CHECK(right(0, i) == 0.0);
    CHECK(right(1, i) == 1.0);
    CHECK(left(0, i) == 1.0);
    CHECK(left(1, i) == 0.0);
  }
  // Away from 0 the classical H(x) = 1 for x >= 0 applies.
  CHECK(heaviside({0.5, Side::kLeft}) == 1.0);
  CHECK(heaviside({-0.5, Side::kRight}) == 0.0);
  CHECK(heaviside({0.0, Side::kRight}) == 1.0);
  CHECK(heaviside({0.0, Side::kLeft}) == 0.0);
  CHECK(sign({0.0, Side::kLeft}) == -1.0);
  CHECK(sign({0.0, Side::kRight}) == 1.0);
  CHECK(sign({-3.0, Side::kRight}) == -1.0);
}

TEST_CASE("mesh: grid points and state containers") {
  const Grid grid(Mesh::uniform(-1, 1, 2), 3);
  CHECK(grid.point(0, 3).x == 0.0);
  CHECK(grid.point(0, 3).side == Side::kLeft);
  CHECK(grid.point(1, 0).x == 0.0);
  CHECK(grid.point(1, 0).side == Side::kRight);

  StateVector a(grid), b(grid);
  b.pi(1, 2) = 3.0;
  a.axpy(2.0, b);
  CHECK(a.pi(1, 2) == 6.0);
  CHECK(a.conforms_to(grid));
  CHECK(!StateVector(Grid(Mesh::uniform(-1, 1, 4), 3)).conforms_to(grid));
  CHECK(a.pi.max_abs() == 6.0);
}

TEST_CASE("mesh: distributional part evaluation") {
  ReducedSource r;
  r.f = TimeFunction::cos();
  r.recon = {{0, TimeFunction::sin()}, {1, TimeFunction::zero()}};
  const DistributionalPart d = DistributionalPart::from(r);
  const auto v = d.evaluate(0.5);
  REQUIRE(v.size() == 1);
  CHECK(v[0].first == 0);
  CHECK(v[0].second == doctest::Approx(std::sin(0.5)));
  CHECK(d.phi_delta(0.5) == doctest::Approx(std::cos(0.5)));
}
