#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "aoweno/rhs.hpp"
#include "test_util.hpp"

using namespace aoweno;
using Catch::Matchers::WithinAbs;

namespace {

Boundary1 periodic1() {
  Boundary1 bc;
  bc.left.kind = bc.right.kind = BC::periodic;
  return bc;
}

Boundary2 periodic2() {
  Boundary2 bc;
  bc.xlo.kind = bc.xhi.kind = bc.ylo.kind = bc.yhi.kind = BC::periodic;
  return bc;
}

// rho = 1 + 0.2 sin(x - t), u = 1, p = 1: an exact Euler solution.
Field1 smooth_euler_state(const Axis& ax, const GasModel& gas) {
  Field1 q(3, ax.npts());
  for (int j = 0; j < ax.npts(); ++j) {
    const double rho = 1.0 + 0.2 * std::sin(ax.x(j));
    q.at(0, j) = rho;
    q.at(1, j) = rho;
    q.at(2, j) = 1.0 / (gas.gamma - 1.0) + 0.5 * rho;
  }
  return q;
}

}  // namespace

TEST_CASE("constant states produce identically zero tendencies", "[rhs]") {
  SECTION("scalar, transmissive") {
    ScalarLaw law = ScalarLaw{ScalarKind::advection};
    Axis ax{0.0, 1.0, 16, false};
    Boundary1 bc;  // transmissive
    ScalarSolver1D solver(law, SchemeParams::defaults(Scheme::ao543), ax, bc);
    Field1 u(1, ax.npts()), du(1, ax.npts());
    for (int j = 0; j < ax.npts(); ++j) u.at(0, j) = 0.7;
    solver.rhs(u, 0.0, du);
    for (int j = 0; j < ax.npts(); ++j) CHECK(du.at(0, j) == 0.0);
  }
  SECTION("Euler 2D, transmissive") {
    GasModel gas;
    Axis ax{0.0, 1.0, 8, false};
    Boundary2 bc;
    EulerSolver2D solver(gas, SchemeParams::defaults(Scheme::ao543), ax, ax, bc);
    Field2 q(4, ax.npts(), ax.npts()), dq(4, ax.npts(), ax.npts());
    for (int jy = 0; jy < ax.npts(); ++jy)
      for (int jx = 0; jx < ax.npts(); ++jx) {
        q.at(0, jx, jy) = 1.0;
        q.at(1, jx, jy) = 0.3;
        q.at(2, jx, jy) = -0.2;
        q.at(3, jx, jy) = 2.0;
      }
    solver.rhs(q, 0.0, dq);
    for (int jy = 0; jy < ax.npts(); ++jy)
      for (int jx = 0; jx < ax.npts(); ++jx)
        for (int c = 0; c < 4; ++c) CHECK(dq.at(c, jx, jy) == 0.0);
  }
}

TEST_CASE("periodic tendencies telescope to zero total", "[rhs]") {
  SECTION("Burgers") {
    ScalarLaw law = ScalarLaw{ScalarKind::burgers};
    Axis ax{-1.0, 1.0, 40, true};
    ScalarSolver1D solver(law, SchemeParams::defaults(Scheme::aon53), ax,
                          periodic1());
    Field1 u(1, ax.npts()), du(1, ax.npts());
    for (int j = 0; j < ax.npts(); ++j)
      u.at(0, j) = 0.25 + 0.5 * std::sin(M_PI * ax.x(j));
    solver.rhs(u, 0.0, du);
    double total = 0.0;
    for (int j = 0; j < ax.npts(); ++j) total += du.at(0, j);
    CHECK_THAT(total * ax.dx(), WithinAbs(0.0, 1e-13));
  }
  SECTION("Euler 1D characteristic") {
    GasModel gas;
    Axis ax{0.0, 2.0 * M_PI, 32, true};
    EulerSolver1D solver(gas, SchemeParams::defaults(Scheme::ao53), ax,
                         periodic1());
    Field1 q = smooth_euler_state(ax, gas);
    Field1 dq(3, ax.npts());
    solver.rhs(q, 0.0, dq);
    for (int c = 0; c < 3; ++c) {
      double total = 0.0;
      for (int j = 0; j < ax.npts(); ++j) total += dq.at(c, j);
      CHECK_THAT(total * ax.dx(), WithinAbs(0.0, 1e-12));
    }
  }
  SECTION("Euler 2D characteristic") {
    GasModel gas;
    Axis ax{0.0, 2.0 * M_PI, 16, true};
    EulerSolver2D solver(gas, SchemeParams::defaults(Scheme::ao543), ax, ax,
                         periodic2());
    Field2 q(4, 16, 16), dq(4, 16, 16);
    for (int jy = 0; jy < 16; ++jy)
      for (int jx = 0; jx < 16; ++jx) {
        const double rho = 1.0 + 0.2 * std::sin(ax.x(jx) + ax.x(jy));
        q.at(0, jx, jy) = rho;
        q.at(1, jx, jy) = rho;
        q.at(2, jx, jy) = rho;
        q.at(3, jx, jy) = 1.0 / (gas.gamma - 1.0) + rho;
      }
    solver.rhs(q, 0.0, dq);
    for (int c = 0; c < 4; ++c) {
      double total = 0.0;
      for (int jy = 0; jy < 16; ++jy)
        for (int jx = 0; jx < 16; ++jx) total += dq.at(c, jx, jy);
      CHECK_THAT(total * ax.dx() * ax.dx(), WithinAbs(0.0, 1e-11));
    }
  }
}

TEST_CASE("scalar advection tendency converges at fifth order", "[rhs]") {
  // u_t + u_x = 0 with u = sin(pi x): the tendency must approach
  // -pi cos(pi x).
  ScalarLaw law = ScalarLaw{ScalarKind::advection};
  const SchemeParams sp = SchemeParams::defaults(Scheme::ao53);
  std::vector<double> hs, errs;
  for (int n : {16, 32, 64, 128}) {
    Axis ax{-1.0, 1.0, n, true};
    ScalarSolver1D solver(law, sp, ax, periodic1());
    Field1 u(1, n), du(1, n);
    for (int j = 0; j < n; ++j) u.at(0, j) = std::sin(M_PI * ax.x(j));
    solver.rhs(u, 0.0, du);
    double e = 0.0;
    for (int j = 0; j < n; ++j)
      e = std::max(e, std::abs(du.at(0, j) + M_PI * std::cos(M_PI * ax.x(j))));
    hs.push_back(ax.dx());
    errs.push_back(e);
  }
  CHECK(testutil::lsq_order(hs, errs) > 4.6);
}

TEST_CASE("Euler tendencies converge to the exact time derivative", "[rhs]") {
  GasModel gas;
  const SchemeParams sp = SchemeParams::defaults(Scheme::ao53);

  SECTION("1D, characteristic and componentwise") {
    for (bool characteristic : {true, false}) {
      std::vector<double> hs, errs;
      for (int n : {16, 32, 64, 128}) {
        Axis ax{0.0, 2.0 * M_PI, n, true};
        EulerSolver1D solver(gas, sp, ax, periodic1(), characteristic);
        Field1 q = smooth_euler_state(ax, gas);
        Field1 dq(3, n);
        solver.rhs(q, 0.0, dq);
        // rho_t = -0.2 cos x; m_t = rho_t; E_t = rho_t / 2.
        double e = 0.0;
        for (int j = 0; j < n; ++j) {
          const double rt = -0.2 * std::cos(ax.x(j));
          e = std::max(e, std::abs(dq.at(0, j) - rt));
          e = std::max(e, std::abs(dq.at(1, j) - rt));
          e = std::max(e, std::abs(dq.at(2, j) - 0.5 * rt));
        }
        hs.push_back(ax.dx());
        errs.push_back(e);
      }
      INFO("characteristic = " << characteristic);
      CHECK(testutil::lsq_order(hs, errs) > 4.5);
    }
  }

  SECTION("2D") {
    // rho = 1 + 0.2 sin(x + y - 2t), u = v = 1, p = 1:
    // all four tendencies equal -0.4 cos(x+y) at t = 0.
    std::vector<double> hs, errs;
    for (int n : {12, 24, 48}) {
      Axis ax{0.0, 2.0 * M_PI, n, true};
      EulerSolver2D solver(gas, sp, ax, ax, periodic2());
      Field2 q(4, n, n), dq(4, n, n);
      for (int jy = 0; jy < n; ++jy)
        for (int jx = 0; jx < n; ++jx) {
          const double rho = 1.0 + 0.2 * std::sin(ax.x(jx) + ax.x(jy));
          q.at(0, jx, jy) = rho;
          q.at(1, jx, jy) = rho;
          q.at(2, jx, jy) = rho;
          q.at(3, jx, jy) = 1.0 / (gas.gamma - 1.0) + rho;
        }
      solver.rhs(q, 0.0, dq);
      double e = 0.0;
      for (int jy = 0; jy < n; ++jy)
        for (int jx = 0; jx < n; ++jx) {
          const double rt = -0.4 * std::cos(ax.x(jx) + ax.x(jy));
          for (int c = 0; c < 4; ++c)
            e = std::max(e, std::abs(dq.at(c, jx, jy) - rt));
        }
      hs.push_back(ax.dx());
      errs.push_back(e);
    }
    CHECK(testutil::lsq_order(hs, errs) > 4.3);
  }
}

TEST_CASE("characteristic and componentwise paths agree on smooth data",
          "[rhs]") {
  GasModel gas;
  Axis ax{0.0, 2.0 * M_PI, 64, true};
  const SchemeParams sp = SchemeParams::defaults(Scheme::ao543);
  EulerSolver1D sc(gas, sp, ax, periodic1(), true);
  EulerSolver1D sw(gas, sp, ax, periodic1(), false);
  Field1 qa = smooth_euler_state(ax, gas);
  Field1 qb = smooth_euler_state(ax, gas);
  Field1 da(3, 64), db(3, 64);
  sc.rhs(qa, 0.0, da);
  sw.rhs(qb, 0.0, db);
  for (int c = 0; c < 3; ++c)
    for (int j = 0; j < 64; ++j)
      CHECK_THAT(da.at(c, j) - db.at(c, j), WithinAbs(0.0, 1e-7));
}

TEST_CASE("wavespeed scans cover the interior and reject bad states", "[rhs]") {
  GasModel gas;
  Field1 q(3, 4);
  for (int j = 0; j < 4; ++j) {
    q.at(0, j) = 1.0;
    q.at(1, j) = 0.5;
    q.at(2, j) = 2.0;
  }
  // |u| + c with u = 0.5, p = 0.4*(2 - 0.125) = 0.75, c = sqrt(1.4*0.75).
  CHECK_THAT(max_wavespeed(q, gas),
             WithinAbs(0.5 + std::sqrt(1.4 * 0.75), 1e-14));
  // Garbage in the ghosts must not contribute.
  q.at(0, -1) = 1e9;
  q.at(1, -1) = 1e9;
  q.at(2, -1) = 1e18;
  CHECK_THAT(max_wavespeed(q, gas),
             WithinAbs(0.5 + std::sqrt(1.4 * 0.75), 1e-14));

  q.at(2, 1) = 0.1;  // E too small -> negative pressure
  CHECK_THROWS_AS(max_wavespeed(q, gas), NumericalError);
  CHECK_THROWS_AS(check_valid(q, gas), NumericalError);

  Field1 u(1, 3);
  u.at(0, 1) = std::nan("");
  CHECK_THROWS_AS(check_valid(u), NumericalError);
}

TEST_CASE("cfl time steps follow the wavespeed bounds", "[rhs]") {
  SECTION("scalar") {
    ScalarLaw law = ScalarLaw{ScalarKind::advection};
    Axis ax{0.0, 1.0, 10, true};
    ScalarSolver1D solver(law, SchemeParams::defaults(Scheme::js), ax,
                          periodic1());
    Field1 u(1, 10);
    for (int j = 0; j < 10; ++j) u.at(0, j) = 0.1 * j;
    CHECK_THAT(solver.cfl_dt(u, 0.95), WithinAbs(0.95 * 0.1, 1e-15));
  }
  SECTION("Euler 2D combines both axes") {
    GasModel gas;
    Axis x{0.0, 1.0, 10, false};
    Axis y{0.0, 2.0, 10, false};
    Boundary2 bc;
    EulerSolver2D solver(gas, SchemeParams::defaults(Scheme::js), x, y, bc);
    Field2 q(4, x.npts(), y.npts());
    for (int jy = 0; jy < y.npts(); ++jy)
      for (int jx = 0; jx < x.npts(); ++jx) {
        q.at(0, jx, jy) = 1.0;
        q.at(1, jx, jy) = 1.0;
        q.at(2, jx, jy) = -2.0;
        q.at(3, jx, jy) = 10.0;
      }
    const Signal2 s = max_wavespeed(q, gas);
    const double expect = 0.5 / (s.lx / x.dx() + s.ly / y.dx());
    CHECK_THAT(solver.cfl_dt(q, 0.5), WithinAbs(expect, 1e-15));
  }
}
