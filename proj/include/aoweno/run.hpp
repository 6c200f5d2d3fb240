#pragma once

// Runs one simulation of a catalog problem at a given resolution and scheme,
// timing the advance loop.

#include <chrono>
#include <string>
#include <vector>

#include "aoweno/problems.hpp"
#include "aoweno/rhs.hpp"
#include "aoweno/time_integration.hpp"

namespace aoweno {

struct SimResult {
  ProblemKind kind = ProblemKind::scalar;
  Axis x, y;
  Field1 u1;  // scalar / 1D Euler solution (per kind)
  Field2 u2;  // 2D Euler solution
  long steps = 0;
  double seconds = 0.0;
};

/// Scale the y resolution with the x override, preserving the problem's
/// default aspect ratio (dmr at n=800 becomes 800x200, and so on).
inline int scaled_ny(const Problem& p, int nx) {
  return static_cast<int>(
      std::lround(static_cast<double>(nx) * p.y.n / p.x.n));
}

inline SimResult run_simulation(const Problem& p, const SchemeParams& sp,
                                int nx, int ny = 0) {
  SimResult res;
  res.kind = p.kind;
  Axis ax = p.x;
  ax.n = nx;
  res.x = ax;

  const auto dt_fn = [&p](double dx_min) {
    return p.step.coeff * std::pow(dx_min, p.step.exponent);
  };
  using clock = std::chrono::steady_clock;

  if (p.kind == ProblemKind::scalar) {
    ScalarLaw law{p.scalar_kind};
    ScalarSolver1D solver(law, sp, ax, p.bc1);
    Field1 u(1, ax.npts());
    for (int j = 0; j < ax.npts(); ++j) u.at(0, j) = p.ic_scalar(ax.x(j));
    auto rhs = [&solver](Field1& q, double t, Field1& o) { solver.rhs(q, t, o); };
    auto dt_of = [&](const Field1& q, double) {
      return p.step.mode == StepControl::Mode::Cfl ? solver.cfl_dt(q, p.step.cfl)
                                                   : dt_fn(ax.dx());
    };
    const auto t0 = clock::now();
    res.steps = advance(u, 0.0, p.t_end, rhs, dt_of,
                        [](const Field1& q) { check_valid(q); });
    res.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    res.u1 = std::move(u);
  } else if (p.kind == ProblemKind::euler1) {
    EulerSolver1D solver(p.gas, sp, ax, p.bc1, p.characteristic, p.lf_scale);
    Field1 q(3, ax.npts());
    for (int j = 0; j < ax.npts(); ++j) {
      const Cons1 c = p.ic_euler1(ax.x(j));
      for (int k = 0; k < 3; ++k) q.at(k, j) = c[k];
    }
    auto rhs = [&solver](Field1& u, double t, Field1& o) { solver.rhs(u, t, o); };
    auto dt_of = [&](const Field1& u, double) {
      return p.step.mode == StepControl::Mode::Cfl ? solver.cfl_dt(u, p.step.cfl)
                                                   : dt_fn(ax.dx());
    };
    const GasModel gas = p.gas;
    const auto t0 = clock::now();
    res.steps = advance(q, 0.0, p.t_end, rhs, dt_of,
                        [gas](const Field1& u) { check_valid(u, gas); });
    res.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    res.u1 = std::move(q);
  } else {
    Axis ay = p.y;
    ay.n = ny > 0 ? ny : scaled_ny(p, nx);
    res.y = ay;
    EulerSolver2D solver(p.gas, sp, ax, ay, p.bc2, p.characteristic, p.gravity,
                         p.lf_scale);
    Field2 q(4, ax.npts(), ay.npts());
    for (int jy = 0; jy < ay.npts(); ++jy)
      for (int jx = 0; jx < ax.npts(); ++jx) {
        const Cons2 c = p.ic_euler2(ax.x(jx), ay.x(jy));
        for (int k = 0; k < 4; ++k) q.at(k, jx, jy) = c[k];
      }
    auto rhs = [&solver](Field2& u, double t, Field2& o) { solver.rhs(u, t, o); };
    auto dt_of = [&](const Field2& u, double) {
      return p.step.mode == StepControl::Mode::Cfl
                 ? solver.cfl_dt(u, p.step.cfl)
                 : dt_fn(std::min(ax.dx(), ay.dx()));
    };
    const GasModel gas = p.gas;
    const auto t0 = clock::now();
    res.steps = advance(q, 0.0, p.t_end, rhs, dt_of,
                        [gas](const Field2& u) { check_valid(u, gas); });
    res.seconds = std::chrono::duration<double>(clock::now() - t0).count();
    res.u2 = std::move(q);
  }
  return res;
}

/// The scalar profile or 1D density at the stored nodes.
inline std::vector<double> solution_values(const SimResult& r) {
  if (r.kind == ProblemKind::euler2)
    throw ConfigError("solution_values: 2D result needs a slice");
  std::vector<double> v(r.x.npts());
  for (int j = 0; j < r.x.npts(); ++j) v[j] = r.u1.at(0, j);
  return v;
}

/// Density along the horizontal cut y = ys (nearest stored row).
inline std::vector<double> slice_density(const SimResult& r, double ys) {
  if (r.kind != ProblemKind::euler2)
    throw ConfigError("slice_density: not a 2D result");
  const int jy = static_cast<int>(std::lround((ys - r.y.a) / r.y.dx()));
  const int jc = std::max(0, std::min(r.y.npts() - 1, jy));
  std::vector<double> v(r.x.npts());
  for (int jx = 0; jx < r.x.npts(); ++jx) v[jx] = r.u2.at(0, jx, jc);
  return v;
}

}  // namespace aoweno
