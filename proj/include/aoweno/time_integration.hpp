#pragma once

// Third-order strong-stability-preserving Runge-Kutta time stepping and the
// driver loop that advances a solution to a fixed final time.

#include <cmath>
#include <cstddef>
#include <string>

#include "aoweno/common.hpp"

namespace aoweno {

// How the step size is chosen each step.
//   Cfl:   dt = cfl * (stability limit reported by the solver)
//   Power: dt = coeff * dx^exponent   (used for convergence studies so the
//          temporal error decays faster than the spatial error)
struct StepControl {
  enum class Mode { Cfl, Power };
  Mode mode = Mode::Cfl;
  double cfl = 0.95;
  double coeff = 0.5;
  double exponent = 1.5;
};

// One SSP-RK3 step (Shu-Osher form):
//   u1 = u + dt L(u)
//   u2 = 3/4 u + 1/4 (u1 + dt L(u1))
//   u  = 1/3 u + 2/3 (u2 + dt L(u2))
// Stage combinations run over the full storage including ghost zones; ghost
// values are refreshed by the RHS before they are ever read, so any stale
// ghost data in the stage fields is harmless.
//
// Rhs must be callable as rhs(const Field&, double t, Field& out).  The
// scratch fields must have the same layout as u.
template <class Field, class Rhs>
void ssp_rk3_step(Field& u, double t, double dt, Rhs&& rhs, Field& u1,
                  Field& u2, Field& du) {
  auto& uu = u.raw();
  auto& v1 = u1.raw();
  auto& v2 = u2.raw();
  auto& dv = du.raw();
  const std::size_t n = uu.size();

  rhs(u, t, du);
  for (std::size_t i = 0; i < n; ++i) v1[i] = uu[i] + dt * dv[i];

  rhs(u1, t + dt, du);
  for (std::size_t i = 0; i < n; ++i)
    v2[i] = 0.75 * uu[i] + 0.25 * (v1[i] + dt * dv[i]);

  rhs(u2, t + 0.5 * dt, du);
  for (std::size_t i = 0; i < n; ++i)
    uu[i] = (1.0 / 3.0) * uu[i] + (2.0 / 3.0) * (v2[i] + dt * dv[i]);
}

// Advance u from t0 to t_end.  dt_of(u, t) proposes the step size; the final
// step is clipped so the run ends exactly at t_end.  check(u) is invoked
// after every step and should throw NumericalError if the state is invalid
// (NaN, negative density/pressure, ...).  Returns the number of steps taken.
template <class Field, class Rhs, class DtFn, class CheckFn>
long advance(Field& u, double t0, double t_end, Rhs&& rhs, DtFn&& dt_of,
             CheckFn&& check, long max_steps = 50'000'000) {
  Field u1 = u;
  Field u2 = u;
  Field du = u;

  double t = t0;
  long steps = 0;
  while (t < t_end) {
    double dt = dt_of(u, t);
    if (!finite(dt) || dt <= 0.0)
      throw NumericalError("advance: non-positive or non-finite dt at t=" +
                           std::to_string(t));
    bool last = false;
    if (t + dt >= t_end) {
      dt = t_end - t;
      last = true;
    }
    ssp_rk3_step(u, t, dt, rhs, u1, u2, du);
    t = last ? t_end : t + dt;
    ++steps;
    check(u);
    if (steps >= max_steps)
      throw NumericalError("advance: step limit reached at t=" +
                           std::to_string(t));
  }
  return steps;
}

}  // namespace aoweno
