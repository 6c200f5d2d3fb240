#pragma once

// Conservation-law physics: scalar model equations and the compressible Euler
// equations in one and two space dimensions, with the pieces the flux-split
// finite-difference solver needs (fluxes, wavespeeds, characteristic
// decompositions at Roe-averaged interface states).

#include <array>
#include <cmath>

#include "aoweno/common.hpp"

namespace aoweno {

// ---------------------------------------------------------------------------
// Scalar conservation laws
// ---------------------------------------------------------------------------

enum class ScalarKind { advection, burgers };

struct ScalarLaw {
  ScalarKind kind = ScalarKind::advection;

  double flux(double u) const {
    return kind == ScalarKind::advection ? u : 0.5 * u * u;
  }
  /// |f'(u)|, the local characteristic speed.
  double wavespeed(double u) const {
    return kind == ScalarKind::advection ? 1.0 : std::abs(u);
  }
};

/// Lax–Friedrichs flux splitting f = f+ + f- with f± = (f ± lambda u)/2,
/// lambda the global wavespeed bound of the sweep.
inline void lf_split(double f, double u, double lambda, double& fp, double& fm) {
  fp = 0.5 * (f + lambda * u);
  fm = 0.5 * (f - lambda * u);
}

// ---------------------------------------------------------------------------
// Euler equations
// ---------------------------------------------------------------------------

struct GasModel {
  double gamma = 1.4;
};

using Cons1 = std::array<double, 3>;  // rho, rho*u, E
using Cons2 = std::array<double, 4>;  // rho, rho*u, rho*v, E

struct Prim1 {
  double rho, u, p;
};
struct Prim2 {
  double rho, u, v, p;
};

inline Cons1 conserved(const Prim1& w, const GasModel& gas) {
  return {w.rho, w.rho * w.u, w.p / (gas.gamma - 1.0) + 0.5 * w.rho * w.u * w.u};
}

inline Cons2 conserved(const Prim2& w, const GasModel& gas) {
  return {w.rho, w.rho * w.u, w.rho * w.v,
          w.p / (gas.gamma - 1.0) + 0.5 * w.rho * (w.u * w.u + w.v * w.v)};
}

inline Prim1 primitive(const Cons1& q, const GasModel& gas) {
  if (!(q[0] > 0.0)) throw NumericalError("nonpositive density");
  const double u = q[1] / q[0];
  const double p = (gas.gamma - 1.0) * (q[2] - 0.5 * q[1] * u);
  if (!(p > 0.0)) throw NumericalError("nonpositive pressure");
  return {q[0], u, p};
}

inline Prim2 primitive(const Cons2& q, const GasModel& gas) {
  if (!(q[0] > 0.0)) throw NumericalError("nonpositive density");
  const double u = q[1] / q[0], v = q[2] / q[0];
  const double p = (gas.gamma - 1.0) * (q[3] - 0.5 * (q[1] * u + q[2] * v));
  if (!(p > 0.0)) throw NumericalError("nonpositive pressure");
  return {q[0], u, v, p};
}

inline double pressure(const Cons1& q, const GasModel& gas) {
  return (gas.gamma - 1.0) * (q[2] - 0.5 * q[1] * q[1] / q[0]);
}

inline double pressure(const Cons2& q, const GasModel& gas) {
  return (gas.gamma - 1.0) * (q[3] - 0.5 * (q[1] * q[1] + q[2] * q[2]) / q[0]);
}

inline double sound_speed(double rho, double p, const GasModel& gas) {
  return std::sqrt(gas.gamma * p / rho);
}

inline Cons1 euler_flux(const Cons1& q, const GasModel& gas) {
  const double u = q[1] / q[0];
  const double p = (gas.gamma - 1.0) * (q[2] - 0.5 * q[1] * u);
  return {q[1], q[1] * u + p, (q[2] + p) * u};
}

/// Flux along one axis of the 2D system (axis 0: F(U), axis 1: G(U)).
inline Cons2 euler_flux(const Cons2& q, const GasModel& gas, int axis) {
  const double u = q[1] / q[0], v = q[2] / q[0];
  const double p = (gas.gamma - 1.0) * (q[3] - 0.5 * (q[1] * u + q[2] * v));
  if (axis == 0) return {q[1], q[1] * u + p, q[2] * u, (q[3] + p) * u};
  return {q[2], q[1] * v, q[2] * v + p, (q[3] + p) * v};
}

// ---------------------------------------------------------------------------
// Characteristic decompositions at Roe-averaged states
// ---------------------------------------------------------------------------

struct Eigen1 {
  double L[3][3];
  double R[3][3];
};

struct Eigen2 {
  double L[4][4];
  double R[4][4];
};

/// Left/right eigenvector pair of the flux Jacobian at the Roe average of the
/// two neighbouring states.  Rows of L project onto characteristic fields;
/// columns of R map back.
inline Eigen1 eigensystem(const Cons1& ql, const Cons1& qr, const GasModel& gas) {
  const double g1 = gas.gamma - 1.0;
  const double wl = std::sqrt(ql[0]), wr = std::sqrt(qr[0]);
  const double ul = ql[1] / ql[0], ur = qr[1] / qr[0];
  const double pl = g1 * (ql[2] - 0.5 * ql[1] * ul);
  const double pr = g1 * (qr[2] - 0.5 * qr[1] * ur);
  const double hl = (ql[2] + pl) / ql[0], hr = (qr[2] + pr) / qr[0];
  const double inv = 1.0 / (wl + wr);
  const double u = (wl * ul + wr * ur) * inv;
  const double h = (wl * hl + wr * hr) * inv;
  const double c2 = g1 * (h - 0.5 * u * u);
  if (!(c2 > 0.0)) throw NumericalError("imaginary sound speed at interface");
  const double c = std::sqrt(c2), ic = 1.0 / c;
  const double b1 = g1 / c2, b2 = 0.5 * b1 * u * u;

  Eigen1 e;
  e.R[0][0] = 1.0;       e.R[0][1] = 1.0;          e.R[0][2] = 1.0;
  e.R[1][0] = u - c;     e.R[1][1] = u;            e.R[1][2] = u + c;
  e.R[2][0] = h - u * c; e.R[2][1] = 0.5 * u * u;  e.R[2][2] = h + u * c;

  e.L[0][0] = 0.5 * (b2 + u * ic);
  e.L[0][1] = -0.5 * (b1 * u + ic);
  e.L[0][2] = 0.5 * b1;
  e.L[1][0] = 1.0 - b2;
  e.L[1][1] = b1 * u;
  e.L[1][2] = -b1;
  e.L[2][0] = 0.5 * (b2 - u * ic);
  e.L[2][1] = 0.5 * (-b1 * u + ic);
  e.L[2][2] = 0.5 * b1;
  return e;
}

/// 2D analogue along the given axis (0: x, 1: y).
inline Eigen2 eigensystem(const Cons2& ql, const Cons2& qr, const GasModel& gas,
                          int axis) {
  const double g1 = gas.gamma - 1.0;
  const double wl = std::sqrt(ql[0]), wr = std::sqrt(qr[0]);
  const double ul = ql[1] / ql[0], ur = qr[1] / qr[0];
  const double vl = ql[2] / ql[0], vr = qr[2] / qr[0];
  const double pl = g1 * (ql[3] - 0.5 * (ql[1] * ul + ql[2] * vl));
  const double pr = g1 * (qr[3] - 0.5 * (qr[1] * ur + qr[2] * vr));
  const double hl = (ql[3] + pl) / ql[0], hr = (qr[3] + pr) / qr[0];
  const double inv = 1.0 / (wl + wr);
  const double u = (wl * ul + wr * ur) * inv;
  const double v = (wl * vl + wr * vr) * inv;
  const double h = (wl * hl + wr * hr) * inv;
  const double q2 = u * u + v * v;
  const double c2 = g1 * (h - 0.5 * q2);
  if (!(c2 > 0.0)) throw NumericalError("imaginary sound speed at interface");
  const double c = std::sqrt(c2), ic = 1.0 / c;
  const double b1 = g1 / c2, b2 = 0.5 * b1 * q2;
  // n: normal velocity component, t: tangential.
  const double n = (axis == 0) ? u : v;
  const double t = (axis == 0) ? v : u;
  const int in = (axis == 0) ? 1 : 2;  // index of the normal momentum
  const int it = (axis == 0) ? 2 : 1;

  Eigen2 e;
  // Columns: acoustic-, entropy, shear, acoustic+.
  e.R[0][0] = 1.0;       e.R[0][1] = 1.0;      e.R[0][2] = 0.0; e.R[0][3] = 1.0;
  e.R[in][0] = n - c;    e.R[in][1] = n;       e.R[in][2] = 0.0; e.R[in][3] = n + c;
  e.R[it][0] = t;        e.R[it][1] = t;       e.R[it][2] = 1.0; e.R[it][3] = t;
  e.R[3][0] = h - n * c; e.R[3][1] = 0.5 * q2; e.R[3][2] = t;    e.R[3][3] = h + n * c;

  e.L[0][0] = 0.5 * (b2 + n * ic);
  e.L[0][in] = -0.5 * (b1 * n + ic);
  e.L[0][it] = -0.5 * b1 * t;
  e.L[0][3] = 0.5 * b1;
  e.L[1][0] = 1.0 - b2;
  e.L[1][in] = b1 * n;
  e.L[1][it] = b1 * t;
  e.L[1][3] = -b1;
  e.L[2][0] = -t;
  e.L[2][in] = 0.0;
  e.L[2][it] = 1.0;
  e.L[2][3] = 0.0;
  e.L[3][0] = 0.5 * (b2 - n * ic);
  e.L[3][in] = 0.5 * (-b1 * n + ic);
  e.L[3][it] = -0.5 * b1 * t;
  e.L[3][3] = 0.5 * b1;
  return e;
}

}  // namespace aoweno
