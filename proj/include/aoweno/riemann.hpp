#pragma once

// Exact solver for the 1D Riemann problem of the Euler equations with an
// ideal gas: Newton iteration for the star pressure, self-similar sampling of
// the wave fan.  Used to build reference solutions for shock-tube problems.

#include <algorithm>
#include <cmath>

#include "aoweno/common.hpp"
#include "aoweno/physics.hpp"

namespace aoweno {

struct StarState {
  double p, u;
};

namespace detail {

/// Velocity change across the wave connecting state (rho, p, c) to pressure
/// level `pr`, and its derivative with respect to pr.
inline void wave_function(double pr, double rho, double p, double c, double g,
                          double& f, double& df) {
  if (pr > p) {  // shock
    const double a = 2.0 / ((g + 1.0) * rho);
    const double b = (g - 1.0) / (g + 1.0) * p;
    const double s = std::sqrt(a / (pr + b));
    f = (pr - p) * s;
    df = s * (1.0 - 0.5 * (pr - p) / (b + pr));
  } else {  // rarefaction
    const double ex = (g - 1.0) / (2.0 * g);
    f = 2.0 * c / (g - 1.0) * (std::pow(pr / p, ex) - 1.0);
    df = std::pow(pr / p, -(g + 1.0) / (2.0 * g)) / (rho * c);
  }
}

}  // namespace detail

/// Pressure and velocity between the two nonlinear waves.
inline StarState star_state(const Prim1& l, const Prim1& r, const GasModel& gas) {
  const double g = gas.gamma;
  const double cl = sound_speed(l.rho, l.p, gas);
  const double cr = sound_speed(r.rho, r.p, gas);
  const double du = r.u - l.u;
  if (2.0 * (cl + cr) / (g - 1.0) <= du)
    throw NumericalError("Riemann problem develops vacuum");

  // Primitive-variable two-rarefaction style initial guess, clipped positive.
  double p = 0.5 * (l.p + r.p) - 0.125 * du * (l.rho + r.rho) * (cl + cr);
  p = std::max(p, 1e-12 * std::min(l.p, r.p));

  double fl, dfl, fr, dfr;
  for (int it = 0; it < 200; ++it) {
    detail::wave_function(p, l.rho, l.p, cl, g, fl, dfl);
    detail::wave_function(p, r.rho, r.p, cr, g, fr, dfr);
    const double step = (fl + fr + du) / (dfl + dfr);
    double pn = p - step;
    if (pn <= 0.0) pn = 0.5 * p;  // damped step keeps the iterate positive
    if (std::abs(pn - p) <= 1e-15 * pn) {
      p = pn;
      break;
    }
    p = pn;
    if (it == 199) throw NumericalError("star-pressure iteration did not converge");
  }
  detail::wave_function(p, l.rho, l.p, cl, g, fl, dfl);
  detail::wave_function(p, r.rho, r.p, cr, g, fr, dfr);
  return {p, 0.5 * (l.u + r.u) + 0.5 * (fr - fl)};
}

/// Self-similar solution sampled at xi = x/t.
inline Prim1 exact_riemann(const Prim1& l, const Prim1& r, const GasModel& gas,
                           double xi) {
  const double g = gas.gamma;
  const StarState st = star_state(l, r, gas);
  const double cl = sound_speed(l.rho, l.p, gas);
  const double cr = sound_speed(r.rho, r.p, gas);
  const double gm = (g - 1.0) / (g + 1.0);

  if (xi <= st.u) {
    // Left of the contact.
    if (st.p > l.p) {  // left shock
      const double sl =
          l.u - cl * std::sqrt((g + 1.0) / (2.0 * g) * st.p / l.p + (g - 1.0) / (2.0 * g));
      if (xi <= sl) return l;
      const double rho = l.rho * (st.p / l.p + gm) / (gm * st.p / l.p + 1.0);
      return {rho, st.u, st.p};
    }
    const double head = l.u - cl;
    const double cstar = cl * std::pow(st.p / l.p, (g - 1.0) / (2.0 * g));
    const double tail = st.u - cstar;
    if (xi <= head) return l;
    if (xi >= tail) return {l.rho * std::pow(st.p / l.p, 1.0 / g), st.u, st.p};
    const double c = 2.0 / (g + 1.0) * (cl + 0.5 * (g - 1.0) * (l.u - xi));
    const double u = 2.0 / (g + 1.0) * (cl + 0.5 * (g - 1.0) * l.u + xi);
    return {l.rho * std::pow(c / cl, 2.0 / (g - 1.0)), u,
            l.p * std::pow(c / cl, 2.0 * g / (g - 1.0))};
  }

  // Right of the contact.
  if (st.p > r.p) {  // right shock
    const double sr =
        r.u + cr * std::sqrt((g + 1.0) / (2.0 * g) * st.p / r.p + (g - 1.0) / (2.0 * g));
    if (xi >= sr) return r;
    const double rho = r.rho * (st.p / r.p + gm) / (gm * st.p / r.p + 1.0);
    return {rho, st.u, st.p};
  }
  const double head = r.u + cr;
  const double cstar = cr * std::pow(st.p / r.p, (g - 1.0) / (2.0 * g));
  const double tail = st.u + cstar;
  if (xi >= head) return r;
  if (xi <= tail) return {r.rho * std::pow(st.p / r.p, 1.0 / g), st.u, st.p};
  const double c = 2.0 / (g + 1.0) * (cr - 0.5 * (g - 1.0) * (r.u - xi));
  const double u = 2.0 / (g + 1.0) * (-cr + 0.5 * (g - 1.0) * r.u + xi);
  return {r.rho * std::pow(c / cr, 2.0 / (g - 1.0)), u,
          r.p * std::pow(c / cr, 2.0 * g / (g - 1.0))};
}

}  // namespace aoweno
