#pragma once

// Semi-discrete right-hand sides: du/dt = -(F_{j+1/2} - F_{j-1/2})/dx with
// interface fluxes from Lax-Friedrichs-split WENO reconstruction.
//
// Index conventions: interior points j = 0..P-1 need the P+1 interface fluxes
// F[k] at x_{k-1/2}, k = 0..P.  The upwind window of F[k] covers points
// k-3..k+1 of the positive flux part and k-2..k+2 of the negative part, which
// is exactly what kGhost = 3 ghost points provide.

#include <algorithm>
#include <cmath>
#include <vector>

#include "aoweno/grid.hpp"
#include "aoweno/physics.hpp"
#include "aoweno/stencil.hpp"

namespace aoweno {

// ---------------------------------------------------------------------------
// Wavespeed bounds and state validation (interior points)
// ---------------------------------------------------------------------------

inline double max_wavespeed(const Field1& u, const ScalarLaw& law) {
  double m = 0.0;
  const double* v = u.comp(0);
  for (int j = 0; j < u.npts(); ++j) m = std::max(m, law.wavespeed(v[j]));
  return m;
}

inline double max_wavespeed(const Field1& q, const GasModel& gas) {
  double m = 0.0;
  const double g1 = gas.gamma - 1.0;
  for (int j = 0; j < q.npts(); ++j) {
    const double rho = q.at(0, j), mu = q.at(1, j), e = q.at(2, j);
    const double u = mu / rho;
    const double p = g1 * (e - 0.5 * mu * u);
    if (!(rho > 0.0) || !(p > 0.0)) throw NumericalError("invalid state in wavespeed scan");
    m = std::max(m, std::abs(u) + std::sqrt(gas.gamma * p / rho));
  }
  return m;
}

struct Signal2 {
  double lx, ly;
};

inline Signal2 max_wavespeed(const Field2& q, const GasModel& gas) {
  Signal2 s{0.0, 0.0};
  const double g1 = gas.gamma - 1.0;
  for (int jy = 0; jy < q.ny(); ++jy) {
    const double* r = q.row(0, jy);
    const double* mu = q.row(1, jy);
    const double* mv = q.row(2, jy);
    const double* e = q.row(3, jy);
    for (int jx = 0; jx < q.nx(); ++jx) {
      const double rho = r[jx];
      const double u = mu[jx] / rho, v = mv[jx] / rho;
      const double p = g1 * (e[jx] - 0.5 * (mu[jx] * u + mv[jx] * v));
      if (!(rho > 0.0) || !(p > 0.0))
        throw NumericalError("invalid state in wavespeed scan");
      const double c = std::sqrt(gas.gamma * p / rho);
      s.lx = std::max(s.lx, std::abs(u) + c);
      s.ly = std::max(s.ly, std::abs(v) + c);
    }
  }
  return s;
}

inline void check_valid(const Field1& u) {
  for (int j = 0; j < u.npts(); ++j)
    for (int c = 0; c < u.ncomp(); ++c)
      if (!finite(u.at(c, j))) throw NumericalError("non-finite value in solution");
}

inline void check_valid(const Field1& q, const GasModel& gas) {
  for (int j = 0; j < q.npts(); ++j) {
    const double rho = q.at(0, j), mu = q.at(1, j), e = q.at(2, j);
    if (!finite(rho) || !finite(mu) || !finite(e))
      throw NumericalError("non-finite value in solution");
    const double p = (gas.gamma - 1.0) * (e - 0.5 * mu * mu / rho);
    if (!(rho > 0.0)) throw NumericalError("nonpositive density");
    if (!(p > 0.0)) throw NumericalError("nonpositive pressure");
  }
}

inline void check_valid(const Field2& q, const GasModel& gas) {
  for (int jy = 0; jy < q.ny(); ++jy)
    for (int jx = 0; jx < q.nx(); ++jx) {
      const double rho = q.at(0, jx, jy), mu = q.at(1, jx, jy);
      const double mv = q.at(2, jx, jy), e = q.at(3, jx, jy);
      if (!finite(rho) || !finite(mu) || !finite(mv) || !finite(e))
        throw NumericalError("non-finite value in solution");
      const double p = (gas.gamma - 1.0) * (e - 0.5 * (mu * mu + mv * mv) / rho);
      if (!(rho > 0.0)) throw NumericalError("nonpositive density");
      if (!(p > 0.0)) throw NumericalError("nonpositive pressure");
    }
}

// ---------------------------------------------------------------------------
// Scalar conservation laws, one dimension
// ---------------------------------------------------------------------------

class ScalarSolver1D {
 public:
  ScalarSolver1D(ScalarLaw law, const SchemeParams& sp, Axis ax, Boundary1 bc)
      : law_(law), recon_(sp), ax_(ax), bc_(std::move(bc)) {
    const int p = ax_.npts();
    fp_.resize(p + 2 * kGhost);
    fm_.resize(p + 2 * kGhost);
    flux_.resize(p + 1);
  }

  const Axis& axis() const { return ax_; }

  double cfl_dt(const Field1& u, double cfl) const {
    return cfl * ax_.dx() / std::max(max_wavespeed(u, law_), 1e-300);
  }

  /// Fills the ghosts of u, writes the tendency of the interior points.
  void rhs(Field1& u, double t, Field1& out) {
    apply_boundaries(u, bc_, t);
    const int p = ax_.npts();
    const double* v = u.comp(0);
    const double lam = max_wavespeed(u, law_);
    for (int j = -kGhost; j < p + kGhost; ++j) {
      const double f = law_.flux(v[j]);
      fp_[j + kGhost] = 0.5 * (f + lam * v[j]);
      fm_[j + kGhost] = 0.5 * (f - lam * v[j]);
    }
    for (int k = 0; k <= p; ++k) {
      const double* wp = fp_.data() + k;      // ext indices k-3 .. k+1
      const double* wm = fm_.data() + k + 1;  // ext indices k-2 .. k+2
      flux_[k] = recon_(wp) + recon_.negative(wm);
    }
    const double idx = 1.0 / ax_.dx();
    double* d = out.comp(0);
    for (int j = 0; j < p; ++j) d[j] = -(flux_[j + 1] - flux_[j]) * idx;
  }

 private:
  ScalarLaw law_;
  Reconstructor recon_;
  Axis ax_;
  Boundary1 bc_;
  std::vector<double> fp_, fm_, flux_;
};

// ---------------------------------------------------------------------------
// Euler equations, one dimension
// ---------------------------------------------------------------------------

class EulerSolver1D {
 public:
  EulerSolver1D(GasModel gas, const SchemeParams& sp, Axis ax, Boundary1 bc,
                bool characteristic = true, double lf_scale = 1.0)
      : gas_(gas), recon_(sp), ax_(ax), bc_(std::move(bc)), char_(characteristic),
        lf_scale_(lf_scale) {
    const int p = ax_.npts();
    fp_.resize(p + 2 * kGhost);
    fm_.resize(p + 2 * kGhost);
    flux_.resize(p + 1);
  }

  const Axis& axis() const { return ax_; }
  const GasModel& gas() const { return gas_; }

  double cfl_dt(const Field1& q, double cfl) const {
    return cfl * ax_.dx() / max_wavespeed(q, gas_);
  }

  void rhs(Field1& q, double t, Field1& out) {
    apply_boundaries(q, bc_, t);
    const int p = ax_.npts();
    const double lam = lf_scale_ * max_wavespeed(q, gas_);
    const double* u0 = q.comp(0);
    const double* u1 = q.comp(1);
    const double* u2 = q.comp(2);
    for (int j = -kGhost; j < p + kGhost; ++j) {
      const Cons1 qq{u0[j], u1[j], u2[j]};
      const Cons1 f = euler_flux(qq, gas_);
      for (int c = 0; c < 3; ++c) {
        fp_[j + kGhost][c] = 0.5 * (f[c] + lam * qq[c]);
        fm_[j + kGhost][c] = 0.5 * (f[c] - lam * qq[c]);
      }
    }
    for (int k = 0; k <= p; ++k) {
      const Cons1 ql{u0[k - 1], u1[k - 1], u2[k - 1]};
      const Cons1 qr{u0[k], u1[k], u2[k]};
      const Cons1* fpw = fp_.data() + k;      // window ext k-3 .. k+1
      const Cons1* fmw = fm_.data() + k + 1;  // window ext k-2 .. k+2
      if (char_) {
        const Eigen1 e = eigensystem(ql, qr, gas_);
        double cf[3];
        for (int m = 0; m < 3; ++m) {
          const double* L = e.L[m];
          double wp[5], wm[5];
          for (int s = 0; s < 5; ++s) {
            wp[s] = L[0] * fpw[s][0] + L[1] * fpw[s][1] + L[2] * fpw[s][2];
            wm[s] = L[0] * fmw[s][0] + L[1] * fmw[s][1] + L[2] * fmw[s][2];
          }
          cf[m] = recon_(wp) + recon_.negative(wm);
        }
        for (int c = 0; c < 3; ++c)
          flux_[k][c] = e.R[c][0] * cf[0] + e.R[c][1] * cf[1] + e.R[c][2] * cf[2];
      } else {
        for (int c = 0; c < 3; ++c) {
          double wp[5], wm[5];
          for (int s = 0; s < 5; ++s) {
            wp[s] = fpw[s][c];
            wm[s] = fmw[s][c];
          }
          flux_[k][c] = recon_(wp) + recon_.negative(wm);
        }
      }
    }
    const double idx = 1.0 / ax_.dx();
    for (int c = 0; c < 3; ++c) {
      double* d = out.comp(c);
      for (int j = 0; j < p; ++j) d[j] = -(flux_[j + 1][c] - flux_[j][c]) * idx;
    }
  }

 private:
  GasModel gas_;
  Reconstructor recon_;
  Axis ax_;
  Boundary1 bc_;
  bool char_;
  double lf_scale_;
  std::vector<Cons1> fp_, fm_, flux_;
};

// ---------------------------------------------------------------------------
// Euler equations, two dimensions (dimension-by-dimension sweeps)
// ---------------------------------------------------------------------------

class EulerSolver2D {
 public:
  EulerSolver2D(GasModel gas, const SchemeParams& sp, Axis x, Axis y, Boundary2 bc,
                bool characteristic = true, bool gravity = false,
                double lf_scale = 1.0)
      : gas_(gas), recon_(sp), x_(x), y_(y), bc_(std::move(bc)),
        char_(characteristic), gravity_(gravity), lf_scale_(lf_scale) {
    const int m = std::max(x_.npts(), y_.npts());
    line_.resize(m + 2 * kGhost);
    fp_.resize(m + 2 * kGhost);
    fm_.resize(m + 2 * kGhost);
    flux_.resize(m + 1);
  }

  const Axis& xaxis() const { return x_; }
  const Axis& yaxis() const { return y_; }
  const GasModel& gas() const { return gas_; }

  double cfl_dt(const Field2& q, double cfl) const {
    const Signal2 s = max_wavespeed(q, gas_);
    return cfl / (s.lx / x_.dx() + s.ly / y_.dx());
  }

  void rhs(Field2& q, double t, Field2& out) {
    apply_boundaries(q, bc_, t);
    const int nx = x_.npts(), ny = y_.npts();
    Signal2 lam = max_wavespeed(q, gas_);
    lam.lx *= lf_scale_;
    lam.ly *= lf_scale_;

    // x sweeps
    const double idx = 1.0 / x_.dx();
    for (int jy = 0; jy < ny; ++jy) {
      const double* r0 = q.row(0, jy);
      const double* r1 = q.row(1, jy);
      const double* r2 = q.row(2, jy);
      const double* r3 = q.row(3, jy);
      for (int jx = -kGhost; jx < nx + kGhost; ++jx)
        line_[jx + kGhost] = {r0[jx], r1[jx], r2[jx], r3[jx]};
      line_fluxes(nx, lam.lx, 0);
      for (int c = 0; c < 4; ++c) {
        double* d = out.row(c, jy);
        for (int jx = 0; jx < nx; ++jx)
          d[jx] = -(flux_[jx + 1][c] - flux_[jx][c]) * idx;
      }
    }

    // y sweeps
    const double idy = 1.0 / y_.dx();
    for (int jx = 0; jx < nx; ++jx) {
      for (int jy = -kGhost; jy < ny + kGhost; ++jy)
        line_[jy + kGhost] = {q.at(0, jx, jy), q.at(1, jx, jy), q.at(2, jx, jy),
                              q.at(3, jx, jy)};
      line_fluxes(ny, lam.ly, 1);
      for (int jy = 0; jy < ny; ++jy)
        for (int c = 0; c < 4; ++c)
          out.at(c, jx, jy) -= (flux_[jy + 1][c] - flux_[jy][c]) * idy;
    }

    if (gravity_) {
      // Source (0, 0, rho, rho v): gravity along +y.
      for (int jy = 0; jy < ny; ++jy)
        for (int jx = 0; jx < nx; ++jx) {
          out.at(2, jx, jy) += q.at(0, jx, jy);
          out.at(3, jx, jy) += q.at(2, jx, jy);
        }
    }
  }

 private:
  void line_fluxes(int n, double lam, int axis) {
    for (int j = 0; j < n + 2 * kGhost; ++j) {
      const Cons2& qq = line_[j];
      const Cons2 f = euler_flux(qq, gas_, axis);
      for (int c = 0; c < 4; ++c) {
        fp_[j][c] = 0.5 * (f[c] + lam * qq[c]);
        fm_[j][c] = 0.5 * (f[c] - lam * qq[c]);
      }
    }
    for (int k = 0; k <= n; ++k) {
      const Cons2& ql = line_[k + kGhost - 1];
      const Cons2& qr = line_[k + kGhost];
      const Cons2* fpw = fp_.data() + k;      // window ext k-3 .. k+1
      const Cons2* fmw = fm_.data() + k + 1;  // window ext k-2 .. k+2
      if (char_) {
        const Eigen2 e = eigensystem(ql, qr, gas_, axis);
        double cf[4];
        for (int m = 0; m < 4; ++m) {
          const double* L = e.L[m];
          double wp[5], wm[5];
          for (int s = 0; s < 5; ++s) {
            wp[s] = L[0] * fpw[s][0] + L[1] * fpw[s][1] + L[2] * fpw[s][2] +
                    L[3] * fpw[s][3];
            wm[s] = L[0] * fmw[s][0] + L[1] * fmw[s][1] + L[2] * fmw[s][2] +
                    L[3] * fmw[s][3];
          }
          cf[m] = recon_(wp) + recon_.negative(wm);
        }
        for (int c = 0; c < 4; ++c)
          flux_[k][c] = e.R[c][0] * cf[0] + e.R[c][1] * cf[1] + e.R[c][2] * cf[2] +
                        e.R[c][3] * cf[3];
      } else {
        for (int c = 0; c < 4; ++c) {
          double wp[5], wm[5];
          for (int s = 0; s < 5; ++s) {
            wp[s] = fpw[s][c];
            wm[s] = fmw[s][c];
          }
          flux_[k][c] = recon_(wp) + recon_.negative(wm);
        }
      }
    }
  }

  GasModel gas_;
  Reconstructor recon_;
  Axis x_, y_;
  Boundary2 bc_;
  bool char_;
  bool gravity_;
  double lf_scale_;
  std::vector<Cons2> line_, fp_, fm_, flux_;
};

}  // namespace aoweno
