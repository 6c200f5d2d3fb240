#pragma once

// Vertex-centered grids and fields with ghost layers, plus boundary filling.
//
// An Axis spans [a,b] with spacing dx = (b-a)/n.  Periodic axes store the n
// unique points x_j = a + j dx, j = 0..n-1; bounded axes store all n+1 points
// including both ends.  Fields carry kGhost ghost points per side, addressed
// with signed indices: at(c, -1) is the first ghost left of the domain.

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "aoweno/common.hpp"
#include "aoweno/physics.hpp"

namespace aoweno {

inline constexpr int kGhost = 3;

struct Axis {
  double a = 0.0, b = 1.0;
  int n = 1;  // number of spacings
  bool periodic = false;

  double dx() const { return (b - a) / n; }
  int npts() const { return periodic ? n : n + 1; }
  double x(int j) const { return a + j * dx(); }
  double length() const { return b - a; }
};

class Field1 {
 public:
  Field1() = default;
  Field1(int ncomp, int npts)
      : nc_(ncomp), n_(npts), stride_(npts + 2 * kGhost),
        data_(static_cast<std::size_t>(ncomp) * stride_, 0.0) {}

  int ncomp() const { return nc_; }
  int npts() const { return n_; }

  double& at(int c, int j) { return data_[c * stride_ + (j + kGhost)]; }
  double at(int c, int j) const { return data_[c * stride_ + (j + kGhost)]; }

  /// Pointer such that comp(c)[j] is valid for j in [-kGhost, npts+kGhost).
  double* comp(int c) { return data_.data() + c * stride_ + kGhost; }
  const double* comp(int c) const { return data_.data() + c * stride_ + kGhost; }

  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }

 private:
  int nc_ = 0, n_ = 0, stride_ = 0;
  std::vector<double> data_;
};

class Field2 {
 public:
  Field2() = default;
  Field2(int ncomp, int nx, int ny)
      : nc_(ncomp), nx_(nx), ny_(ny), sx_(nx + 2 * kGhost),
        sc_(static_cast<std::size_t>(sx_) * (ny + 2 * kGhost)),
        data_(static_cast<std::size_t>(ncomp) * sc_, 0.0) {}

  int ncomp() const { return nc_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }

  double& at(int c, int jx, int jy) {
    return data_[c * sc_ + static_cast<std::size_t>(jy + kGhost) * sx_ + (jx + kGhost)];
  }
  double at(int c, int jx, int jy) const {
    return data_[c * sc_ + static_cast<std::size_t>(jy + kGhost) * sx_ + (jx + kGhost)];
  }

  /// Contiguous x-row of one component; row(c, jy)[jx] valid for
  /// jx in [-kGhost, nx+kGhost).
  double* row(int c, int jy) {
    return data_.data() + c * sc_ + static_cast<std::size_t>(jy + kGhost) * sx_ + kGhost;
  }
  const double* row(int c, int jy) const {
    return data_.data() + c * sc_ + static_cast<std::size_t>(jy + kGhost) * sx_ + kGhost;
  }

  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }

 private:
  int nc_ = 0, nx_ = 0, ny_ = 0, sx_ = 0;
  std::size_t sc_ = 0;
  std::vector<double> data_;
};

// ---------------------------------------------------------------------------
// Boundary conditions
// ---------------------------------------------------------------------------

enum class BC { periodic, transmissive, reflective, dirichlet, custom };

struct Side1 {
  BC kind = BC::transmissive;
  std::array<double, 3> state{};  // dirichlet ghost state (conserved)
};

struct Boundary1 {
  Side1 left, right;
  /// Component negated when mirroring at a reflective wall (-1: none).
  int flip_comp = -1;
  /// Optional override running after the standard sides (inflow laws etc.).
  std::function<void(Field1&, double)> custom;
};

inline void apply_boundaries(Field1& f, const Boundary1& bc, double t) {
  const int n = f.npts();
  const int nc = f.ncomp();
  for (int c = 0; c < nc; ++c) {
    double* u = f.comp(c);
    const double sgn = (c == bc.flip_comp) ? -1.0 : 1.0;
    for (int k = 1; k <= kGhost; ++k) {
      switch (bc.left.kind) {
        case BC::periodic: u[-k] = u[n - k]; break;
        case BC::transmissive: u[-k] = u[0]; break;
        case BC::reflective: u[-k] = sgn * u[k]; break;
        case BC::dirichlet: u[-k] = bc.left.state[c]; break;
        case BC::custom: break;
      }
      switch (bc.right.kind) {
        case BC::periodic: u[n - 1 + k] = u[k - 1]; break;
        case BC::transmissive: u[n - 1 + k] = u[n - 1]; break;
        case BC::reflective: u[n - 1 + k] = sgn * u[n - 1 - k]; break;
        case BC::dirichlet: u[n - 1 + k] = bc.right.state[c]; break;
        case BC::custom: break;
      }
    }
  }
  if (bc.custom) bc.custom(f, t);
}

struct Side2 {
  BC kind = BC::transmissive;
  std::array<double, 4> state{};
};

struct Boundary2 {
  Side2 xlo, xhi, ylo, yhi;
  /// Optional override for mixed/time-dependent conditions; runs after the
  /// standard sides have been filled.
  std::function<void(Field2&, double)> custom;
};

/// Fill the ghost bands.  x ghosts are filled for interior rows, y ghosts for
/// interior columns; reconstruction sweeps never read corner ghosts.
inline void apply_boundaries(Field2& f, const Boundary2& bc, double t) {
  const int nx = f.nx(), ny = f.ny(), nc = f.ncomp();
  for (int c = 0; c < nc; ++c) {
    const double sx = (c == 1) ? -1.0 : 1.0;  // x-normal momentum flip
    const double sy = (c == 2) ? -1.0 : 1.0;
    for (int jy = 0; jy < ny; ++jy) {
      double* u = f.row(c, jy);
      for (int k = 1; k <= kGhost; ++k) {
        switch (bc.xlo.kind) {
          case BC::periodic: u[-k] = u[nx - k]; break;
          case BC::transmissive: u[-k] = u[0]; break;
          case BC::reflective: u[-k] = sx * u[k]; break;
          case BC::dirichlet: u[-k] = bc.xlo.state[c]; break;
          case BC::custom: break;
        }
        switch (bc.xhi.kind) {
          case BC::periodic: u[nx - 1 + k] = u[k - 1]; break;
          case BC::transmissive: u[nx - 1 + k] = u[nx - 1]; break;
          case BC::reflective: u[nx - 1 + k] = sx * u[nx - 1 - k]; break;
          case BC::dirichlet: u[nx - 1 + k] = bc.xhi.state[c]; break;
          case BC::custom: break;
        }
      }
    }
    for (int jx = 0; jx < nx; ++jx) {
      for (int k = 1; k <= kGhost; ++k) {
        switch (bc.ylo.kind) {
          case BC::periodic: f.at(c, jx, -k) = f.at(c, jx, ny - k); break;
          case BC::transmissive: f.at(c, jx, -k) = f.at(c, jx, 0); break;
          case BC::reflective: f.at(c, jx, -k) = sy * f.at(c, jx, k); break;
          case BC::dirichlet: f.at(c, jx, -k) = bc.ylo.state[c]; break;
          case BC::custom: break;
        }
        switch (bc.yhi.kind) {
          case BC::periodic: f.at(c, jx, ny - 1 + k) = f.at(c, jx, k - 1); break;
          case BC::transmissive: f.at(c, jx, ny - 1 + k) = f.at(c, jx, ny - 1); break;
          case BC::reflective: f.at(c, jx, ny - 1 + k) = sy * f.at(c, jx, ny - 1 - k); break;
          case BC::dirichlet: f.at(c, jx, ny - 1 + k) = bc.yhi.state[c]; break;
          case BC::custom: break;
        }
      }
    }
  }
  if (bc.custom) bc.custom(f, t);
}

}  // namespace aoweno
