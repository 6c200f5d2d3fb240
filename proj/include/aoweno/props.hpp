#pragma once

// Measured-order checks for the reconstruction kernel: convergence rates of
// the nonlinear-weight deviation, the interface error, the agreement between
// the big-stencil smoothness indicator variants, and the accuracy of the
// (5,4,3) scheme across a jump confined to the widest stencil.

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "aoweno/stencil.hpp"

namespace aoweno {

struct PropResult {
  std::string name;
  double measured = 0.0;
  double stated = 0.0;
};

namespace detail {

/// Five sliding cell averages of sin over cells of width h centered at
/// xc + k h, k = -2..2.  Reconstruction from these targets sin(xc + h/2).
inline std::array<double, 5> avg_sin_window(double xc, double h) {
  std::array<double, 5> f{};
  for (int k = 0; k < 5; ++k) {
    const double x = xc + (k - 2) * h;
    f[k] = (std::cos(x - 0.5 * h) - std::cos(x + 0.5 * h)) / h;
  }
  return f;
}

/// Least-squares slope of log(e) against log(h).
inline double fit_order(const std::vector<double>& hs, const std::vector<double>& es) {
  const int n = static_cast<int>(hs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double x = std::log(hs[i]), y = std::log(es[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

/// Max of `err(window, h)` over a spread of window centers away from the
/// critical points of sin.
template <class Err>
double max_error(double h, Err&& err) {
  double worst = 0.0;
  for (int j = 0; j < 64; ++j) {
    const double xc = 0.1 + 0.9 * j / 63.0;
    worst = std::max(worst, err(avg_sin_window(xc, h), xc, h));
  }
  return worst;
}

template <class Err>
double measured_order(Err&& err) {
  std::vector<double> hs, es;
  double h = 0.2;
  for (int level = 0; level < 5; ++level, h *= 0.5) {
    hs.push_back(h);
    es.push_back(max_error(h, err));
  }
  return fit_order(hs, es);
}

}  // namespace detail

/// Runs every measured-order check and returns (name, measured, stated)
/// triples.  A result passes when `measured >= stated - 0.3`.
inline std::vector<PropResult> property_suite() {
  using Window = std::array<double, 5>;
  std::vector<PropResult> out;

  const Reconstructor ao53{Scheme::ao53};
  const WeightVector gamma = linear_weights(ao53.params());

  out.push_back({"omega_gamma_deviation",
                 detail::measured_order([&](const Window& f, double, double) {
                   const WeightVector w = ao53.weights(f.data());
                   double d = 0.0;
                   for (int k = 0; k < 5; ++k) d = std::max(d, std::abs(w[k] - gamma[k]));
                   return d;
                 }),
                 4.0});

  out.push_back({"interface_error",
                 detail::measured_order([&](const Window& f, double xc, double h) {
                   return std::abs(ao53(f.data()) - std::sin(xc + 0.5 * h));
                 }),
                 5.0});

  out.push_back({"beta5_simple_vs_taylor",
                 detail::measured_order([](const Window& f, double, double) {
                   return std::abs(beta5_v3(beta3(f.data())) - beta5_v1(f.data()));
                 }),
                 5.0});

  out.push_back({"beta5_ratio_vs_taylor",
                 detail::measured_order([](const Window& f, double, double) {
                   return std::abs(beta5_v2(beta3(f.data())) - beta5_v1(f.data()));
                 }),
                 4.0});

  // A unit jump added to the leftmost sample only: the widest stencil sees it
  // but the central four points stay smooth.  With equal center/right cubic
  // weights the (5,4,3) reconstruction keeps fourth order across it.
  SchemeParams jp = SchemeParams::defaults(Scheme::ao543);
  jp.gamma_lo = 1.0 / 3.0;
  const Reconstructor ao543{jp};
  out.push_back({"ao543_cross_jump",
                 detail::measured_order([&](Window f, double xc, double h) {
                   f[0] += 1.0;
                   return std::abs(ao543(f.data()) - std::sin(xc + 0.5 * h));
                 }),
                 4.0});

  return out;
}

}  // namespace aoweno
