#pragma once

// Helpers shared by the test suites: order measurement, smooth test windows,
// and a small dense solver used by coefficient oracles.

#include <array>
#include <cassert>
#include <cmath>
#include <random>
#include <vector>

namespace testutil {

/// Least-squares slope of log(err) against log(h): the observed convergence
/// order over a refinement sequence.
inline double lsq_order(const std::vector<double>& h, const std::vector<double>& e) {
  assert(h.size() == e.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (size_t i = 0; i < h.size(); ++i) {
    if (e[i] <= 0.0) continue;
    const double x = std::log(h[i]), y = std::log(e[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

/// Point samples of the sliding average of H(x)=sin(x) on a five-point window
/// centered at xc with spacing h.  Reconstructing an interface value from this
/// window approximates sin(xc + h/2).
inline std::array<double, 5> sliding_avg_sin_window(double xc, double h) {
  std::array<double, 5> f{};
  for (int m = -2; m <= 2; ++m) {
    const double x = xc + m * h;
    f[m + 2] = (std::cos(x - h / 2) - std::cos(x + h / 2)) / h;
  }
  return f;
}

/// Plain point samples of sin on the same window layout.
inline std::array<double, 5> point_sin_window(double xc, double h) {
  std::array<double, 5> f{};
  for (int m = -2; m <= 2; ++m) f[m + 2] = std::sin(xc + m * h);
  return f;
}

/// Solve A x = b by Gaussian elimination with partial pivoting (dense, tiny).
inline std::vector<double> solve_dense(std::vector<std::vector<double>> a,
                                       std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (int r = col + 1; r < n; ++r) {
      const double m = a[r][col] / a[col][col];
      for (int c = col; c < n; ++c) a[r][c] -= m * a[col][c];
      b[r] -= m * b[col];
    }
  }
  std::vector<double> x(n);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

}  // namespace testutil
