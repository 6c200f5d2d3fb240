#pragma once

// Error norms, convergence studies, scheme comparisons, and timing
// benchmarks over the problem catalog.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "aoweno/reference.hpp"
#include "aoweno/run.hpp"

namespace aoweno {

struct Norms {
  double linf = 0.0, l1 = 0.0;
};

/// Pointwise norms over matching samples; the L1 sum is scaled by
/// length / (number of samples).
inline Norms error_norms(const std::vector<double>& num,
                         const std::vector<double>& ref, double length) {
  if (num.size() != ref.size() || num.empty())
    throw ConfigError("error_norms: sample count mismatch");
  Norms n;
  double sum = 0.0;
  for (std::size_t j = 0; j < num.size(); ++j) {
    const double e = std::abs(num[j] - ref[j]);
    n.linf = std::max(n.linf, e);
    sum += e;
  }
  n.l1 = length / static_cast<double>(num.size()) * sum;
  return n;
}

/// 2D density norms against an exact density function; the L1 factor is the
/// product of the per-axis factors.
inline Norms error_norms_2d(const SimResult& r,
                            const std::function<double(double, double, double)>& exact,
                            double t) {
  Norms n;
  double sum = 0.0;
  for (int jy = 0; jy < r.y.npts(); ++jy)
    for (int jx = 0; jx < r.x.npts(); ++jx) {
      const double e = std::abs(r.u2.at(0, jx, jy) - exact(r.x.x(jx), r.y.x(jy), t));
      n.linf = std::max(n.linf, e);
      sum += e;
    }
  n.l1 = (r.x.length() / r.x.npts()) * (r.y.length() / r.y.npts()) * sum;
  return n;
}

// ---------------------------------------------------------------------------
// Convergence studies (error tables)
// ---------------------------------------------------------------------------

struct ConvergeRow {
  int n = 0;
  double linf = 0.0, linf_order = 0.0;
  double l1 = 0.0, l1_order = 0.0;
  double seconds = 0.0;
};

inline std::vector<ConvergeRow> convergence_study(const Problem& p,
                                                  const SchemeParams& sp,
                                                  const std::vector<int>& ns,
                                                  const std::string& cache_dir) {
  std::vector<ConvergeRow> rows;
  for (const int n : ns) {
    const SimResult r = run_simulation(p, sp, n);
    Norms e;
    if (p.kind == ProblemKind::euler2) {
      if (!p.exact_density2)
        throw ConfigError("problem '" + p.name + "' has no exact 2D solution");
      e = error_norms_2d(r, p.exact_density2, p.t_end);
    } else {
      e = error_norms(solution_values(r), reference_values(p, r.x, cache_dir),
                      p.x.length());
    }
    ConvergeRow row;
    row.n = n;
    row.linf = e.linf;
    row.l1 = e.l1;
    row.seconds = r.seconds;
    if (!rows.empty()) {
      const double ratio = std::log(static_cast<double>(n) / rows.back().n);
      row.linf_order = std::log(rows.back().linf / e.linf) / ratio;
      row.l1_order = std::log(rows.back().l1 / e.l1) / ratio;
    } else {
      row.linf_order = row.l1_order = std::nan("");
    }
    rows.push_back(row);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Shock-resolution comparisons (error-vs-reference plus plot profiles)
// ---------------------------------------------------------------------------

struct ShockResult {
  Axis x;                         // comparison axis
  std::vector<double> reference;  // reference profile at its nodes
  std::vector<std::string> scheme_names;
  std::vector<std::vector<double>> profiles;  // per scheme, at x nodes
  std::vector<double> l1;                     // per scheme, density L1 error
  std::vector<double> seconds;
};

inline ShockResult shock_comparison(const Problem& p,
                                    const std::vector<SchemeParams>& schemes,
                                    int n, const std::string& cache_dir) {
  ShockResult out;
  Axis ax = p.x;
  ax.n = n;
  out.x = ax;
  out.reference = reference_values(p, ax, cache_dir);
  for (const SchemeParams& sp : schemes) {
    const SimResult r = run_simulation(p, sp, n);
    std::vector<double> prof = p.kind == ProblemKind::euler2
                                   ? slice_density(r, p.slice_y)
                                   : solution_values(r);
    const Norms e = error_norms(prof, out.reference, p.x.length());
    out.scheme_names.push_back(to_string(sp.variant));
    out.profiles.push_back(std::move(prof));
    out.l1.push_back(e.l1);
    out.seconds.push_back(r.seconds);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Timing benchmarks (relative cost, AO53 normalized to one)
// ---------------------------------------------------------------------------

struct BenchRow {
  std::string scheme;
  double seconds = 0.0;   // median over repeats
  double relative = 0.0;  // vs ao53
  long steps = 0;
};

inline std::vector<BenchRow> benchmark(const Problem& p,
                                       std::vector<SchemeParams> schemes,
                                       int nx, int repeats) {
  const bool has_baseline =
      std::any_of(schemes.begin(), schemes.end(), [](const SchemeParams& s) {
        return s.variant == Scheme::ao53;
      });
  if (!has_baseline) schemes.push_back(SchemeParams::defaults(Scheme::ao53));
  if (repeats < 1) repeats = 1;

  std::vector<BenchRow> rows(schemes.size());
  std::vector<std::vector<double>> times(schemes.size());
  for (std::size_t k = 0; k < schemes.size(); ++k)
    rows[k].scheme = to_string(schemes[k].variant);
  // Repeats are interleaved round-robin so slow spells on a shared host hit
  // every scheme alike instead of biasing whichever happened to run then.
  for (int r = 0; r < repeats; ++r)
    for (std::size_t k = 0; k < schemes.size(); ++k) {
      const SimResult res = run_simulation(p, schemes[k], nx);
      times[k].push_back(res.seconds);
      rows[k].steps = res.steps;
    }
  double baseline = 0.0;
  for (std::size_t k = 0; k < schemes.size(); ++k) {
    std::sort(times[k].begin(), times[k].end());
    double med = times[k][times[k].size() / 2];
    if (times[k].size() % 2 == 0)
      med = 0.5 * (times[k][times[k].size() / 2 - 1] + times[k][times[k].size() / 2]);
    rows[k].seconds = med;
    if (schemes[k].variant == Scheme::ao53) baseline = med;
  }
  for (BenchRow& r : rows)
    r.relative = r.scheme == "ao53" ? 1.0 : r.seconds / baseline;
  return rows;
}

}  // namespace aoweno
