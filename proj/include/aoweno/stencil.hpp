#pragma once

// Fifth-order finite-difference WENO reconstruction kernels.
//
// Everything here works on a five-point window of flux point values
//
//   f[0..4] = f at x_{i-2}, x_{i-1}, x_i, x_{i+1}, x_{i+2}
//
// and produces the upwind-biased interface value at x_{i+1/2}.  Candidate
// polynomials are indexed by the cell stencils they interpolate in the
// cell-average sense: the three quadratics live on {i-2..i}, {i-1..i+1},
// {i..i+2}; the cubics on {i-1..i+2} (central) and {i-2..i+1} (left-biased);
// the quartic on the full window.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "aoweno/common.hpp"

namespace aoweno {

enum class Scheme { js, z, zq, ao53, ao_hc, aon53, ao543, aol543, aon543 };

/// Which smoothness indicator measures the big (five-point) stencil in the
/// adaptive-order schemes: v1 is the full quartic-moment form, v2 combines the
/// three quadratic indicators weighted by themselves, v3 is the inexpensive
/// average-plus-drift form.
enum class Beta5 { v1, v2, v3 };

enum class Bias { central, left };

struct SchemeParams {
  Scheme variant = Scheme::ao53;
  double gamma_hi = 0.85;
  double gamma_lo = 0.85;
  double gamma_avg = 0.85;  // 543 family only
  double epsilon = 1e-12;
  Beta5 beta5 = Beta5::v1;

  static SchemeParams defaults(Scheme s) {
    SchemeParams p;
    p.variant = s;
    switch (s) {
      case Scheme::ao_hc:
        p.beta5 = Beta5::v2;
        break;
      case Scheme::aon53:
        p.beta5 = Beta5::v3;
        break;
      case Scheme::ao543:
      case Scheme::aol543:
        p.gamma_lo = 0.7;
        break;
      default:
        break;
    }
    return p;
  }
};

inline std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::js:      return "js";
    case Scheme::z:       return "z";
    case Scheme::zq:      return "zq";
    case Scheme::ao53:    return "ao53";
    case Scheme::ao_hc:   return "aohc";
    case Scheme::aon53:   return "aon53";
    case Scheme::ao543:   return "ao543";
    case Scheme::aol543:  return "aol543";
    case Scheme::aon543:  return "aon543";
  }
  return "?";
}

inline Scheme scheme_from_string(const std::string& name) {
  if (name == "js") return Scheme::js;
  if (name == "z") return Scheme::z;
  if (name == "zq") return Scheme::zq;
  if (name == "ao53") return Scheme::ao53;
  if (name == "aohc" || name == "ao-hc" || name == "ao_hc") return Scheme::ao_hc;
  if (name == "aon53") return Scheme::aon53;
  if (name == "ao543") return Scheme::ao543;
  if (name == "aol543") return Scheme::aol543;
  if (name == "aon543") return Scheme::aon543;
  throw ConfigError("unknown scheme '" + name +
                    "' (expected one of: js z zq ao53 aohc aon53 ao543 aol543 aon543)");
}

/// Interface values at x_{i+1/2} of the three quadratic candidates — all the
/// classical three-stencil schemes ever evaluate.
struct QuadraticValues {
  double m1, c0, p1;
};

inline QuadraticValues quadratic_values(const double* f) {
  QuadraticValues q;
  q.m1 = (2.0 * f[0] - 7.0 * f[1] + 11.0 * f[2]) / 6.0;
  q.c0 = (-f[1] + 5.0 * f[2] + 2.0 * f[3]) / 6.0;
  q.p1 = (2.0 * f[2] + 5.0 * f[3] - f[4]) / 6.0;
  return q;
}

/// Interface values at x_{i+1/2} of all candidate polynomials.
struct CandidateValues {
  double p3_m1, p3_0, p3_p1;  // quadratics on the three substencils
  double p4_0c;               // central cubic, cells {i-1..i+2}
  double p4_0l;               // left-biased cubic, cells {i-2..i+1}
  double p5_0;                // quartic on the full window
};

inline CandidateValues candidate_values(const double* f) {
  const QuadraticValues q = quadratic_values(f);
  CandidateValues c;
  c.p3_m1 = q.m1;
  c.p3_0  = q.c0;
  c.p3_p1 = q.p1;
  c.p4_0c = (-f[1] + 7.0 * f[2] + 7.0 * f[3] - f[4]) / 12.0;
  c.p4_0l = (f[0] - 5.0 * f[1] + 13.0 * f[2] + 3.0 * f[3]) / 12.0;
  c.p5_0  = (2.0 * f[0] - 13.0 * f[1] + 47.0 * f[2] + 27.0 * f[3] - 3.0 * f[4]) / 60.0;
  return c;
}

/// Smoothness of the three quadratic candidates (Jiang–Shu form).
struct Beta3Set {
  double m1, c0, p1;
};

inline Beta3Set beta3(const double* f) {
  constexpr double k = 13.0 / 12.0;
  Beta3Set b;
  b.m1 = k * sq(f[0] - 2.0 * f[1] + f[2]) + 0.25 * sq(f[0] - 4.0 * f[1] + 3.0 * f[2]);
  b.c0 = k * sq(f[1] - 2.0 * f[2] + f[3]) + 0.25 * sq(f[1] - f[3]);
  b.p1 = k * sq(f[2] - 2.0 * f[3] + f[4]) + 0.25 * sq(3.0 * f[2] - 4.0 * f[3] + f[4]);
  return b;
}

/// Full quartic-moment smoothness of the five-point stencil.
inline double beta5_v1(const double* f) {
  const double u1 = (11.0 * f[0] - 82.0 * f[1] + 82.0 * f[3] - 11.0 * f[4]) / 120.0;
  const double u2 = (-3.0 * f[0] + 40.0 * f[1] - 74.0 * f[2] + 40.0 * f[3] - 3.0 * f[4]) / 56.0;
  const double u3 = (-f[0] + 2.0 * f[1] - 2.0 * f[3] + f[4]) / 12.0;
  const double u4 = (f[0] - 4.0 * f[1] + 6.0 * f[2] - 4.0 * f[3] + f[4]) / 24.0;
  return sq(u1 + 0.1 * u3) + (13.0 / 3.0) * sq(u2 + (123.0 / 455.0) * u4) +
         (781.0 / 20.0) * sq(u3) + (1421461.0 / 2275.0) * sq(u4);
}

/// Self-weighted combination of the quadratic indicators.  The 0/0 case of a
/// locally constant window is defined as 0.
inline double beta5_v2(const Beta3Set& b) {
  const double s = b.m1 + b.c0 + b.p1;
  if (s == 0.0) return 0.0;
  return (b.m1 * b.m1 + b.c0 * b.c0 + b.p1 * b.p1) / s;
}

/// Simpson-style average of the quadratic indicators plus their drift.
inline double beta5_v3(const Beta3Set& b) {
  return (b.m1 + 4.0 * b.c0 + b.p1) / 6.0 + std::abs(b.m1 - b.p1);
}

inline double beta5(const double* f, const Beta3Set& b, Beta5 which) {
  switch (which) {
    case Beta5::v1: return beta5_v1(f);
    case Beta5::v2: return beta5_v2(b);
    case Beta5::v3: return beta5_v3(b);
  }
  return 0.0;
}

/// Smoothness of a cubic on a four-point window.  For Bias::central pass
/// f4[0..3] = f at {i-1..i+2}; for Bias::left pass f at {i-2..i+1}.
inline double beta4(const double* f4, Bias bias) {
  double u1, u2, u3;
  if (bias == Bias::central) {
    u1 = (-19.0 * f4[0] - 33.0 * f4[1] + 63.0 * f4[2] - 11.0 * f4[3]) / 60.0;
    u2 = (f4[0] - 2.0 * f4[1] + f4[2]) / 2.0;
  } else {
    u1 = (11.0 * f4[0] - 63.0 * f4[1] + 33.0 * f4[2] + 19.0 * f4[3]) / 60.0;
    u2 = (f4[1] - 2.0 * f4[2] + f4[3]) / 2.0;
  }
  u3 = (-f4[0] + 3.0 * f4[1] - 3.0 * f4[2] + f4[3]) / 6.0;
  return sq(u1 + 0.1 * u3) + (13.0 / 3.0) * sq(u2) + (781.0 / 20.0) * sq(u3);
}

/// Mean absolute deviation of the low-order indicators from the big-stencil
/// one; n_low = 3 for the (5,3) layout, 4 when the middle cubic participates.
inline double tau_mean(double b5, const Beta3Set& b3, double b4, int n_low) {
  double s = std::abs(b5 - b3.m1) + std::abs(b5 - b3.c0) + std::abs(b5 - b3.p1);
  if (n_low == 4) return (s + std::abs(b5 - b4)) / 4.0;
  return s / 3.0;
}

/// Linear (optimal) weights in slot order {S3_-1, S3_0, S3_+1, S4, S5}.
/// Slots a scheme does not use are zero.
using WeightVector = std::array<double, 5>;

inline WeightVector linear_weights(const SchemeParams& p) {
  const double hi = p.gamma_hi, lo = p.gamma_lo, av = p.gamma_avg;
  switch (p.variant) {
    case Scheme::js:
    case Scheme::z:
      return {0.1, 0.6, 0.3, 0.0, 0.0};
    case Scheme::zq:
      // slot 0: linear polynomial on {i-1,i}; slot 2: on {i,i+1}; slot 4: quartic
      return {0.01, 0.0, 0.01, 0.0, 0.98};
    case Scheme::ao53:
    case Scheme::ao_hc:
    case Scheme::aon53:
      return {(1.0 - hi) * (1.0 - lo) / 2.0, (1.0 - hi) * lo,
              (1.0 - hi) * (1.0 - lo) / 2.0, 0.0, hi};
    case Scheme::ao543:
    case Scheme::aol543:
      return {(1.0 - hi) * (1.0 - av) * (1.0 - lo) / 2.0,
              (1.0 - hi) * (1.0 - av) * lo,
              (1.0 - hi) * (1.0 - av) * (1.0 - lo) / 2.0,
              (1.0 - hi) * av, hi};
    case Scheme::aon543:
      return {(1.0 - hi) * (1.0 - lo) / 3.0, (1.0 - hi) * (1.0 - lo) / 3.0,
              (1.0 - hi) * (1.0 - lo) / 3.0, (1.0 - hi) * lo, hi};
  }
  return {};
}

/// Normalized amplified weights: w_k ∝ g_k (1 + (tau/(beta_k+eps))^2) over the
/// slots whose linear weight is nonzero.
inline WeightVector nonlinear_weights(const WeightVector& g, const WeightVector& beta,
                                      double tau, double eps) {
  WeightVector w{};
  double sum = 0.0;
  for (int k = 0; k < 5; ++k) {
    if (g[k] != 0.0) {
      const double r = tau / (beta[k] + eps);
      w[k] = g[k] * (1.0 + r * r);
      sum += w[k];
    }
  }
  for (double& x : w) x /= sum;
  return w;
}

namespace detail {

/// Adaptive-order reconstruction shared by the (5,3) and (5,4,3) layouts.
/// `use4` selects whether the middle cubic participates (it must not when its
/// linear weight is zero, so that the (5,4,3) scheme degenerates exactly to
/// the (5,3) one).
inline double reconstruct_ao(const double* f, const WeightVector& g, double eps,
                             Beta5 b5kind, Bias bias4) {
  const Beta3Set b3 = beta3(f);
  const double b5 = beta5(f, b3, b5kind);
  const bool use4 = g[3] != 0.0;
  const CandidateValues c = candidate_values(f);
  const double p4 = (bias4 == Bias::central) ? c.p4_0c : c.p4_0l;
  double b4 = 0.0;
  if (use4) b4 = beta4(bias4 == Bias::central ? f + 1 : f, bias4);

  const double tau = tau_mean(b5, b3, b4, use4 ? 4 : 3);
  const WeightVector beta{b3.m1, b3.c0, b3.p1, b4, b5};
  const WeightVector w = nonlinear_weights(g, beta, tau, eps);

  // De-biased big-stencil polynomial: remove the low-order candidates in the
  // linear-weight proportions, then recombine with the nonlinear weights.
  double p_hi = c.p5_0 - g[0] * c.p3_m1 - g[1] * c.p3_0 - g[2] * c.p3_p1;
  if (use4) p_hi -= g[3] * p4;
  p_hi /= g[4];

  return w[4] * p_hi + w[3] * p4 + w[0] * c.p3_m1 + w[1] * c.p3_0 + w[2] * c.p3_p1;
}

// The classical three-stencil kernels use the common-denominator form of
// their weights (w_k ∝ γ_k/(ε+β_k)² resp. γ_k(1+τ²/(ε+β_k)²) multiplied
// through by Π(ε+β_j)²), trading the per-candidate divisions for one at the
// end.  With ε flooring the factors, every intermediate stays in range.

inline double reconstruct_js(const double* f, double eps) {
  const Beta3Set b = beta3(f);
  const QuadraticValues q = quadratic_values(f);
  const double d0 = sq(eps + b.m1), d1 = sq(eps + b.c0), d2 = sq(eps + b.p1);
  const double a0 = 0.1 * d1 * d2;
  const double a1 = 0.6 * d0 * d2;
  const double a2 = 0.3 * d0 * d1;
  return (a0 * q.m1 + a1 * q.c0 + a2 * q.p1) / (a0 + a1 + a2);
}

inline double reconstruct_z(const double* f, double eps) {
  const Beta3Set b = beta3(f);
  const QuadraticValues q = quadratic_values(f);
  const double t2 = sq(std::abs(b.m1 - b.p1));
  const double d0 = sq(eps + b.m1), d1 = sq(eps + b.c0), d2 = sq(eps + b.p1);
  const double a0 = 0.1 * (d0 + t2) * d1 * d2;
  const double a1 = 0.6 * (d1 + t2) * d0 * d2;
  const double a2 = 0.3 * (d2 + t2) * d0 * d1;
  return (a0 * q.m1 + a1 * q.c0 + a2 * q.p1) / (a0 + a1 + a2);
}

/// Quartic plus two linear candidates, first-power amplification.
inline double reconstruct_zq(const double* f, double eps) {
  const double q1 = (2.0 * f[0] - 13.0 * f[1] + 47.0 * f[2] + 27.0 * f[3] - 3.0 * f[4]) / 60.0;
  const double q2 = (3.0 * f[2] - f[1]) / 2.0;
  const double q3 = (f[2] + f[3]) / 2.0;
  const double b1 = beta5_v1(f);
  const double b2 = sq(f[2] - f[1]);
  const double b3 = sq(f[3] - f[2]);
  const double tau = std::abs(b1 - b2) + std::abs(b1 - b3);
  const double a1 = 0.98 * (1.0 + tau / (b1 + eps));
  const double a2 = 0.01 * (1.0 + tau / (b2 + eps));
  const double a3 = 0.01 * (1.0 + tau / (b3 + eps));
  const double s = a1 + a2 + a3;
  const double w1 = a1 / s, w2 = a2 / s, w3 = a3 / s;
  return w1 * (q1 - 0.01 * q2 - 0.01 * q3) / 0.98 + w2 * q2 + w3 * q3;
}

}  // namespace detail

/// Prepared reconstruction kernel: linear weights are fixed once, each call
/// maps one five-point window to the interface value at x_{i+1/2}.
class Reconstructor {
 public:
  Reconstructor() : Reconstructor(SchemeParams{}) {}
  explicit Reconstructor(const SchemeParams& p) : p_(p), g_(linear_weights(p)) {}
  explicit Reconstructor(Scheme s) : Reconstructor(SchemeParams::defaults(s)) {}

  const SchemeParams& params() const { return p_; }

  double operator()(const double* f) const {
    switch (p_.variant) {
      case Scheme::js:
        return detail::reconstruct_js(f, p_.epsilon);
      case Scheme::z:
        return detail::reconstruct_z(f, p_.epsilon);
      case Scheme::zq:
        return detail::reconstruct_zq(f, p_.epsilon);
      case Scheme::aol543:
        return detail::reconstruct_ao(f, g_, p_.epsilon, p_.beta5, Bias::left);
      default:
        return detail::reconstruct_ao(f, g_, p_.epsilon, p_.beta5, Bias::central);
    }
  }

  /// Reconstruction seen from the other side of the interface: apply the
  /// upwind formula to the reversed window.  Callers pass the downwind flux
  /// samples at x_{i-1}..x_{i+3} in natural (ascending) order.
  double negative(const double* f) const {
    const double r[5] = {f[4], f[3], f[2], f[1], f[0]};
    return (*this)(r);
  }

  /// Nonlinear weights actually used for this window, in the linear_weights
  /// slot order.  For js/z these are the classical three weights; for zq the
  /// big-stencil weight sits in slot 4 and the two linear candidates in
  /// slots 0 and 2.
  WeightVector weights(const double* f) const {
    const double eps = p_.epsilon;
    switch (p_.variant) {
      case Scheme::js: {
        const Beta3Set b = beta3(f);
        const double a0 = 0.1 / sq(eps + b.m1);
        const double a1 = 0.6 / sq(eps + b.c0);
        const double a2 = 0.3 / sq(eps + b.p1);
        const double s = a0 + a1 + a2;
        return {a0 / s, a1 / s, a2 / s, 0.0, 0.0};
      }
      case Scheme::z: {
        const Beta3Set b = beta3(f);
        const double tau5 = std::abs(b.m1 - b.p1);
        WeightVector g = g_;
        WeightVector beta{b.m1, b.c0, b.p1, 0.0, 0.0};
        return nonlinear_weights(g, beta, tau5, eps);
      }
      case Scheme::zq: {
        const double b1 = beta5_v1(f);
        const double b2 = sq(f[2] - f[1]);
        const double b3 = sq(f[3] - f[2]);
        const double tau = std::abs(b1 - b2) + std::abs(b1 - b3);
        const double a1 = 0.98 * (1.0 + tau / (b1 + eps));
        const double a2 = 0.01 * (1.0 + tau / (b2 + eps));
        const double a3 = 0.01 * (1.0 + tau / (b3 + eps));
        const double s = a1 + a2 + a3;
        return {a2 / s, 0.0, a3 / s, 0.0, a1 / s};
      }
      default: {
        const Beta3Set b3 = beta3(f);
        const double b5 = beta5(f, b3, p_.beta5);
        const bool use4 = g_[3] != 0.0;
        const Bias bias4 = (p_.variant == Scheme::aol543) ? Bias::left : Bias::central;
        double b4 = 0.0;
        if (use4) b4 = beta4(bias4 == Bias::central ? f + 1 : f, bias4);
        const double tau = tau_mean(b5, b3, b4, use4 ? 4 : 3);
        const WeightVector beta{b3.m1, b3.c0, b3.p1, b4, b5};
        return nonlinear_weights(g_, beta, tau, eps);
      }
    }
  }

 private:
  SchemeParams p_;
  WeightVector g_;
};

/// One-shot helpers mirroring the Reconstructor calls.
inline double reconstruct_interface(const double* f, const SchemeParams& p) {
  return Reconstructor(p)(f);
}

inline double reconstruct_negative(const double* f, const SchemeParams& p) {
  return Reconstructor(p).negative(f);
}

}  // namespace aoweno
