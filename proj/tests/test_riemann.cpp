#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "aoweno/physics.hpp"
#include "aoweno/riemann.hpp"

using namespace aoweno;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Independent evaluation of the star-pressure residual, written from the
// jump/rarefaction relations directly, used to bracket the root by bisection.
double residual(double p, const Prim1& l, const Prim1& r, double g) {
  auto branch = [&](double pk, double rhok, double ck) {
    if (p > pk) {
      const double ak = 2.0 / ((g + 1.0) * rhok);
      const double bk = (g - 1.0) / (g + 1.0) * pk;
      return (p - pk) * std::sqrt(ak / (p + bk));
    }
    return 2.0 * ck / (g - 1.0) * (std::pow(p / pk, (g - 1.0) / (2.0 * g)) - 1.0);
  };
  const double cl = std::sqrt(g * l.p / l.rho), cr = std::sqrt(g * r.p / r.rho);
  return branch(l.p, l.rho, cl) + branch(r.p, r.rho, cr) + (r.u - l.u);
}

double bisect_star_pressure(const Prim1& l, const Prim1& r, double g) {
  double lo = 1e-10, hi = 10.0 * (l.p + r.p);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (residual(mid, l, r, g) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("star pressure agrees with an independent bisection") {
  const GasModel gas;
  const Prim1 sod_l{1.0, 0.0, 1.0}, sod_r{0.125, 0.0, 0.1};
  const StarState sod = star_state(sod_l, sod_r, gas);
  CHECK_THAT(sod.p, WithinAbs(bisect_star_pressure(sod_l, sod_r, gas.gamma), 1e-9));
  CHECK_THAT(sod.p, WithinAbs(0.30313, 2e-5));
  CHECK_THAT(sod.u, WithinAbs(0.92745, 2e-5));

  const Prim1 lax_l{0.445, 0.698, 3.528}, lax_r{0.5, 0.0, 0.571};
  const StarState lax = star_state(lax_l, lax_r, gas);
  CHECK_THAT(lax.p, WithinAbs(bisect_star_pressure(lax_l, lax_r, gas.gamma), 1e-9));
  CHECK(lax.p > 0.0);
}

TEST_CASE("equal states stay constant") {
  const GasModel gas;
  const Prim1 w{0.7, 0.3, 1.2};
  for (double xi : {-2.0, -0.5, 0.0, 0.3, 2.0}) {
    const Prim1 s = exact_riemann(w, w, gas, xi);
    CHECK_THAT(s.rho, WithinAbs(w.rho, 1e-12));
    CHECK_THAT(s.u, WithinAbs(w.u, 1e-12));
    CHECK_THAT(s.p, WithinAbs(w.p, 1e-12));
  }
}

TEST_CASE("pure contact resolves to the two input states") {
  const GasModel gas;
  const Prim1 l{1.0, 0.0, 1.0}, r{0.25, 0.0, 1.0};
  const StarState st = star_state(l, r, gas);
  CHECK_THAT(st.p, WithinAbs(1.0, 1e-10));
  CHECK_THAT(st.u, WithinAbs(0.0, 1e-12));
  CHECK_THAT(exact_riemann(l, r, gas, -0.1).rho, WithinAbs(1.0, 1e-10));
  CHECK_THAT(exact_riemann(l, r, gas, 0.1).rho, WithinAbs(0.25, 1e-10));
}

TEST_CASE("symmetric collision has a resting star region") {
  const GasModel gas;
  const Prim1 l{1.0, 1.0, 1.0}, r{1.0, -1.0, 1.0};
  const StarState st = star_state(l, r, gas);
  CHECK_THAT(st.u, WithinAbs(0.0, 1e-12));
  CHECK(st.p > 1.0);  // compression
}

TEST_CASE("far-field samples return the unperturbed states") {
  const GasModel gas;
  const Prim1 l{1.0, 0.0, 1.0}, r{0.125, 0.0, 0.1};
  const Prim1 sl = exact_riemann(l, r, gas, -1e3);
  const Prim1 sr = exact_riemann(l, r, gas, 1e3);
  CHECK(sl.rho == l.rho);
  CHECK(sr.rho == r.rho);
}

TEST_CASE("sampled shock satisfies the jump conditions") {
  const GasModel gas;
  const Prim1 l{1.0, 0.0, 1.0}, r{0.125, 0.0, 0.1};
  const StarState st = star_state(l, r, gas);
  const double g = gas.gamma;
  const double cr = sound_speed(r.rho, r.p, gas);
  const double sr = r.u + cr * std::sqrt((g + 1.0) / (2.0 * g) * st.p / r.p +
                                         (g - 1.0) / (2.0 * g));
  // States immediately either side of the right shock.
  const Prim1 pre = exact_riemann(l, r, gas, sr + 1e-9);
  const Prim1 post = exact_riemann(l, r, gas, sr - 1e-9);
  const Cons1 qpre = conserved(pre, gas), qpost = conserved(post, gas);
  const Cons1 fpre = euler_flux(qpre, gas), fpost = euler_flux(qpost, gas);
  for (int c = 0; c < 3; ++c) {
    INFO("component " << c);
    CHECK_THAT(fpre[c] - fpost[c], WithinAbs(sr * (qpre[c] - qpost[c]), 1e-8));
  }
}

TEST_CASE("rarefaction fan is continuous at head and tail") {
  const GasModel gas;
  const Prim1 l{1.0, 0.0, 1.0}, r{0.125, 0.0, 0.1};
  const StarState st = star_state(l, r, gas);
  const double cl = sound_speed(l.rho, l.p, gas);
  const double head = l.u - cl;
  const double cstar = cl * std::pow(st.p / l.p, (gas.gamma - 1.0) / (2.0 * gas.gamma));
  const double tail = st.u - cstar;
  auto rho_at = [&](double xi) { return exact_riemann(l, r, gas, xi).rho; };
  CHECK_THAT(rho_at(head - 1e-10), WithinAbs(rho_at(head + 1e-10), 1e-7));
  CHECK_THAT(rho_at(tail - 1e-10), WithinAbs(rho_at(tail + 1e-10), 1e-7));
}

TEST_CASE("strong expansion reports vacuum") {
  const GasModel gas;
  const Prim1 l{1.0, -10.0, 0.01}, r{1.0, 10.0, 0.01};
  CHECK_THROWS_AS(star_state(l, r, gas), NumericalError);
}
