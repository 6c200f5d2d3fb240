#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "aoweno/grid.hpp"

using namespace aoweno;
using Catch::Matchers::WithinAbs;

TEST_CASE("axis geometry", "[grid]") {
  Axis per{-1.0, 1.0, 8, true};
  CHECK(per.dx() == Catch::Approx(0.25));
  CHECK(per.npts() == 8);
  CHECK(per.x(0) == -1.0);
  CHECK(per.x(7) == Catch::Approx(0.75));
  CHECK(per.length() == 2.0);

  Axis bnd{0.0, 1.0, 8, false};
  CHECK(bnd.npts() == 9);
  CHECK(bnd.x(8) == Catch::Approx(1.0));
}

TEST_CASE("field storage and ghost addressing", "[grid]") {
  Field1 f(2, 5);
  CHECK(f.raw().size() == 2u * (5 + 2 * kGhost));
  f.at(0, -kGhost) = 1.5;
  f.at(0, 4 + kGhost - 1) = 2.5;
  f.at(1, 2) = -7.0;
  CHECK(f.comp(0)[-kGhost] == 1.5);
  CHECK(f.comp(0)[4 + kGhost - 1] == 2.5);
  CHECK(f.comp(1)[2] == -7.0);

  Field2 g(4, 3, 2);
  g.at(3, -1, 1) = 9.0;
  CHECK(g.row(3, 1)[-1] == 9.0);
  g.row(2, -2)[0] = 4.0;
  CHECK(g.at(2, 0, -2) == 4.0);
}

TEST_CASE("periodic ghost fill wraps the interior", "[grid]") {
  const int n = 8;
  Field1 f(1, n);
  for (int j = 0; j < n; ++j) f.at(0, j) = std::sin(2.0 * M_PI * j / n);
  Boundary1 bc;
  bc.left.kind = BC::periodic;
  bc.right.kind = BC::periodic;
  apply_boundaries(f, bc, 0.0);
  for (int k = 1; k <= kGhost; ++k) {
    CHECK(f.at(0, -k) == f.at(0, n - k));
    CHECK(f.at(0, n - 1 + k) == f.at(0, k - 1));
  }
  // Ghosts continue the sample of the periodic function itself.
  for (int j = -kGhost; j < n + kGhost; ++j)
    CHECK_THAT(f.at(0, j), WithinAbs(std::sin(2.0 * M_PI * j / n), 1e-15));
}

TEST_CASE("transmissive ghost fill copies the edge value", "[grid]") {
  Field1 f(1, 6);
  for (int j = 0; j < 6; ++j) f.at(0, j) = 10.0 + j;
  Boundary1 bc;  // transmissive by default
  apply_boundaries(f, bc, 0.0);
  for (int k = 1; k <= kGhost; ++k) {
    CHECK(f.at(0, -k) == 10.0);
    CHECK(f.at(0, 5 + k) == 15.0);
  }
}

TEST_CASE("reflective wall mirrors and negates the momentum", "[grid]") {
  // Gas at rest frame velocity u = 0.3: conserved state (rho, rho u, E) with
  // rho = 1, p = 1, gamma = 1.4.  The mirrored ghost must carry u = -0.3.
  const double rho = 1.0, u = 0.3, p = 1.0, gamma = 1.4;
  const double E = p / (gamma - 1.0) + 0.5 * rho * u * u;
  const int n = 7;
  Field1 f(3, n);
  for (int j = 0; j < n; ++j) {
    f.at(0, j) = rho;
    f.at(1, j) = rho * u;
    f.at(2, j) = E;
  }
  Boundary1 bc;
  bc.left.kind = BC::reflective;
  bc.right.kind = BC::reflective;
  bc.flip_comp = 1;
  apply_boundaries(f, bc, 0.0);
  for (int k = 1; k <= kGhost; ++k) {
    CHECK(f.at(0, -k) == rho);
    CHECK_THAT(f.at(1, -k) / f.at(0, -k), WithinAbs(-0.3, 1e-15));
    CHECK(f.at(2, -k) == E);
    CHECK_THAT(f.at(1, n - 1 + k), WithinAbs(-rho * u, 1e-15));
  }
  // Mirror symmetry about the wall node: ghost k pairs with interior k.
  Field1 g(1, n);
  for (int j = 0; j < n; ++j) g.at(0, j) = j * j + 1.0;
  Boundary1 bg;
  bg.left.kind = BC::reflective;
  bg.right.kind = BC::reflective;
  apply_boundaries(g, bg, 0.0);
  for (int k = 1; k <= kGhost; ++k) {
    CHECK(g.at(0, -k) == g.at(0, k));
    CHECK(g.at(0, n - 1 + k) == g.at(0, n - 1 - k));
  }
}

TEST_CASE("dirichlet ghosts hold the prescribed state", "[grid]") {
  Field1 f(3, 5);
  for (int j = 0; j < 5; ++j)
    for (int c = 0; c < 3; ++c) f.at(c, j) = 100.0 + c;
  Boundary1 bc;
  bc.left.kind = BC::dirichlet;
  bc.left.state = {1.0, 2.0, 3.0};
  bc.right.kind = BC::dirichlet;
  bc.right.state = {4.0, 5.0, 6.0};
  apply_boundaries(f, bc, 0.0);
  for (int k = 1; k <= kGhost; ++k)
    for (int c = 0; c < 3; ++c) {
      CHECK(f.at(c, -k) == bc.left.state[c]);
      CHECK(f.at(c, 4 + k) == bc.right.state[c]);
    }
  // Interior untouched.
  for (int j = 0; j < 5; ++j) CHECK(f.at(0, j) == 100.0);
}

TEST_CASE("custom boundary hook runs after the standard fill", "[grid]") {
  Field1 f(1, 4);
  for (int j = 0; j < 4; ++j) f.at(0, j) = 1.0;
  Boundary1 bc;
  bc.left.kind = BC::custom;
  bc.right.kind = BC::transmissive;
  double seen_t = -1.0;
  bc.custom = [&seen_t](Field1& u, double t) {
    seen_t = t;
    for (int k = 1; k <= kGhost; ++k) u.at(0, -k) = 42.0 + k;
  };
  apply_boundaries(f, bc, 0.75);
  CHECK(seen_t == 0.75);
  CHECK(f.at(0, -2) == 44.0);
  CHECK(f.at(0, 3 + kGhost) == 1.0);  // transmissive side filled as usual
}

TEST_CASE("two-dimensional ghost fill handles each side independently",
          "[grid]") {
  const int nx = 6, ny = 5;
  Field2 f(4, nx, ny);
  auto val = [](int c, int jx, int jy) {
    return 1.0 + c + 0.1 * jx + 0.01 * jy;
  };
  for (int c = 0; c < 4; ++c)
    for (int jy = 0; jy < ny; ++jy)
      for (int jx = 0; jx < nx; ++jx) f.at(c, jx, jy) = val(c, jx, jy);

  SECTION("periodic in x, transmissive in y") {
    Boundary2 bc;
    bc.xlo.kind = bc.xhi.kind = BC::periodic;
    apply_boundaries(f, bc, 0.0);
    for (int jy = 0; jy < ny; ++jy)
      for (int k = 1; k <= kGhost; ++k) {
        CHECK(f.at(0, -k, jy) == f.at(0, nx - k, jy));
        CHECK(f.at(0, nx - 1 + k, jy) == f.at(0, k - 1, jy));
      }
    for (int jx = 0; jx < nx; ++jx)
      for (int k = 1; k <= kGhost; ++k) {
        CHECK(f.at(3, jx, -k) == val(3, jx, 0));
        CHECK(f.at(3, jx, ny - 1 + k) == val(3, jx, ny - 1));
      }
  }

  SECTION("reflective walls flip only the normal momentum") {
    Boundary2 bc;
    bc.xlo.kind = BC::reflective;
    bc.ylo.kind = BC::reflective;
    apply_boundaries(f, bc, 0.0);
    for (int jy = 0; jy < ny; ++jy) {
      CHECK(f.at(1, -1, jy) == -val(1, 1, jy));  // x-momentum flips at x wall
      CHECK(f.at(2, -1, jy) == val(2, 1, jy));   // y-momentum does not
      CHECK(f.at(0, -2, jy) == val(0, 2, jy));
    }
    for (int jx = 0; jx < nx; ++jx) {
      CHECK(f.at(2, jx, -1) == -val(2, jx, 1));  // y-momentum flips at y wall
      CHECK(f.at(1, jx, -1) == val(1, jx, 1));
      CHECK(f.at(3, jx, -3) == val(3, jx, 3));
    }
  }

  SECTION("dirichlet sides and custom hook") {
    Boundary2 bc;
    bc.yhi.kind = BC::dirichlet;
    bc.yhi.state = {9.0, 8.0, 7.0, 6.0};
    bool ran = false;
    bc.custom = [&ran](Field2&, double) { ran = true; };
    apply_boundaries(f, bc, 0.0);
    for (int jx = 0; jx < nx; ++jx)
      for (int k = 1; k <= kGhost; ++k)
        for (int c = 0; c < 4; ++c)
          CHECK(f.at(c, jx, ny - 1 + k) == bc.yhi.state[c]);
    CHECK(ran);
  }
}
