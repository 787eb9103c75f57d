#include <doctest.h>

#include <cmath>

#include "latsurf/asymptotics.hpp"
#include "latsurf/homology.hpp"
#include "latsurf/quadrature.hpp"
#include "latsurf/veech.hpp"

using namespace latsurf;

TEST_SUITE_BEGIN("parallel");

// The OpenMP kernels must reproduce the serial reference bit for bit: work is
// partitioned over indexed slots and reduced in index order.

TEST_CASE("quadrature: serial and parallel results are identical") {
  QuadratureConfig cfg;
  cfg.tolerance = 1e-12;
  auto f = [](double x) { return std::exp(-x * x) * std::cos(3.0 * x); };
  double s = integrate(f, -2.0, 2.0, cfg, Exec::Serial);
  double p = integrate(f, -2.0, 2.0, cfg, Exec::Par);
  CHECK(s == p);

  auto vf = [](double x, std::vector<double>& out) {
    out[0] = std::sin(x);
    out[1] = x * x;
    out[2] = std::exp(x / 3.0);
  };
  auto vs = integrate_vec(vf, 3, 0.0, 5.0, cfg, Exec::Serial);
  auto vp = integrate_vec(vf, 3, 0.0, 5.0, cfg, Exec::Par);
  CHECK(vs == vp);
}

TEST_CASE("quadrature values are right") {
  QuadratureConfig cfg;
  cfg.tolerance = 1e-12;
  CHECK(integrate([](double x) { return x * x; }, 0.0, 3.0, cfg) ==
        doctest::Approx(9.0).epsilon(1e-13));
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI, cfg) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("quadrature reports non-convergence") {
  QuadratureConfig cfg;
  cfg.tolerance = 1e-14;
  cfg.max_panels = 4;
  auto rough = [](double x) { return std::sqrt(std::abs(x - 0.123456)); };
  CHECK_THROWS_AS(integrate(rough, 0.0, 1.0, cfg), QuadratureNotConverged);
}

TEST_CASE("homology evolution: serial and parallel snapshots are equal") {
  GroupWord w = GroupWord::parse("DE'");
  auto start = homology::HomologyClass::horizontal(1) +
               homology::HomologyClass::slope_one(2) * Rat(-3);
  asymptotics::Evolution serial(w, start, 50, Exec::Serial);
  asymptotics::Evolution par(w, start, 50, Exec::Par);
  serial.advance_to(50);
  par.advance_to(50);
  CHECK(serial.snapshot() == par.snapshot());
}

TEST_CASE("grid scan: serial and parallel agree bitwise") {
  GroupWord w = GroupWord::parse("DE'D");
  CHECK(veech::max_modulus_on_grid(w, 200, Exec::Serial) ==
        veech::max_modulus_on_grid(w, 200, Exec::Par));
}

TEST_CASE("reconstruction error: serial and parallel agree bitwise") {
  QuadratureConfig cfg;
  auto x = homology::HomologyClass::horizontal(3) + homology::HomologyClass::slope_one(1);
  CHECK(homology::reconstruct_error(x, 10, cfg, Exec::Serial) ==
        homology::reconstruct_error(x, 10, cfg, Exec::Par));
}

TEST_CASE("repeat runs are deterministic") {
  QuadratureConfig cfg;
  auto x = homology::HomologyClass::horizontal(2);
  double a = homology::reconstruct_error(x, 8, cfg, Exec::Par);
  double b = homology::reconstruct_error(x, 8, cfg, Exec::Par);
  CHECK(a == b);
}

TEST_SUITE_END();
