#include <doctest.h>

#include <cmath>

#include "latsurf/poly.hpp"

using namespace latsurf;

TEST_SUITE_BEGIN("poly");

TEST_CASE("arithmetic and evaluation") {
  Poly p({Rat(1), Rat(-2), Rat(3)});  // 3c^2 - 2c + 1
  Poly q({Rat(0), Rat(1)});           // c
  CHECK((p * q).degree() == 3);
  CHECK((p + q).eval(Rat(2)) == Rat(3 * 4 - 2 * 2 + 1 + 2));
  CHECK((p - p).is_zero());
  CHECK(p.derivative() == Poly({Rat(-2), Rat(6)}));
  CHECK(p.eval(rat_of(1, 2)) == rat_of(3, 4));
  CHECK(Poly().degree() == -1);
}

TEST_CASE("chebyshev polynomials satisfy T_j(cos t) = cos(j t)") {
  for (int j = 0; j <= 12; ++j) {
    for (double t : {0.3, 1.1, 2.7}) {
      CHECK(chebyshev_T(j).eval_d(std::cos(t)) == doctest::Approx(std::cos(j * t)).epsilon(1e-12));
    }
  }
  // negative index through evenness
  CHECK(chebyshev_T(-3) == chebyshev_T(3));
}

TEST_CASE("chebyshev U satisfies U_{n-1}(cos t) = sin(n t)/sin(t)") {
  for (int n = 1; n <= 10; ++n) {
    for (double t : {0.4, 1.9}) {
      CHECK(chebyshev_U(n - 1).eval_d(std::cos(t)) ==
            doctest::Approx(std::sin(n * t) / std::sin(t)).epsilon(1e-12));
    }
  }
}

TEST_CASE("cheb series evaluation matches its monomial expansion") {
  ChebSeries s;
  s.add_term(0, rat_of(1, 2)).add_term(2, Rat(-3)).add_term(5, rat_of(7, 3));
  Poly p = s.to_poly();
  for (long k = -3; k <= 3; ++k) {
    Rat c = rat_of(k, 3);
    CHECK(s.eval(c) == p.eval(c));
  }
  CHECK(s.eval_d(0.37) == doctest::Approx(p.eval_d(0.37)).epsilon(1e-13));
}

TEST_CASE("cheb series theta derivatives at zero") {
  ChebSeries s;
  s.add_term(1, Rat(2)).add_term(3, Rat(-1));
  CHECK(s.value_at_one() == Rat(1));
  // d^2/dt^2 [2 cos t - cos 3t] at 0 = -2 + 9
  CHECK(s.second_theta_derivative_at_zero() == Rat(7));
}

TEST_SUITE_END();
