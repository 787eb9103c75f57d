#include <doctest.h>

#include <cmath>

#include "latsurf/asymptotics.hpp"

using namespace latsurf;
using namespace latsurf::asymptotics;

TEST_SUITE_BEGIN("asymptotics");

TEST_CASE("catalan numbers by recurrence and closed form") {
  const long expected[] = {1, 1, 2, 5, 14, 42};
  for (long n = 0; n <= 5; ++n) {
    CHECK(catalan(n) == expected[n]);
    CHECK(catalan_closed_form(n) == expected[n]);
  }
  for (long n = 6; n <= 40; ++n) CHECK(catalan(n) == catalan_closed_form(n));
}

TEST_CASE("catalan integral formula") {
  QuadratureConfig cfg;
  cfg.tolerance = 1e-12;
  for (long n : {0L, 1L, 5L, 12L}) {
    double exact = catalan(n).get_d();
    CHECK(catalan_integral(n, cfg) == doctest::Approx(exact).epsilon(1e-10));
  }
}

TEST_CASE("catalan asymptotic ratio") {
  CHECK(catalan_ratio(10000) == doctest::Approx(1.0).epsilon(0.01));
  // leading correction is -9/(8n)
  CHECK(catalan_ratio(100) == doctest::Approx(1.0 - 9.0 / 800.0).epsilon(1e-3));
}

TEST_CASE("growth lemma example functions") {
  QuadratureConfig cfg;
  cfg.tolerance = 1e-12;
  auto f1 = [](double t) { return (2.0 - 2.0 * std::cos(2.0 * t)) / 4.0; };
  auto g1 = [](double t) { return (1.0 + std::cos(2.0 * t)) / 2.0; };
  auto res = growth_lemma_check(1.0, 1.0, f1, g1, {200, 2000}, cfg);
  CHECK(std::abs(res.ratio[1] - 1.0) < 0.02);
  // convergence direction
  CHECK(std::abs(res.ratio[1] - 1.0) < std::abs(res.ratio[0] - 1.0) + 1e-6);
}

TEST_CASE("growth lemma survives very sharp peaks") {
  // at n = 50000 the mass of g^n sits in |x| < 0.005; coarse panel pairs
  // agree on ~0 by missing it, which the two-agreement rule must reject
  QuadratureConfig cfg;
  cfg.tolerance = 1e-13;
  auto f1 = [](double t) { return (2.0 - 2.0 * std::cos(2.0 * t)) / 4.0; };
  auto g1 = [](double t) { return (1.0 + std::cos(2.0 * t)) / 2.0; };
  auto res = growth_lemma_check(1.0, 1.0, f1, g1, {50000}, cfg);
  CHECK(std::abs(res.ratio[0] - 1.0) < 0.001);
}

TEST_CASE("growth lemma hypothesis violations") {
  QuadratureConfig cfg;
  auto zero = [](double) { return 0.0; };
  auto g1 = [](double t) { return (1.0 + std::cos(2.0 * t)) / 2.0; };
  CHECK_THROWS_AS(growth_lemma_check(1.0, 1.0, zero, g1, {10}, cfg), HypothesisViolation);
  auto f1 = [](double t) { return (2.0 - 2.0 * std::cos(2.0 * t)) / 4.0; };
  auto too_big = [](double) { return 1.0; };
  CHECK_THROWS_AS(growth_lemma_check(1.0, 1.0, f1, too_big, {10}, cfg), HypothesisViolation);
}

TEST_CASE("growth lemma scale: s_n shrinks by a^{3/2}") {
  QuadratureConfig cfg;
  cfg.tolerance = 1e-12;
  auto f4 = [](double t) { return (2.0 - 2.0 * std::cos(4.0 * t)) / 16.0; };
  auto g4 = [](double t) { return (1.0 + std::cos(4.0 * t)) / 2.0; };
  auto r1 = growth_lemma_check(1.0, 1.0,
                               [](double t) { return (2.0 - 2.0 * std::cos(2.0 * t)) / 4.0; },
                               [](double t) { return (1.0 + std::cos(2.0 * t)) / 2.0; }, {500}, cfg);
  auto r4 = growth_lemma_check(4.0, 0.7, f4, g4, {500}, cfg);
  CHECK(r1.s_n[0] / r4.s_n[0] == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(std::abs(r4.ratio[0] - 1.0) < 0.05);
}

TEST_CASE("zeta(3/2) partial sums") {
  CHECK(zeta32_partial(0) == 0.0);
  CHECK(zeta32_partial(1) == 1.0);
  // tail after M terms is below 2/sqrt(M)
  for (long m : {100L, 10000L}) {
    double tail = kZeta32 - zeta32_partial(m);
    CHECK(tail > 0);
    CHECK(tail < 2.0 / std::sqrt(static_cast<double>(m)));
  }
}

TEST_CASE("evolution matches the sparse action") {
  GroupWord w = GroupWord::parse("DE'");
  auto x = homology::HomologyClass::horizontal(1);
  Evolution ev(w, x, 6, Exec::Serial);
  homology::HomologyClass cur = x;
  for (long m = 1; m <= 6; ++m) {
    ev.advance_to(m);
    cur = homology::act_word(w, cur);
    CHECK(ev.snapshot() == cur);
  }
}

TEST_CASE("single-m intersection run is exact and unextrapolated") {
  GroupWord w = GroupWord::parse("DE'");
  auto a = surface::cylinder(Rat(1), surface::Family::Horizontal, 1);
  auto run = intersection_asymptotics(w, a, a, {1});
  REQUIRE(run.exact_values.size() == 1);
  CHECK(run.exact_values[0] == rat_of(1, 2));
  CHECK_FALSE(run.extrapolated_limit.has_value());
}

TEST_CASE("square-word consistency: (W^2)^m equals W^{2m} exactly") {
  GroupWord w = GroupWord::parse("DE'");
  GroupWord w2 = GroupWord::parse("DE'DE'");
  auto a = surface::cylinder(Rat(1), surface::Family::Horizontal, 1);
  auto b = surface::cylinder(Rat(1), surface::Family::SlopeOne, 1);
  auto run_w = intersection_asymptotics(w, a, b, {2, 4, 6, 8});
  auto run_w2 = intersection_asymptotics(w2, a, b, {1, 2, 3, 4});
  for (size_t i = 0; i < 4; ++i) CHECK(run_w.exact_values[i] == run_w2.exact_values[i]);
}

TEST_CASE("intersection asymptotics approaches kappa Area(A) Area(B)") {
  GroupWord w = GroupWord::parse("DE'");
  auto a = surface::cylinder(Rat(1), surface::Family::Horizontal, 1);
  auto run = intersection_asymptotics(w, a, a, {20, 40, 80, 160});
  double target = run.target;
  CHECK(target == doctest::Approx(4 * 0.474425).epsilon(1e-5));
  for (size_t i = 1; i < run.scaled_values.size(); ++i)
    CHECK(std::abs(run.scaled_values[i] - target) < std::abs(run.scaled_values[i - 1] - target));
  REQUIRE(run.extrapolated_limit.has_value());
  CHECK(std::abs(*run.extrapolated_limit / target - 1.0) < 0.02);
}

TEST_CASE("homology asymptotics on the zero class is identically zero") {
  GroupWord w = GroupWord::parse("DE'");
  auto run = homology_asymptotics(w, homology::HomologyClass(), {5, 10}, 100, {false, 1});
  for (const auto& v : run.exact_values) CHECK(v == 0);
  CHECK(run.target == 0.0);
}

TEST_CASE("homology asymptotics converges toward the projected target") {
  GroupWord w = GroupWord::parse("DE'");
  auto x = homology::HomologyClass::horizontal(1);
  auto run = homology_asymptotics(w, x, {30, 60, 120}, 1 + 2 * 120, {false, 1});
  CHECK(run.target == doctest::Approx(0.809894).epsilon(1e-4));
  double e0 = std::abs(run.scaled_values[0] - run.target);
  double e2 = std::abs(run.scaled_values[2] - run.target);
  CHECK(e2 < e0);
  // beta coordinate too
  auto run_b = homology_asymptotics(w, x, {30, 60, 120}, 1 + 2 * 120, {true, 1});
  CHECK(run_b.target == doctest::Approx(0.670938).epsilon(1e-4));
  CHECK(std::abs(run_b.scaled_values[2] - run_b.target) <
        std::abs(run_b.scaled_values[0] - run_b.target));
}

TEST_CASE("homology asymptotics square-word targets") {
  // lambda of W^2 is lambda^2 and kappa scales by 2^{-3/2}; the alpha_1
  // target therefore scales by 2^{-3/2} as well
  GroupWord w = GroupWord::parse("DE'");
  GroupWord w2 = GroupWord::parse("DE'DE'");
  auto x = homology::HomologyClass::horizontal(1);
  auto r1 = homology_asymptotics(w, x, {10, 20}, 200, {false, 1});
  auto r2 = homology_asymptotics(w2, x, {10, 20}, 200, {false, 1});
  CHECK(r2.target == doctest::Approx(r1.target * std::pow(2.0, -1.5)).epsilon(1e-12));
}

TEST_CASE("nonrecurrence run stays under the series bound") {
  GroupWord w = GroupWord::parse("DE'");
  auto a = surface::cylinder(Rat(1), surface::Family::Horizontal, 1);
  auto sum = nonrecurrence_sum(w, a, 60);
  CHECK(sum.partial_sum > 0);
  CHECK(sum.partial_sum < sum.comparison_bound);
  CHECK(sum.last_increment_violation == 0);
  auto empty = nonrecurrence_sum(w, a, 0);
  CHECK(empty.partial_sum == 0.0);
}

TEST_CASE("errors: m list validation and non-hyperbolic words") {
  GroupWord d = GroupWord::parse("D");
  auto a = surface::cylinder(Rat(1), surface::Family::Horizontal, 1);
  CHECK_THROWS_AS(intersection_asymptotics(d, a, a, {10}), veech::NotHyperbolic);
  GroupWord w = GroupWord::parse("DE'");
  CHECK_THROWS_AS(intersection_asymptotics(w, a, a, {}), std::invalid_argument);
  CHECK_THROWS_AS(intersection_asymptotics(w, a, a, {10, 10}), std::invalid_argument);
  auto off_surface = surface::cylinder(rat_of(5, 4), surface::Family::Horizontal, 1);
  CHECK_THROWS_AS(intersection_asymptotics(w, off_surface, a, {10}), std::invalid_argument);
  CHECK_THROWS_AS(
      homology_asymptotics(w, homology::HomologyClass::horizontal(1), {10}, 5, {false, 1}),
      homology::TruncationTooShort);
}

TEST_SUITE_END();
