#include <doctest.h>

#include <cmath>
#include <random>

#include "latsurf/veech.hpp"

using namespace latsurf;
using namespace latsurf::veech;

TEST_SUITE_BEGIN("veech");

TEST_CASE("eval_word examples") {
  // D is constant in c
  CHECK(eval_word(GroupWord::parse("D"), rat_of(7, 3)) == Mat2q{1, 2, 0, 1});
  CHECK(eval_word(GroupWord(), Rat(1)) == Mat2q::identity());
  // D_1 E_1^{-1} with E_c^{-1} = [[c+2, -c-1], [c+1, -c]]
  CHECK(eval_word(GroupWord::parse("DE'"), Rat(1)) == Mat2q{7, -4, 2, -1});
}

TEST_CASE("E inverse has the adjugate form") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-8, 8);
  for (int t = 0; t < 10; ++t) {
    Rat c = rat_of(num(rng), 3);
    Mat2q ei = eval_word(GroupWord::parse("E'"), c);
    CHECK(ei == Mat2q{c + 2, -c - 1, c + 1, -c});
  }
}

TEST_CASE("trace_poly examples") {
  CHECK(trace_poly(GroupWord::parse("D")) == Poly::constant(2));
  CHECK(trace_poly(GroupWord::parse("A")) == Poly());
  CHECK(trace_poly(GroupWord::parse("DE'")) == Poly({Rat(4), Rat(2)}));  // 2c + 4
}

TEST_CASE("trace_poly agrees with matrix evaluation on random words") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> len(1, 7), pick(0, 5), flip(0, 1), num(-6, 6);
  static const Gen gens[] = {Gen::A, Gen::B, Gen::C, Gen::D, Gen::E, Gen::NegI};
  for (int t = 0; t < 40; ++t) {
    std::vector<Letter> ls;
    for (int i = 0, L = len(rng); i < L; ++i) {
      Gen g = gens[pick(rng)];
      ls.push_back({g, !is_involution(g) && flip(rng) ? -1 : 1});
    }
    GroupWord w(std::move(ls));
    Rat c = rat_of(num(rng), 4);
    CHECK(trace_poly(w).eval(c) == eval_word(w, c).trace());
  }
}

TEST_CASE("evaluation commutes with word multiplication") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> len(1, 5), pick(0, 5), flip(0, 1), num(-5, 5);
  static const Gen gens[] = {Gen::A, Gen::B, Gen::C, Gen::D, Gen::E, Gen::NegI};
  auto rand_word = [&] {
    std::vector<Letter> ls;
    for (int i = 0, L = len(rng); i < L; ++i) {
      Gen g = gens[pick(rng)];
      ls.push_back({g, !is_involution(g) && flip(rng) ? -1 : 1});
    }
    return GroupWord(std::move(ls));
  };
  for (int t = 0; t < 30; ++t) {
    GroupWord w1 = rand_word(), w2 = rand_word();
    Rat c = rat_of(num(rng), 3);
    CHECK(eval_word(w1 * w2, c) == eval_word(w1, c) * eval_word(w2, c));
  }
}

TEST_CASE("eigenvalue bound holds on random hyperbolic-at-1 words too") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> len(1, 6), pick(0, 5), flip(0, 1);
  static const Gen gens[] = {Gen::A, Gen::B, Gen::C, Gen::D, Gen::E, Gen::NegI};
  int tested = 0;
  for (int t = 0; t < 120 && tested < 12; ++t) {
    std::vector<Letter> ls;
    for (int i = 0, L = len(rng); i < L; ++i) {
      Gen g = gens[pick(rng)];
      ls.push_back({g, !is_involution(g) && flip(rng) ? -1 : 1});
    }
    GroupWord w(std::move(ls));
    if (eigenvalue_modulus(w, Rat(1)) <= 1.0) continue;
    ++tested;
    CHECK(max_modulus_on_grid(w, 200, Exec::Serial) < eigenvalue_modulus(w, Rat(1)));
  }
  CHECK(tested >= 6);
}

TEST_CASE("word determinant polynomial is constant +-1") {
  for (const char* s : {"A", "B", "C", "D", "E", "J", "DE'", "ABC", "DE'D"}) {
    Poly d = word_matrix_poly(GroupWord::parse(s)).det();
    CHECK(d.degree() == 0);
    CHECK((d.coeff(0) == 1 || d.coeff(0) == -1));
    CHECK(d.coeff(0) == GroupWord::parse(s).det_sign());
  }
}

TEST_CASE("eigen classification examples") {
  auto h = eigen(GroupWord::parse("DE'"), Rat(1));
  CHECK(h.classification == Classification::Hyperbolic);
  CHECK(h.lambda == doctest::Approx(3.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-12));

  CHECK(eigen(GroupWord::parse("D"), Rat(1)).classification == Classification::Parabolic);

  // trace of D_c E_c is -2c, so DE is parabolic exactly at c = 1
  CHECK(trace_poly(GroupWord::parse("DE")) == Poly({Rat(0), Rat(-2)}));
  CHECK(eigen(GroupWord::parse("DE"), Rat(1)).classification == Classification::Parabolic);

  CHECK(eigen(GroupWord(), Rat(1)).classification == Classification::Identity);
  CHECK(eigen(GroupWord::parse("J"), Rat(1)).classification == Classification::Identity);
  CHECK(eigen(GroupWord::parse("A"), Rat(1)).classification == Classification::Elliptic);
}

TEST_CASE("eigenvectors satisfy M v = mu v") {
  auto e = eigen(GroupWord::parse("DE'"), Rat(1));
  Mat2q m = eval_word(GroupWord::parse("DE'"), Rat(1));
  double a = rat_d(m.a), b = rat_d(m.b), c = rat_d(m.c), d = rat_d(m.d);
  double r1 = a * e.v_plus[0] + b * e.v_plus[1] - e.lambda * e.v_plus[0];
  double r2 = c * e.v_plus[0] + d * e.v_plus[1] - e.lambda * e.v_plus[1];
  CHECK(std::abs(r1) < 1e-12);
  CHECK(std::abs(r2) < 1e-12);
  double mu = e.sign / e.lambda;
  double s1 = a * e.v_minus[0] + b * e.v_minus[1] - mu * e.v_minus[0];
  double s2 = c * e.v_minus[0] + d * e.v_minus[1] - mu * e.v_minus[1];
  CHECK(std::abs(s1) < 1e-12);
  CHECK(std::abs(s2) < 1e-12);
}

TEST_CASE("kappa for DE' and its square") {
  auto kd = kappa(GroupWord::parse("DE'"));
  CHECK(kd.derivative.d() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(kd.kappa.d() == doctest::Approx(0.474425).epsilon(1e-5));

  auto kd2 = kappa(GroupWord::parse("DE'DE'"));
  CHECK(kd2.derivative.d() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(kd2.kappa.d() ==
        doctest::Approx(kd.kappa.d() * std::pow(2.0, -1.5)).epsilon(1e-13));
}

TEST_CASE("kappa error cases") {
  CHECK_THROWS_AS(kappa(GroupWord::parse("D")), NotHyperbolic);
  CHECK_THROWS_AS(kappa(GroupWord::parse("A")), OrientationReversing);
}

TEST_CASE("kappa derivative cross-checked by finite differences of log lambda") {
  for (const char* s : {"DE'", "DE'D", "DE'DE'"}) {
    GroupWord w = GroupWord::parse(s);
    auto kd = kappa(w);
    const double h = 1e-6;
    auto two_log_lambda = [&](const Rat& c) {
      auto e = eigen(w, c);
      return 2.0 * std::log(e.lambda);
    };
    double fd =
        (two_log_lambda(Rat(1) + rat_of(1, 1000000)) - two_log_lambda(Rat(1) - rat_of(1, 1000000))) /
        (2 * h);
    CHECK(std::abs(fd / kd.derivative.d() - 1.0) < 1e-6);
  }
}

TEST_CASE("eigenvalue upper bound on [-1,1) grid") {
  for (const char* s : {"DE'", "DE'DE'", "DE'D"}) {
    GroupWord w = GroupWord::parse(s);
    double lam1 = eigen(w, Rat(1)).lambda;
    for (Exec exec : {Exec::Serial, Exec::Par}) {
      double mx = max_modulus_on_grid(w, 200, exec);
      CHECK(mx < lam1);
    }
  }
}

TEST_CASE("derivative of lambda at 1 is positive for hyperbolic-at-1 words") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> len(1, 6), pick(0, 5), flip(0, 1);
  static const Gen gens[] = {Gen::A, Gen::B, Gen::C, Gen::D, Gen::E, Gen::NegI};
  int tested = 0;
  for (int t = 0; t < 200 && tested < 25; ++t) {
    std::vector<Letter> ls;
    for (int i = 0, L = len(rng); i < L; ++i) {
      Gen g = gens[pick(rng)];
      ls.push_back({g, !is_involution(g) && flip(rng) ? -1 : 1});
    }
    GroupWord w(std::move(ls));
    if (w.det_sign() != 1) continue;
    Rat t1 = trace_poly(w).eval(1);
    if (abs(t1) <= 2) continue;
    ++tested;
    CHECK(eigenvalue_derivative_at_one(w) > 0);
  }
  CHECK(tested >= 10);
}

TEST_SUITE_END();
