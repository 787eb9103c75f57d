#include "latsurf/veech.hpp"

#include <cmath>
#include <vector>

namespace latsurf::veech {

Mat2p Mat2p::identity() {
  return {Poly::constant(1), Poly(), Poly(), Poly::constant(1)};
}

Mat2p Mat2p::operator*(const Mat2p& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Mat2q gen_matrix(Gen g, const Rat& c) {
  switch (g) {
    case Gen::A: return {-1, 0, 0, 1};
    case Gen::B: return {-1, 2, 0, 1};
    case Gen::C: return {-c, c - 1, -c - 1, c};
    case Gen::D: return {1, 2, 0, 1};
    case Gen::E: return {-c, c + 1, -c - 1, c + 2};
    case Gen::NegI: return {-1, 0, 0, -1};
  }
  throw std::logic_error("unreachable");
}

Mat2p gen_matrix_poly(Gen g) {
  const Poly one = Poly::constant(1);
  const Poly c = Poly::x();
  switch (g) {
    case Gen::A: return {-one, Poly(), Poly(), one};
    case Gen::B: return {-one, Poly::constant(2), Poly(), one};
    case Gen::C: return {-c, c - one, -c - one, c};
    case Gen::D: return {one, Poly::constant(2), Poly(), one};
    case Gen::E: return {-c, c + one, -c - one, c + Poly::constant(2)};
    case Gen::NegI: return {-one, Poly(), Poly(), -one};
  }
  throw std::logic_error("unreachable");
}

Mat2q eval_word(const GroupWord& w, const Rat& c) {
  Mat2q m = Mat2q::identity();
  for (const auto& l : w.letters()) {
    Mat2q g = gen_matrix(l.gen, c);
    m = m * (l.exp < 0 ? g.inverse() : g);
  }
  return m;
}

namespace {

// adjugate divided by the (constant, +-1) determinant
Mat2p poly_inverse(const Mat2p& m) {
  Poly dt = m.det();
  if (dt.degree() != 0) throw std::logic_error("generator word with non-constant determinant");
  Rat s = dt.coeff(0);
  if (s != 1 && s != -1) throw std::logic_error("generator word with non-unimodular determinant");
  Rat inv = Rat(1) / s;
  return {m.d * inv, -(m.b * inv), -(m.c * inv), m.a * inv};
}

}  // namespace

Mat2p word_matrix_poly(const GroupWord& w) {
  Mat2p m = Mat2p::identity();
  for (const auto& l : w.letters()) {
    Mat2p g = gen_matrix_poly(l.gen);
    m = m * (l.exp < 0 ? poly_inverse(g) : g);
  }
  return m;
}

Poly trace_poly(const GroupWord& w) { return word_matrix_poly(w).trace(); }

namespace {

std::array<double, 2> unit_eigenvector(const Mat2q& m, double mu) {
  double a = rat_d(m.a), b = rat_d(m.b), c = rat_d(m.c), d = rat_d(m.d);
  double vx, vy;
  if (std::abs(b) >= std::abs(c) && b != 0) {
    vx = b;
    vy = mu - a;
  } else if (c != 0) {
    vx = mu - d;
    vy = c;
  } else {
    // diagonal matrix
    if (std::abs(a - mu) <= std::abs(d - mu)) {
      vx = 1; vy = 0;
    } else {
      vx = 0; vy = 1;
    }
  }
  double n = std::hypot(vx, vy);
  return {vx / n, vy / n};
}

}  // namespace

EigenData eigen(const GroupWord& w, const Rat& c, mpfr_prec_t bits) {
  Mat2q m = eval_word(w, c);
  Rat t = m.trace();
  Rat dt = m.det();
  EigenData out;

  if (m.b == 0 && m.c == 0 && m.a == m.d) {
    out.classification = Classification::Identity;
    return out;
  }

  Rat disc = t * t - Rat(4) * dt;  // discriminant of x^2 - t x + det
  if (disc > 0) {
    BigFloat tb = BigFloat::of(t, bits);
    BigFloat root = sqrt(BigFloat::of(disc, bits));
    BigFloat lam_big = (abs(tb) + root) / BigFloat::of(2L, bits);
    if (lam_big.d() <= 1.0) {
      // real eigenvalues of modulus 1: a reflection (det = -1, trace 0)
      out.classification = Classification::Elliptic;
      return out;
    }
    out.classification = Classification::Hyperbolic;
    out.lambda = lam_big.d();
    int ts = sgn(t) >= 0 ? 1 : -1;
    double mu_plus = ts * out.lambda;           // eigenvalue of largest modulus
    double mu_minus = rat_d(dt) / mu_plus;      // the +-1/lambda partner
    out.v_plus = unit_eigenvector(m, mu_plus);
    out.v_minus = unit_eigenvector(m, mu_minus);
    out.sign = mu_minus > 0 ? 1 : -1;
    return out;
  }
  out.classification = disc == 0 ? Classification::Parabolic : Classification::Elliptic;
  return out;
}

double eigenvalue_modulus(const GroupWord& w, const Rat& c) {
  Mat2q m = eval_word(w, c);
  Rat t = m.trace();
  Rat disc = t * t - Rat(4) * m.det();
  if (disc <= 0) return 1.0;
  double td = std::abs(rat_d(t));
  double lam = (td + std::sqrt(rat_d(disc))) / 2.0;
  return std::max(lam, 1.0);
}

double max_modulus_on_grid(const GroupWord& w, int points, Exec exec) {
  std::vector<double> vals(points);
  parallel_for(exec, 0, points, [&](std::int64_t i) {
    Rat c = Rat(-1) + rat_of(2 * i, points);  // covers [-1, 1)
    vals[i] = eigenvalue_modulus(w, c);
  });
  double mx = 0;
  for (double v : vals) mx = std::max(mx, v);
  return mx;
}

double eigenvalue_derivative_at_one(const GroupWord& w) {
  Poly t = trace_poly(w);
  Rat t1 = t.eval(1);
  if (abs(t1) <= 2) throw NotHyperbolic("word " + w.str() + " has |trace(1)| <= 2");
  double td = rat_d(t1);
  double tp = t.derivative().eval_d(1.0);
  double root = std::sqrt(td * td - 4.0 * rat_d(eval_word(w, 1).det()));
  double lam = (std::abs(td) + root) / 2.0;
  return (td > 0 ? 1.0 : -1.0) * tp * lam / root;
}

KappaData kappa(const GroupWord& w, mpfr_prec_t bits) {
  if (w.det_sign() != 1)
    throw OrientationReversing("kappa requires det +1, word " + w.str());
  Poly t = trace_poly(w);
  Rat t1 = t.eval(1);
  if (abs(t1) <= 2) throw NotHyperbolic("word " + w.str() + " is not hyperbolic at c = 1");
  Rat tp1 = t.derivative().eval(1);

  // d/dc [2 log lambda_c] = 2 sign(t) t'(c) / sqrt(t(c)^2 - 4)
  int ts = sgn(t1) > 0 ? 1 : -1;
  BigFloat num = BigFloat::of(Rat(2 * ts) * tp1, bits);
  BigFloat den = sqrt(BigFloat::of(t1 * t1 - 4, bits));
  BigFloat deriv = num / den;
  if (deriv.sign() <= 0)
    throw NonPositiveDerivative("derivative of 2 log lambda at c=1 is " + std::to_string(deriv.d()) +
                                " for word " + w.str());

  BigFloat pi = BigFloat::pi(bits);
  BigFloat k = BigFloat::of(1L, bits) / (BigFloat::of(2L, bits) * sqrt(pi));
  k = k / (deriv * sqrt(deriv));  // deriv^(-3/2)
  return {deriv, k};
}

}  // namespace latsurf::veech
