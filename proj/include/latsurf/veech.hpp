#pragma once

#include <array>
#include <stdexcept>

#include "latsurf/bigfloat.hpp"
#include "latsurf/parallel.hpp"
#include "latsurf/poly.hpp"
#include "latsurf/rational.hpp"
#include "latsurf/words.hpp"

namespace latsurf::veech {

struct NotHyperbolic : std::domain_error {
  explicit NotHyperbolic(const std::string& m) : std::domain_error("veech.NotHyperbolic: " + m) {}
};
struct NonPositiveDerivative : std::logic_error {
  explicit NonPositiveDerivative(const std::string& m)
      : std::logic_error("veech.NonPositiveDerivative: " + m) {}
};
struct OrientationReversing : std::domain_error {
  explicit OrientationReversing(const std::string& m)
      : std::domain_error("veech.OrientationReversing: " + m) {}
};

// 2x2 matrix of polynomials in c
struct Mat2p {
  Poly a, b, c, d;

  static Mat2p identity();
  Mat2p operator*(const Mat2p& o) const;
  Poly trace() const { return a + d; }
  Poly det() const { return a * d - b * c; }
  Mat2q eval(const Rat& x) const { return {a.eval(x), b.eval(x), c.eval(x), d.eval(x)}; }
};

// Generator matrices; constant generators do not depend on c.
Mat2q gen_matrix(Gen g, const Rat& c);
Mat2p gen_matrix_poly(Gen g);

// Exact product of the generator matrices at rational c. Inverse letters use
// the adjugate, valid because every generator has determinant +-1.
Mat2q eval_word(const GroupWord& w, const Rat& c);

// Symbolic product over Q[c].
Mat2p word_matrix_poly(const GroupWord& w);
Poly trace_poly(const GroupWord& w);

enum class Classification { Hyperbolic, Parabolic, Elliptic, Identity };

struct EigenData {
  Classification classification;
  double lambda = 1.0;        // largest eigenvalue modulus; > 1 iff hyperbolic
  std::array<double, 2> v_plus{1, 0};   // expanding unit eigenvector (hyperbolic only)
  std::array<double, 2> v_minus{0, 1};  // contracting unit eigenvector
  int sign = 1;               // sign of the v_minus eigenvalue (+-1/lambda)
};

// Classification of eval_word(w, c). The trace comparison against 2 is exact.
// For det = -1 the eigenvalues are real with product -1 (a reflection when the
// trace vanishes, classified Elliptic since its action has modulus 1).
EigenData eigen(const GroupWord& w, const Rat& c, mpfr_prec_t bits = 256);

// Largest eigenvalue modulus of the matrix at c, as used by the eigenvalue
// upper bound scan; elliptic and parabolic count as 1.
double eigenvalue_modulus(const GroupWord& w, const Rat& c);

// max of eigenvalue_modulus over an even grid of `points` rationals covering
// [-1, 1); the scan runs in parallel over grid points
double max_modulus_on_grid(const GroupWord& w, int points, Exec exec = Exec::Par);

// d(lambda_c)/dc at c = 1 from the trace polynomial:
//   d lambda / dc = sign(t) * t'(c) * lambda / sqrt(t^2 - 4).
double eigenvalue_derivative_at_one(const GroupWord& w);

struct KappaData {
  BigFloat derivative;  // d/dc [2 log lambda_c] at c = 1, must be > 0
  BigFloat kappa;       // (1 / 2 sqrt(pi)) * derivative^(-3/2)
};

// Asymptotic constant of a hyperbolic, orientation preserving word.
KappaData kappa(const GroupWord& w, mpfr_prec_t bits = 256);

}  // namespace latsurf::veech
