#pragma once

#include <map>
#include <string>
#include <vector>

#include "latsurf/parallel.hpp"
#include "latsurf/poly.hpp"
#include "latsurf/quadrature.hpp"
#include "latsurf/rational.hpp"
#include "latsurf/words.hpp"

namespace latsurf::homology {

struct TruncationTooShort : std::length_error {
  explicit TruncationTooShort(const std::string& m)
      : std::length_error("homology.TruncationTooShort: " + m) {}
};

// Element of H_1(S \ Sigma) in the cylinder basis: <alpha | beta> =
// sum alpha_n [C^n_{1,0}] + sum beta_n [C^n_{1,1}]. All sequences here are
// 1-based; any formula touching index 0 or an index beyond the support reads
// an exact 0.
class HomologyClass {
 public:
  using Coords = std::map<long, Rat>;

  HomologyClass() = default;
  HomologyClass(Coords alpha, Coords beta);

  static HomologyClass horizontal(long n, Rat coeff = Rat(1));  // coeff * [C^n_{1,0}]
  static HomologyClass slope_one(long n, Rat coeff = Rat(1));   // coeff * [C^n_{1,1}]

  const Coords& alpha() const { return alpha_; }
  const Coords& beta() const { return beta_; }
  Rat alpha_at(long n) const;
  Rat beta_at(long n) const;
  bool is_zero() const { return alpha_.empty() && beta_.empty(); }
  long max_support() const;  // 0 for the zero class

  HomologyClass operator+(const HomologyClass& o) const;
  HomologyClass operator-() const;
  HomologyClass operator*(const Rat& s) const;
  bool operator==(const HomologyClass& o) const { return alpha_ == o.alpha_ && beta_ == o.beta_; }

  std::string json() const;

 private:
  void prune();
  Coords alpha_, beta_;
};

// First N coordinates of an element of the extended space H1-bar (no bounded
// support condition), e.g. L_c(a,b) or the kernel element z. Every generator
// action has stencil reach 1 and consumes one top coordinate; running out of
// declared coordinates is a hard error, never a silent zero-fill.
class TruncatedExtendedClass {
 public:
  TruncatedExtendedClass(long n, std::string provenance);

  long valid_n() const { return valid_; }
  const std::string& provenance() const { return tag_; }

  Rat& alpha(long n) { return alpha_.at(static_cast<size_t>(n)); }
  Rat& beta(long n) { return beta_.at(static_cast<size_t>(n)); }
  const Rat& alpha(long n) const { return alpha_.at(static_cast<size_t>(n)); }
  const Rat& beta(long n) const { return beta_.at(static_cast<size_t>(n)); }

  void consume_top(int count, const std::string& op);

  // z = <(1, -1, 1, -1, ...) | 0>, the kernel of the intersection pairing
  static TruncatedExtendedClass kernel_element_z(long n);

 private:
  long valid_;
  std::string tag_;
  std::vector<Rat> alpha_, beta_;  // index 0 unused
};

// --- intersection form -------------------------------------------------

// sum_n (a^x_n b^y_n + a^x_{n+1} b^y_n - b^x_n a^y_n - b^x_n a^y_{n+1});
// integral symplectic on integral classes.
Rat intersect(const HomologyClass& x, const HomologyClass& y);
// Truncated left argument: requires support(y) within [1, N-1].
Rat intersect(const TruncatedExtendedClass& x, const HomologyClass& y);

// --- generator actions -------------------------------------------------

// Actions on coordinates (beta_0 = 0 throughout):
//   D:  alpha'_n = alpha_n + beta_{n-1} + beta_n
//   E:  beta'_n  = beta_n - alpha_n - alpha_{n+1}
//   A:  alpha'_n = -alpha_n - beta_{n-1} - beta_n
//   -I: negates both sequences
// with the inverses obtained by solving for the primed coordinates.
HomologyClass act(Gen g, int exp, const HomologyClass& x);
void act_in_place(Gen g, int exp, TruncatedExtendedClass& x, Exec exec = Exec::Serial);

// Left-to-right operator composition matching the matrix product: the
// rightmost letter acts first, so hol(act_word(W, x)) = eval_word(W) hol(x).
// Words containing B or C are rewritten over {A, D, E, -I} first.
HomologyClass act_word(const GroupWord& w, const HomologyClass& x);
void act_word_in_place(const GroupWord& w, TruncatedExtendedClass& x, Exec exec = Exec::Serial);

// --- raw kernels (dense spans, shared by sparse tests and the evolution
// engine; exercised both serially and with OpenMP) ----------------------

// alpha, beta are 0-based spans holding coordinates 1..limit in slots
// 0..limit-1. Applies one generator in place.
void apply_generator_kernel(Gen g, int exp, std::vector<Rat>& alpha, std::vector<Rat>& beta,
                            long limit, Exec exec);

// --- holonomy and invariant planes -------------------------------------

// hol_c of the basis classes: ([C^n_{1,0}]) -> (2 x_{n-1} + 2 x_n, 0) and
// ([C^n_{1,1}]) -> (w_n, w_n) with w_n = x_n - x_{1-n} + x_{n+1} - x_{-n}.
Vec2q hol(const Rat& c, const HomologyClass& x);

// L_c(a, b): alpha_n = (a-b) (1 + 2 sum_{j<n} T_j(c)), beta_n = 2 b U_{n-1}(c)
// with the (1+c) factor of the width cancelled symbolically, so any rational
// c is admissible (including c = -1).
TruncatedExtendedClass invariant_plane_class(const Rat& c, const Rat& a, const Rat& b, long n);

// --- psi embedding ------------------------------------------------------

// psi[C^n_{1,0}] = (2 T_{n-1} - 2 T_n, 0),
// psi[C^n_{1,1}] = (T_{n-1} - T_{n+1}) * (1, 1), extended linearly.
struct PolyPair {
  ChebSeries first, second;
};

PolyPair psi(const HomologyClass& x);

// Worst absolute coordinate error over indices 1..n of
// (1 / 4 pi) Int L_{cos theta}(psi(x)(cos theta)) d theta against x itself.
double reconstruct_error(const HomologyClass& x, long n, const QuadratureConfig& cfg,
                         Exec exec = Exec::Par);

}  // namespace latsurf::homology
