#pragma once

#include <optional>
#include <string>
#include <vector>

#include "latsurf/bigfloat.hpp"
#include "latsurf/rational.hpp"

namespace latsurf::farey {

struct PrecisionExhausted : std::runtime_error {
  explicit PrecisionExhausted(const std::string& m)
      : std::runtime_error("farey.PrecisionExhausted: " + m) {}
};
struct RationalInput : std::invalid_argument {
  explicit RationalInput(const std::string& m)
      : std::invalid_argument("farey.RationalInput: " + m) {}
};
struct ExcludedParity : std::domain_error {
  explicit ExcludedParity(const std::string& m)
      : std::domain_error("farey.ExcludedParity: " + m) {}
};

// p/q in lowest terms with q >= 0; q = 0 only for 1/0 = infinity.
struct ReducedFraction {
  Int p, q;

  static ReducedFraction of(Int p, Int q);
  bool operator==(const ReducedFraction&) const = default;
  std::string str() const { return p.get_str() + "/" + q.get_str(); }
  Rat rat() const { return Rat(p) / Rat(q); }
};

enum class Parity { P01, P11, P10 };  // (p mod 2, q mod 2) after reduction

Parity parity_class(const ReducedFraction& f);
std::string parity_str(Parity p);

// |p s - r q| = 1
bool farey_adjacent(const ReducedFraction& a, const ReducedFraction& b);

// theta for the tree walk: a quadratic surd (a + b sqrt(d)) / e or a decimal
// literal, carried at an explicit precision with guarded comparisons.
class Theta {
 public:
  static Theta surd(long a, long b, long d, long e, mpfr_prec_t bits);
  static Theta sqrt_of(long d, mpfr_prec_t bits) { return surd(0, 1, d, 1, bits); }
  static Theta decimal(const std::string& digits, mpfr_prec_t bits);

  const BigFloat& value() const { return value_; }
  mpfr_prec_t bits() const { return value_.bits(); }
  const std::string& descriptor() const { return descriptor_; }

  // sign of theta - p/q; PrecisionExhausted when the difference is below the
  // guard threshold of the working precision
  int compare(const Int& p, const Int& q) const;

  // |theta - p/q| as a double
  double distance(const Int& p, const Int& q) const;

 private:
  Theta(BigFloat v, std::string d) : value_(std::move(v)), descriptor_(std::move(d)) {}
  BigFloat value_;
  std::string descriptor_;
};

struct GEntry {
  ReducedFraction fraction;
  std::optional<long> k;  // coding integer, present from the third entry on
  double witness;         // i * q_i * |theta - p_i/q_i|, i 1-based
};

struct GSequence {
  std::string theta_descriptor;
  mpfr_prec_t precision_bits;
  std::vector<GEntry> entries;
};

// Walk of the tree G from the nearest integer toward theta. Entry 2 moves to
// n + sign(theta - n)/b for the unique odd b within distance 1 of
// 1/|theta - n|; later entries follow the coding
//   p_{i+1}/q_{i+1} = (p_{i-1} + 2 k p_i) / (q_{i-1} + 2 k q_i)
// with k the unique nonzero integer whose subtree interval brackets theta.
GSequence gsequence(const Theta& theta, int depth);

// Boundary saddle-connection holonomy of the n-th cylinder union in direction
// p/q: (2nq, 2np) for the 0/1 class and ((2n+1)q, (2n+1)p) for 1/1.
Vec2q boundary_holonomy(const ReducedFraction& f, long n);

// (2n or 2n+1) / sqrt(1 + theta^2) * |(1, theta) ^ (q, p)|
double transverse_boundary_measure(const Theta& theta, const ReducedFraction& f, long n);

struct WitnessSeries {
  std::vector<double> witnesses;
  std::vector<double> running_min;
};

WitnessSeries recurrence_witness(const Theta& theta, int depth);

struct ConvergentReport {
  ReducedFraction convergent;
  Parity parity;
  bool in_gsequence;
};

struct CfOverlap {
  std::vector<ConvergentReport> convergents;  // those with q <= max G denominator
  long admissible = 0;
  long found = 0;
};

// Standard continued-fraction convergents of theta compared against the
// G-sequence entries at the given depth.
CfOverlap cf_overlap(const Theta& theta, int depth);

}  // namespace latsurf::farey
