#pragma once

#include <string>
#include <vector>

#include "latsurf/rational.hpp"

namespace latsurf {

// Dense polynomial over exact rationals. The group generators have degree <= 1
// entries, so products of short words stay small and a dense representation is
// the right tool.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rat> cs) : c_(cs) { trim(); }
  explicit Poly(std::vector<Rat> cs) : c_(std::move(cs)) { trim(); }
  static Poly constant(Rat v) { return Poly({std::move(v)}); }
  static Poly x() { return Poly({Rat(0), Rat(1)}); }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial reported as -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(size_t k) const {
    static const Rat zero(0);
    return k < c_.size() ? c_[k] : zero;
  }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& s) const;
  Poly operator-() const { return *this * Rat(-1); }
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly derivative() const;

  Rat eval(const Rat& x) const;
  double eval_d(double x) const;

  std::string str(const std::string& var = "c") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;  // c_[k] * x^k
};

// Chebyshev polynomials of the first and second kind in the monomial basis,
// cached across calls.
const Poly& chebyshev_T(int j);
const Poly& chebyshev_U(int j);

// Finite cosine series sum_j c_j cos(j*theta), i.e. a polynomial in
// c = cos(theta) expressed over the Chebyshev T basis with exact coefficients.
class ChebSeries {
 public:
  ChebSeries() = default;
  explicit ChebSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  bool is_zero() const { return c_.empty(); }
  int max_harmonic() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(size_t j) const {
    static const Rat zero(0);
    return j < c_.size() ? c_[j] : zero;
  }

  ChebSeries& add_term(int j, const Rat& v) {
    if (j >= static_cast<int>(c_.size())) c_.resize(j + 1, Rat(0));
    c_[j] += v;
    trim();
    return *this;
  }
  ChebSeries operator+(const ChebSeries& o) const;
  ChebSeries operator*(const Rat& s) const;

  // value at theta = 0, i.e. at c = 1
  Rat value_at_one() const;
  // d^2/dtheta^2 at theta = 0; each cos(j theta) contributes -j^2 c_j
  Rat second_theta_derivative_at_zero() const;

  Rat eval(const Rat& c) const;    // exact, by T_j value recurrence
  double eval_d(double c) const;

  Poly to_poly() const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

}  // namespace latsurf
