#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "latsurf/rational.hpp"

namespace latsurf {

// Thin RAII wrapper around mpfr_t with explicit binary precision.
// Binary operations round to the larger precision of the two operands.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 256) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~BigFloat() { mpfr_clear(v_); }

  static BigFloat of(double x, mpfr_prec_t bits) { BigFloat r(bits); mpfr_set_d(r.v_, x, MPFR_RNDN); return r; }
  static BigFloat of(long x, mpfr_prec_t bits) { BigFloat r(bits); mpfr_set_si(r.v_, x, MPFR_RNDN); return r; }
  static BigFloat of(const Rat& q, mpfr_prec_t bits) { BigFloat r(bits); mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN); return r; }
  static BigFloat of(const Int& z, mpfr_prec_t bits) { BigFloat r(bits); mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN); return r; }
  static BigFloat parse(const std::string& s, mpfr_prec_t bits) {
    BigFloat r(bits);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw std::invalid_argument("BigFloat::parse: bad decimal literal: " + s);
    return r;
  }
  static BigFloat pi(mpfr_prec_t bits) { BigFloat r(bits); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }

  mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
  BigFloat rounded_to(mpfr_prec_t bits) const {
    BigFloat r(bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }
  double d() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_); }
  // position of the leading bit, as in mpfr_get_exp
  mpfr_exp_t exponent() const { return mpfr_get_exp(v_); }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_add); }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_sub); }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_mul); }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return bin(a, b, mpfr_div); }
  BigFloat operator-() const { BigFloat r(bits()); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

  friend BigFloat abs(const BigFloat& a) { BigFloat r(a.bits()); mpfr_abs(r.v_, a.v_, MPFR_RNDN); return r; }
  friend BigFloat sqrt(const BigFloat& a) { BigFloat r(a.bits()); mpfr_sqrt(r.v_, a.v_, MPFR_RNDN); return r; }
  friend BigFloat log(const BigFloat& a) { BigFloat r(a.bits()); mpfr_log(r.v_, a.v_, MPFR_RNDN); return r; }
  friend BigFloat exp(const BigFloat& a) { BigFloat r(a.bits()); mpfr_exp(r.v_, a.v_, MPFR_RNDN); return r; }
  friend BigFloat pow_si(const BigFloat& a, long e) { BigFloat r(a.bits()); mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN); return r; }
  friend BigFloat floor(const BigFloat& a) { BigFloat r(a.bits()); mpfr_rint(r.v_, a.v_, MPFR_RNDD); return r; }

  // nearest integer as exact Int (ties toward even, mpfr semantics)
  Int round_to_int() const {
    BigFloat t(bits());
    mpfr_rint(t.v_, v_, MPFR_RNDN);
    Int z;
    mpfr_get_z(z.get_mpz_t(), t.v_, MPFR_RNDN);
    return z;
  }
  Int floor_to_int() const {
    Int z;
    mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
    return z;
  }

  std::string str(size_t digits = 0) const {
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string digs = neg ? mant.substr(1) : mant;
    std::string out = (neg ? "-" : "") + ("0." + digs) + "e" + std::to_string(e);
    return out;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  using mpfr_bin_fn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
  static BigFloat bin(const BigFloat& a, const BigFloat& b, mpfr_bin_fn fn) {
    BigFloat r(std::max(a.bits(), b.bits()));
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  mpfr_t v_;
};

}  // namespace latsurf
