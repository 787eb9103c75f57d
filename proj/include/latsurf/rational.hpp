#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace latsurf {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p/q" or "p" and canonicalizes (mpq_class string ctor does not).
inline Rat rat_parse(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Two-argument mpq_class construction does not reduce; this does.
inline Rat rat_of(long p, long q) {
  Rat r(p, q);
  r.canonicalize();
  return r;
}

inline double rat_d(const Rat& r) { return r.get_d(); }

inline int sgn(const Rat& r) { return ::sgn(r); }

// exact 2-vector
struct Vec2q {
  Rat x, y;

  Vec2q() = default;
  Vec2q(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {}

  Vec2q operator+(const Vec2q& o) const { return {x + o.x, y + o.y}; }
  Vec2q operator-(const Vec2q& o) const { return {x - o.x, y - o.y}; }
  Vec2q operator*(const Rat& s) const { return {x * s, y * s}; }
  Vec2q operator-() const { return {-x, -y}; }
  bool operator==(const Vec2q& o) const { return x == o.x && y == o.y; }
};

// signed area of the parallelogram spanned by a and b
inline Rat wedge(const Vec2q& a, const Vec2q& b) { return a.x * b.y - a.y * b.x; }

// exact 2x2 matrix, column action on vectors
struct Mat2q {
  Rat a, b, c, d;  // [[a,b],[c,d]]

  static Mat2q identity() { return {1, 0, 0, 1}; }

  Mat2q operator*(const Mat2q& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Vec2q operator*(const Vec2q& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  Mat2q operator-() const { return {-a, -b, -c, -d}; }
  bool operator==(const Mat2q& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }

  Rat trace() const { return a + d; }
  Rat det() const { return a * d - b * c; }

  // valid whenever det is +1 or -1, which holds for all group elements here
  Mat2q inverse() const {
    Rat dt = det();
    if (dt == 1) return {d, -b, -c, a};
    if (dt == -1) return {-d, b, c, -a};
    throw std::domain_error("Mat2q::inverse: determinant not unimodular");
  }
};

}  // namespace latsurf
