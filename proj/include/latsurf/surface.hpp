#pragma once

#include <stdexcept>
#include <string>

#include "latsurf/rational.hpp"

namespace latsurf::surface {

struct ParallelCylinders : std::domain_error {
  ParallelCylinders() : std::domain_error("surface.ParallelCylinders: core holonomies are parallel") {}
};
struct ZeroVector : std::invalid_argument {
  ZeroVector() : std::invalid_argument("surface.ZeroVector: direction (0,0)") {}
};

// Vertex P_k of the upper polygon: P_0 = (0,0), P_{k+1} = T_c(P_k) with
// T_c : (x, y) -> (c x + (c-1) y + 1, (c+1) x + c y + 1); negative k through
// the inverse map. At c = 1 this is P_k = (k, k^2).
struct Vertex {
  long k;
  Vec2q point;
};

Vertex vertex(const Rat& c, long k);

// Length values of the slope-one decomposition carry a sqrt(2) factor which
// cancels in every modulus and area; it is kept symbolically.
struct Length {
  Rat value;
  bool times_sqrt2 = false;

  double d() const { return times_sqrt2 ? value.get_d() * 1.4142135623730951 : value.get_d(); }
  std::string str() const { return times_sqrt2 ? rat_str(value) + "*sqrt2" : rat_str(value); }
};

enum class Family { Horizontal, SlopeOne };

struct Cylinder {
  Family family;
  long n;
  Rat c;
  Length circumference;
  Length height;
  Rat modulus;        // height / circumference, exact
  Rat area;           // circumference * height, exact (sqrt2 factors cancel)
  Vec2q core_holonomy;  // oriented core curve, direction (1,0) or (1,1)
};

// n-th cylinder (n >= 1) of the horizontal or slope-one decomposition of S_c,
// which exists for c >= 1.
Cylinder cylinder(const Rat& c, Family family, long n);

// Area formula for two non-parallel cylinders from the algebraic intersection
// number of their core curves:
//   |int#| * Area(A) * Area(B) / |hol(A) ^ hol(B)|.
Rat intersection_area(const Rat& area_a, const Vec2q& hol_a, const Rat& area_b,
                      const Vec2q& hol_b, const Int& intersection_number);

enum class Verdict { Periodic, Strip, Recurrent };

struct DirectionClass {
  bool rational = true;
  Int p, q;  // reduced slope p/q when rational
  Verdict verdict;
};

// Trichotomy for the direction of slope p/q on S_1, decided by parities of the
// reduced fraction: 0/1 and 1/1 classes are completely periodic, the 1/0 class
// decomposes into infinite strips.
DirectionClass classify_direction(const Int& p, const Int& q);

inline DirectionClass irrational_direction() {
  return {false, 0, 0, Verdict::Recurrent};
}

std::string csv_header();
std::string csv_row(const Cylinder& cyl);

}  // namespace latsurf::surface
