#pragma once

#include <array>
#include <stdexcept>

#include "latsurf/quadrature.hpp"
#include "latsurf/rational.hpp"
#include "latsurf/words.hpp"

namespace latsurf::hyperbolic {

struct PointOnBoundary : std::domain_error {
  PointOnBoundary() : std::domain_error("hyperbolic.PointOnBoundary: |P| >= 1") {}
};
struct ImageOutsideDisk : std::domain_error {
  ImageOutsideDisk() : std::domain_error("hyperbolic.ImageOutsideDisk") {}
};

struct KleinPoint {
  double x, y;
};

inline double norm2(const KleinPoint& p) { return p.x * p.x + p.y * p.y; }

// Distance from the chord cross-ratio. With boundary points Q1 (on the X
// side) and Q2 (on the Y side) this is
//   1/2 log( |X Q2| |Y Q1| / (|X Q1| |Y Q2|) ),
// the normalization fixed against the metric-tensor integral on a diameter.
double klein_distance_cr(const KleinPoint& x, const KleinPoint& y);

// Integral of the metric tensor along the Euclidean segment (the geodesic).
double klein_distance_integral(const KleinPoint& x, const KleinPoint& y,
                               const QuadratureConfig& cfg, Exec exec = Exec::Serial);

// Compression map M_c : (x, y) -> (x, y sqrt(1+c)/sqrt(2)); a contraction of
// the Klein metric off the line y = 0 for c < 1.
KleinPoint map_Mc(double c, const KleinPoint& p);

// 2 log lambda_c when the word is hyperbolic at c, otherwise 0.
double translation_length(const GroupWord& w, const Rat& c);

// Closed-form directional derivatives at c = 1 of the length-ratio of M_c on
// horizontal and vertical tangent vectors at (x, y):
//   horizontal: y^2 (1 + x^2 - y^2) / (4 (1 - y^2)(1 - x^2 - y^2))
//   vertical:   (1 - x^2 + y^2) / (4 (1 - x^2 - y^2))
struct ContractionDerivatives {
  double horizontal, vertical;
};

ContractionDerivatives contraction_derivative_check(double x, double y);

// Worst |cross-ratio - integral| over seeded random interior pairs; pairs are
// derived from their index, so the scan parallelizes without changing the
// sample or the result.
double distance_agreement_scan(int pairs, std::uint64_t seed, const QuadratureConfig& cfg,
                               Exec exec = Exec::Par);

// Fundamental triangle of the reflection group in the Klein disk, with
// vertices (-1, 0), (1, 0) and (0, sqrt((1+c)/2)); the apex reaches the
// boundary exactly at c = 1.
struct TriangleDelta {
  double c;
  std::array<KleinPoint, 3> vertices;
};

TriangleDelta triangle_delta(double c);

}  // namespace latsurf::hyperbolic
