#include "latsurf/hyperbolic.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "latsurf/veech.hpp"

namespace latsurf::hyperbolic {

double klein_distance_cr(const KleinPoint& x, const KleinPoint& y) {
  if (norm2(x) >= 1.0 || norm2(y) >= 1.0) throw PointOnBoundary();
  double dx = y.x - x.x, dy = y.y - x.y;
  double d2 = dx * dx + dy * dy;
  if (d2 == 0.0) return 0.0;
  // chord parametrized as X + t (Y - X); boundary at the roots of
  // |X + t D|^2 = 1, t1 < 0 <= t2
  double b = x.x * dx + x.y * dy;
  double c0 = norm2(x) - 1.0;
  double disc = std::sqrt(b * b - d2 * c0);
  double t1 = (-b - disc) / d2;
  double t2 = (-b + disc) / d2;
  // |XQ1| = -t1 |D|, |XQ2| = t2 |D|, |YQ1| = (1 - t1)|D|, |YQ2| = (t2 - 1)|D|
  return 0.5 * std::log((t2 * (1.0 - t1)) / ((-t1) * (t2 - 1.0)));
}

double klein_distance_integral(const KleinPoint& x, const KleinPoint& y,
                               const QuadratureConfig& cfg, Exec exec) {
  if (norm2(x) >= 1.0 || norm2(y) >= 1.0) throw PointOnBoundary();
  double dx = y.x - x.x, dy = y.y - x.y;
  if (dx == 0.0 && dy == 0.0) return 0.0;
  auto ds = [&](double t) {
    double px = x.x + t * dx, py = x.y + t * dy;
    double r2 = 1.0 - px * px - py * py;
    double dot = px * dx + py * dy;
    return std::sqrt((dx * dx + dy * dy) / r2 + dot * dot / (r2 * r2));
  };
  return integrate(ds, 0.0, 1.0, cfg, exec);
}

KleinPoint map_Mc(double c, const KleinPoint& p) {
  KleinPoint q{p.x, p.y * std::sqrt((1.0 + c) / 2.0)};
  if (norm2(q) >= 1.0) throw ImageOutsideDisk();
  return q;
}

double translation_length(const GroupWord& w, const Rat& c) {
  auto e = veech::eigen(w, c);
  if (e.classification != veech::Classification::Hyperbolic) return 0.0;
  return 2.0 * std::log(e.lambda);
}

ContractionDerivatives contraction_derivative_check(double x, double y) {
  double r2 = 1.0 - x * x - y * y;
  if (r2 <= 0.0) throw PointOnBoundary();
  double horiz = y * y * (1.0 + x * x - y * y) / (4.0 * (1.0 - y * y) * r2);
  double vert = (1.0 - x * x + y * y) / (4.0 * r2);
  return {horiz, vert};
}

double distance_agreement_scan(int pairs, std::uint64_t seed, const QuadratureConfig& cfg,
                               Exec exec) {
  std::vector<double> gap(pairs, 0.0);
  parallel_for(exec, 0, pairs, [&](std::int64_t i) {
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(i + 1)));
    std::uniform_real_distribution<double> radius(0.0, 0.9), angle(0.0, 2.0 * M_PI);
    auto sample = [&] {
      double r = radius(rng), t = angle(rng);
      return KleinPoint{r * std::cos(t), r * std::sin(t)};
    };
    KleinPoint x = sample(), y = sample();
    gap[i] = std::abs(klein_distance_cr(x, y) - klein_distance_integral(x, y, cfg, Exec::Serial));
  });
  double worst = 0;
  for (double g : gap) worst = std::max(worst, g);
  return worst;
}

TriangleDelta triangle_delta(double c) {
  if (c > 1.0) throw ImageOutsideDisk();
  return {c, {KleinPoint{-1.0, 0.0}, KleinPoint{1.0, 0.0},
              KleinPoint{0.0, std::sqrt((1.0 + c) / 2.0)}}};
}

}  // namespace latsurf::hyperbolic
