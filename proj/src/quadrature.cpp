#include "latsurf/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace latsurf {

namespace {

struct Rule {
  std::vector<double> nodes, weights;
};

// Golub-Welsch is overkill for fixed n; Newton iteration on P_n from the
// Chebyshev initial guess converges in a handful of steps.
Rule compute_rule(int n) {
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    r.nodes[n - 1 - i] = x;
    r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  return r;
}

const Rule& rule(int n) {
  static std::map<int, Rule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

// one pass at a fixed panel count; per-panel partial sums reduced in order
std::vector<double> pass(const std::function<void(double, std::vector<double>&)>& f, size_t dim,
                         double a, double b, int panels, int nodes, Exec exec) {
  const Rule& r = rule(nodes);
  std::vector<std::vector<double>> partial(panels, std::vector<double>(dim, 0.0));
  double width = (b - a) / panels;
  parallel_for(exec, 0, panels, [&](std::int64_t p) {
    std::vector<double> fx(dim);
    double lo = a + p * width;
    double mid = lo + 0.5 * width, half = 0.5 * width;
    auto& acc = partial[p];
    for (int i = 0; i < nodes; ++i) {
      f(mid + half * r.nodes[i], fx);
      for (size_t k = 0; k < dim; ++k) acc[k] += r.weights[i] * fx[k];
    }
    for (size_t k = 0; k < dim; ++k) acc[k] *= half;
  });
  std::vector<double> total(dim, 0.0);
  for (int p = 0; p < panels; ++p)
    for (size_t k = 0; k < dim; ++k) total[k] += partial[p][k];
  return total;
}

}  // namespace

const std::vector<double>& gauss_legendre_nodes(int n) { return rule(n).nodes; }
const std::vector<double>& gauss_legendre_weights(int n) { return rule(n).weights; }

std::vector<double> integrate_vec(const std::function<void(double, std::vector<double>&)>& f,
                                  size_t dim, double a, double b, const QuadratureConfig& cfg,
                                  Exec exec) {
  // Two consecutive agreements are required before the refinement stops: a
  // single coincidental agreement happens when every node of two coarse
  // grids misses a narrow feature.
  std::vector<double> prev = pass(f, dim, a, b, 1, cfg.nodes_per_panel, exec);
  bool agreed_once = false;
  for (int panels = 2; panels <= cfg.max_panels; panels *= 2) {
    std::vector<double> cur = pass(f, dim, a, b, panels, cfg.nodes_per_panel, exec);
    double diff = 0;
    for (size_t k = 0; k < dim; ++k) diff = std::max(diff, std::abs(cur[k] - prev[k]));
    if (diff <= cfg.tolerance) {
      if (agreed_once) return cur;
      agreed_once = true;
    } else {
      agreed_once = false;
    }
    prev = std::move(cur);
  }
  throw QuadratureNotConverged("no agreement to " + std::to_string(cfg.tolerance) + " within " +
                               std::to_string(cfg.max_panels) + " panels");
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg, Exec exec) {
  auto wrapped = [&f](double x, std::vector<double>& out) { out[0] = f(x); };
  return integrate_vec(wrapped, 1, a, b, cfg, exec)[0];
}

}  // namespace latsurf
