#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "latsurf/parallel.hpp"

namespace latsurf {

struct QuadratureNotConverged : std::runtime_error {
  explicit QuadratureNotConverged(const std::string& m)
      : std::runtime_error("quadrature.QuadratureNotConverged: " + m) {}
};

struct QuadratureConfig {
  int nodes_per_panel = 32;
  double tolerance = 1e-10;   // absolute agreement between refinements
  int max_panels = 1 << 14;
};

// Composite Gauss-Legendre with panel doubling until two successive
// refinements agree to cfg.tolerance. Panels are evaluated independently
// (in parallel under Exec::Par) and reduced in index order, so serial and
// parallel runs produce bit-identical results.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& cfg, Exec exec = Exec::Serial);

// Vector-valued integrand evaluated coordinatewise; convergence is measured
// in the max norm.
std::vector<double> integrate_vec(const std::function<void(double, std::vector<double>&)>& f,
                                  size_t dim, double a, double b, const QuadratureConfig& cfg,
                                  Exec exec = Exec::Serial);

// Nodes and weights on [-1, 1].
const std::vector<double>& gauss_legendre_nodes(int n);
const std::vector<double>& gauss_legendre_weights(int n);

}  // namespace latsurf
