// Benchmark comparing the serial reference kernels against their OpenMP
// counterparts: exact homology evolution, vector quadrature, eigenvalue grid
// scan. Results must be identical between the two paths; only time differs.

#include <cmath>
#include <cstdio>
#include <string>

#include "latsurf/asymptotics.hpp"
#include "latsurf/homology.hpp"
#include "latsurf/hyperbolic.hpp"
#include "latsurf/parallel.hpp"
#include "latsurf/quadrature.hpp"
#include "latsurf/surface.hpp"
#include "latsurf/veech.hpp"

using namespace latsurf;

namespace {

template <class F>
double time_best_of(int reps, F&& body) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    double t0 = wall_time();
    body();
    best = std::min(best, wall_time() - t0);
  }
  return best;
}

void report(const std::string& name, double serial, double par, bool same) {
  std::printf("%-34s %10.4fs %10.4fs %7.2fx   results %s\n", name.c_str(), serial, par,
              serial / par, same ? "identical" : "DIFFER");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", max_threads());
  std::printf("%-34s %11s %11s %9s\n", "kernel", "serial", "openmp", "speedup");

  for (long steps : {400L, 1200L}) {
    GroupWord w = GroupWord::parse("DE'");
    auto start = homology::HomologyClass::horizontal(1);
    homology::HomologyClass out_serial, out_par;
    double ts = time_best_of(1, [&] {
      asymptotics::Evolution ev(w, start, steps, Exec::Serial);
      ev.advance_to(steps);
      out_serial = ev.snapshot();
    });
    double tp = time_best_of(1, [&] {
      asymptotics::Evolution ev(w, start, steps, Exec::Par);
      ev.advance_to(steps);
      out_par = ev.snapshot();
    });
    report("homology evolution m=" + std::to_string(steps), ts, tp, out_serial == out_par);
  }

  {
    QuadratureConfig qc;
    qc.tolerance = 1e-11;
    double es = 0, ep = 0;
    double ts = time_best_of(3,
                             [&] { es = hyperbolic::distance_agreement_scan(2000, 1, qc, Exec::Serial); });
    double tp = time_best_of(3,
                             [&] { ep = hyperbolic::distance_agreement_scan(2000, 1, qc, Exec::Par); });
    report("Klein distance scan 2000 pairs", ts, tp, es == ep);
  }

  {
    GroupWord w = GroupWord::parse("DE'D");
    double ms = 0, mp = 0;
    double ts = time_best_of(3, [&] { ms = veech::max_modulus_on_grid(w, 20000, Exec::Serial); });
    double tp = time_best_of(3, [&] { mp = veech::max_modulus_on_grid(w, 20000, Exec::Par); });
    report("eigenvalue grid scan 20000 pts", ts, tp, ms == mp);
  }

  return 0;
}
