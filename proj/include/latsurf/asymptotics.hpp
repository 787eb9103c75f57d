#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "latsurf/bigfloat.hpp"
#include "latsurf/homology.hpp"
#include "latsurf/quadrature.hpp"
#include "latsurf/rational.hpp"
#include "latsurf/surface.hpp"
#include "latsurf/veech.hpp"
#include "latsurf/words.hpp"

namespace latsurf::asymptotics {

struct DegenerateWedge : std::runtime_error {
  explicit DegenerateWedge(const std::string& m)
      : std::runtime_error("asymptotics.DegenerateWedge: " + m) {}
};
struct HypothesisViolation : std::invalid_argument {
  explicit HypothesisViolation(const std::string& m)
      : std::invalid_argument("asymptotics.HypothesisViolation: " + m) {}
};

// One scalar tracked along m: an exact value per m plus its m^{3/2}-scaled
// float, the 1/m-model extrapolation from the two largest m, and the
// theoretical target.
struct AsymptoticRun {
  GroupWord word;
  std::string subject;
  std::vector<long> m_list;
  std::vector<Rat> exact_values;
  std::vector<double> scaled_values;
  std::optional<double> extrapolated_limit;  // absent for a single m
  double target = 0.0;
};

struct CoordRef {
  bool beta = false;
  long n = 1;
};

// Exact evolution of a finitely supported class under repeated application of
// a word's homology action. The per-step stencil update runs through the
// shared generator kernel (serial or OpenMP); steps themselves are sequential.
class Evolution {
 public:
  Evolution(GroupWord word, const homology::HomologyClass& start, long max_steps,
            Exec exec = Exec::Par);

  void advance_to(long m);  // apply the word action until step() == m
  long step() const { return step_; }

  Rat alpha(long n) const;
  Rat beta(long n) const;
  homology::HomologyClass snapshot() const;
  Rat intersect_with(const homology::HomologyClass& y) const;

 private:
  GroupWord rewritten_;
  long step_ = 0;
  long capacity_;
  long support_hi_;  // coordinates beyond this are exact zeros
  Exec exec_;
  std::vector<Rat> alpha_, beta_;  // slot i = coordinate i + 1
};

// Coordinatewise convergence m^{3/2} lambda^-m G*^m(x) -> kappa L_1(proj of
// hol_1(x)); the run tracks one chosen coordinate.
AsymptoticRun homology_asymptotics(const GroupWord& w, const homology::HomologyClass& x,
                                   const std::vector<long>& m_list, long n_bound, CoordRef coord,
                                   mpfr_prec_t bits = 256, Exec exec = Exec::Par);

// Area(G^m A intersect B) through the intersection-number formula, all three
// factors exact; scaled value is m^{3/2} * Area, target kappa Area(A) Area(B).
AsymptoticRun intersection_asymptotics(const GroupWord& w, const surface::Cylinder& a,
                                       const surface::Cylinder& b, const std::vector<long>& m_list,
                                       mpfr_prec_t bits = 256, Exec exec = Exec::Par);

struct NonrecurrenceSum {
  long m_max;
  double partial_sum;        // sum of exact areas, rounded once at the end
  double comparison_bound;   // kappa Area^2 zeta(3/2) * 1.1
  bool increments_monotone_decreasing_eventually;
  long last_increment_violation;  // largest m with area > 1.1 kappa Area^2 m^-3/2, 0 if none
};

NonrecurrenceSum nonrecurrence_sum(const GroupWord& w, const surface::Cylinder& a, long m_max,
                                   mpfr_prec_t bits = 256, Exec exec = Exec::Par);

// sum_{m<=M} m^-3/2 with compensated summation
double zeta32_partial(long m_max);
// zeta(3/2), the full series limit
inline constexpr double kZeta32 = 2.612375348685488;

// --- Catalan prototype for the m^-3/2 growth lemma ----------------------

Int catalan(long n);               // c_0 = 1, c_{n+1} = (4 - 6/(n+2)) c_n
Int catalan_closed_form(long n);   // (2n choose n) / (n+1)
double catalan_integral(long n, const QuadratureConfig& cfg, Exec exec = Exec::Serial);
double catalan_ratio(long n);      // c_n sqrt(pi) n^{3/2} / 4^n via log-gamma

struct GrowthLemmaResult {
  std::vector<long> n_list;
  std::vector<double> r_n, s_n, ratio;
};

// r_n = Int_{-eps}^{eps} f g^n against s_n = sqrt(pi) / (2 a^{3/2} n^{3/2});
// the three lemma hypotheses are spot-checked numerically first.
GrowthLemmaResult growth_lemma_check(double a, double eps, const std::function<double(double)>& f,
                                     const std::function<double(double)>& g,
                                     const std::vector<long>& n_list, const QuadratureConfig& cfg,
                                     Exec exec = Exec::Par);

}  // namespace latsurf::asymptotics
