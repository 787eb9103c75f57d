#include "latsurf/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "latsurf/asymptotics.hpp"
#include "latsurf/farey.hpp"
#include "latsurf/homology.hpp"
#include "latsurf/hyperbolic.hpp"
#include "latsurf/surface.hpp"
#include "latsurf/veech.hpp"

namespace latsurf::verify {

namespace {

using homology::HomologyClass;
using surface::Family;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "FAILED: " << what << "; ";
    }
  }
  void note(const std::string& s) { detail << s << "; "; }
};

HomologyClass random_integral_class(std::mt19937_64& rng, long max_index = 10, int terms = 4) {
  std::uniform_int_distribution<long> idx(1, max_index);
  std::uniform_int_distribution<long> val(-5, 5);
  HomologyClass::Coords a, b;
  for (int i = 0; i < terms; ++i) {
    a[idx(rng)] += Rat(val(rng));
    b[idx(rng)] += Rat(val(rng));
  }
  return HomologyClass(std::move(a), std::move(b));
}

GroupWord random_word(std::mt19937_64& rng, int max_len = 8) {
  static const Gen gens[] = {Gen::A, Gen::B, Gen::C, Gen::D, Gen::E, Gen::NegI};
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> pick(0, 5);
  std::uniform_int_distribution<int> flip(0, 1);
  std::vector<Letter> ls;
  int L = len(rng);
  for (int i = 0; i < L; ++i) {
    Gen g = gens[pick(rng)];
    int e = (!is_involution(g) && flip(rng)) ? -1 : 1;
    ls.push_back({g, e});
  }
  GroupWord w{std::move(ls)};
  return w.empty() ? GroupWord::parse("D") : w;
}

Rat random_rat(std::mt19937_64& rng, long lo = -6, long hi = 6) {
  std::uniform_int_distribution<long> num(lo, hi);
  std::uniform_int_distribution<long> den(1, 4);
  return rat_of(num(rng), den(rng));
}

Exec exec_of(const RunConfig& cfg) { return cfg.serial ? Exec::Serial : Exec::Par; }

// --- criterion bodies ----------------------------------------------------

void crit_moduli(Check& c, const RunConfig&) {
  const Rat cs[] = {Rat(1), rat_of(5, 4), Rat(2), Rat(10)};
  for (const Rat& cc : cs) {
    Rat slope_one_modulus = Rat(1) / (2 * cc + 2);
    for (long n = 1; n <= 50; ++n) {
      auto h = surface::cylinder(cc, Family::Horizontal, n);
      auto s = surface::cylinder(cc, Family::SlopeOne, n);
      c.require(h.modulus == rat_of(1, 2), "horizontal modulus at c=" + rat_str(cc) +
                                               " n=" + std::to_string(n));
      c.require(s.modulus == slope_one_modulus,
                "slope-one modulus at c=" + rat_str(cc) + " n=" + std::to_string(n));
      c.require(h.area > 0 && s.area > 0, "positive areas");
    }
  }
  c.note("moduli 1/2 and 1/(2c+2) exact for c in {1,5/4,2,10}, n <= 50");
}

void crit_holonomy_table(Check& c, const RunConfig&) {
  for (long n = 1; n <= 50; ++n) {
    Vec2q h = homology::hol(Rat(1), HomologyClass::horizontal(n));
    Vec2q s = homology::hol(Rat(1), HomologyClass::slope_one(n));
    c.require(h == Vec2q(Rat(4 * n - 2), Rat(0)), "hol_1 horizontal n=" + std::to_string(n));
    c.require(s == Vec2q(Rat(4 * n), Rat(4 * n)), "hol_1 slope-one n=" + std::to_string(n));
  }
  c.note("hol_1 = (4n-2,0) and (4n,4n) exact for n <= 50");
}

void crit_intersection_form(Check& c, const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed * 1000 + 3);
  for (int t = 0; t < 100; ++t) {
    HomologyClass x = random_integral_class(rng);
    HomologyClass y = random_integral_class(rng);
    GroupWord w = random_word(rng);

    Rat xy = homology::intersect(x, y);
    c.require(homology::intersect(x, x) == 0, "x . x = 0");
    c.require(homology::intersect(y, x) == -xy, "antisymmetry");

    // invariance twisted by the determinant: orientation-reversing words
    // negate the form just as they negate the wedge product
    HomologyClass wx = homology::act_word(w, x);
    HomologyClass wy = homology::act_word(w, y);
    c.require(homology::intersect(wx, wy) == Rat(w.det_sign()) * xy,
              "G*-invariance for word " + w.str());

    auto z = homology::TruncatedExtendedClass::kernel_element_z(y.max_support() + 2);
    c.require(homology::intersect(z, y) == 0, "z-kernel annihilation");
  }
  c.note("antisymmetry, invariance, z-kernel on 100 randomized classes, |word| <= 8");
}

void crit_commutative_diagram(Check& c, const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed * 1000 + 4);
  const Rat cs[] = {Rat(1), rat_of(5, 4), Rat(2)};
  std::uniform_int_distribution<int> pick_c(0, 2);
  const long N = 40;
  for (int t = 0; t < 50; ++t) {
    GroupWord w = random_word(rng);
    Rat cc = cs[pick_c(rng)];
    Rat a = random_rat(rng), b = random_rat(rng);

    auto lhs = homology::invariant_plane_class(cc, a, b, N + w.homology_reach());
    homology::act_word_in_place(w, lhs, exec_of(cfg));

    Mat2q g = veech::eval_word(w, cc);
    Vec2q gv = g * Vec2q(a, b);
    auto rhs = homology::invariant_plane_class(cc, gv.x, gv.y, N);

    bool same = lhs.valid_n() >= N;
    for (long n = 1; n <= N && same; ++n)
      same = lhs.alpha(n) == rhs.alpha(n) && lhs.beta(n) == rhs.beta(n);
    c.require(same, "diagram for word " + w.str() + " at c=" + rat_str(cc));
  }
  c.note("act(W) L_c(a,b) = L_c(W_c (a,b)) exactly, coords 1..40, 50 tuples");
}

void crit_reconstruction(Check& c, const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed * 1000 + 5);
  QuadratureConfig qc;
  qc.tolerance = cfg.quad_tolerance;
  for (int t = 0; t < 10; ++t) {
    HomologyClass x = random_integral_class(rng, 8, 3);
    double err = homology::reconstruct_error(x, 8, qc, exec_of(cfg));
    c.require(err < 1e-8, "reconstruction error " + std::to_string(err));
  }
  c.note("integral reconstruction error < 1e-8 on 10 random classes, indices <= 8");
}

void crit_catalan(Check& c, const RunConfig& cfg) {
  for (long n = 0; n <= 30; ++n)
    c.require(asymptotics::catalan(n) == asymptotics::catalan_closed_form(n),
              "recurrence vs closed form at n=" + std::to_string(n));
  QuadratureConfig qc;
  qc.tolerance = 1e-12;
  for (long n = 0; n <= 25; ++n) {
    double integral = asymptotics::catalan_integral(n, qc, exec_of(cfg));
    double exact = asymptotics::catalan(n).get_d();
    c.require(std::abs(integral / exact - 1.0) < 1e-9,
              "integral formula at n=" + std::to_string(n));
  }
  double ratio = asymptotics::catalan_ratio(10000);
  c.require(ratio > 0.99 && ratio < 1.01, "asymptotic ratio at n=1e4");
  c.note("ratio(1e4) = " + std::to_string(ratio));
}

void crit_growth_lemma(Check& c, const RunConfig& cfg) {
  QuadratureConfig qc;
  qc.tolerance = 1e-12;
  auto f1 = [](double t) { return (2.0 - 2.0 * std::cos(2.0 * t)) / 4.0; };
  auto g1 = [](double t) { return (1.0 + std::cos(2.0 * t)) / 2.0; };
  auto res = asymptotics::growth_lemma_check(1.0, 1.0, f1, g1, {2000}, qc, exec_of(cfg));
  double dev = std::abs(res.ratio[0] - 1.0);
  c.require(dev < 0.02, "r_n/s_n at n=2000 deviates " + std::to_string(dev));
  c.note("|r_2000/s_2000 - 1| = " + std::to_string(dev));
}

void headline_run(Check& c, const RunConfig& cfg, Family fam_b, long n_b, double area_factor) {
  GroupWord w = GroupWord::parse("DE'");
  auto a = surface::cylinder(Rat(1), Family::Horizontal, 1);
  auto b = surface::cylinder(Rat(1), fam_b, n_b);
  auto run = asymptotics::intersection_asymptotics(w, a, b, cfg.m_list, cfg.precision_bits,
                                                   exec_of(cfg));
  auto kd = veech::kappa(w, cfg.precision_bits);
  double target = kd.kappa.d() * area_factor;

  c.require(std::abs(run.target - target) < 1e-12, "target = kappa * areas");
  for (size_t i = 1; i < run.scaled_values.size(); ++i)
    c.require(std::abs(run.scaled_values[i] - target) < std::abs(run.scaled_values[i - 1] - target),
              "scaled values strictly approach the target");
  c.require(run.extrapolated_limit.has_value(), "extrapolation present");
  double rel = std::abs(*run.extrapolated_limit / target - 1.0);
  c.require(rel < 0.01, "extrapolated limit off by " + std::to_string(rel));
  std::ostringstream os;
  os << "limit " << *run.extrapolated_limit << " vs target " << target << " (rel " << rel << ")";
  c.note(os.str());
}

void crit_headline_a(Check& c, const RunConfig& cfg) {
  headline_run(c, cfg, Family::Horizontal, 1, 4.0);
}

void crit_headline_b(Check& c, const RunConfig& cfg) {
  headline_run(c, cfg, Family::SlopeOne, 1, 16.0);
}

void crit_nonrecurrence(Check& c, const RunConfig& cfg) {
  double partial = asymptotics::zeta32_partial(1000000);
  // 2.61238 is zeta(3/2) rounded to six digits. The series tail at M = 1e6
  // is 1.9999995e-3: inside the 2e-3 tolerance against the constant itself,
  // 4.7e-6 outside it against the rounded print. The gate uses the constant;
  // both gaps are reported.
  double gap = std::abs(partial - asymptotics::kZeta32);
  c.require(gap <= 2e-3, "partial zeta sum gap " + std::to_string(gap));
  std::ostringstream os;
  os << "sum_{m<=1e6} m^-3/2 = " << partial << ", |gap to zeta(3/2)| = " << gap
     << ", |gap to printed 2.61238| = " << std::abs(partial - 2.61238);
  c.note(os.str());

  GroupWord w = GroupWord::parse("DE'");
  auto a = surface::cylinder(Rat(1), Family::Horizontal, 1);
  auto sum = asymptotics::nonrecurrence_sum(w, a, 200, cfg.precision_bits, exec_of(cfg));
  auto kd = veech::kappa(w, cfg.precision_bits);
  double bound = kd.kappa.d() * 4.0 * 2.62 * 1.1;
  c.require(sum.partial_sum <= bound, "area partial sum exceeds bound");
  c.require(sum.last_increment_violation == 0,
            "increment above 1.1 kappa Area^2 m^-3/2 at m = " +
                std::to_string(sum.last_increment_violation));
  std::ostringstream os2;
  os2 << "sum_{m<=200} Area = " << sum.partial_sum << " <= " << bound;
  c.note(os2.str());
}

void crit_eigenvalue_lemmas(Check& c, const RunConfig& cfg) {
  const char* words[] = {"DE'", "DE'DE'", "DE'D"};
  for (const char* ws : words) {
    GroupWord w = GroupWord::parse(ws);
    auto e = veech::eigen(w, Rat(1), cfg.precision_bits);
    c.require(e.classification == veech::Classification::Hyperbolic,
              std::string(ws) + " hyperbolic at c=1");
    double grid_max = veech::max_modulus_on_grid(w, 200, exec_of(cfg));
    c.require(grid_max < e.lambda, std::string(ws) + " eigenvalue bound on [-1,1) grid");

    double sym = veech::eigenvalue_derivative_at_one(w);
    c.require(sym > 0, std::string(ws) + " derivative positive");
    const double h = 1e-6;
    auto lam_at = [&w](const Rat& cc) {
      auto ed = veech::eigen(w, cc);
      return ed.lambda;
    };
    double fd = (lam_at(Rat(1) + rat_of(1, 1000000)) - lam_at(Rat(1) - rat_of(1, 1000000))) /
                (2.0 * h);
    c.require(std::abs(fd / sym - 1.0) < 1e-6,
              std::string(ws) + " symbolic vs finite-difference derivative");
  }
  c.note("modulus < lambda_1 on 200 grid points and d lambda/dc|_1 > 0 for DE', (DE')^2, DE'D");
}

void crit_gsequence(Check& c, const RunConfig& cfg) {
  auto theta = farey::Theta::sqrt_of(2, cfg.precision_bits);
  auto seq = farey::gsequence(theta, 7);
  const std::pair<long, long> expected[] = {{1, 1},   {4, 3},   {7, 5},  {24, 17},
                                            {41, 29}, {140, 99}, {239, 169}};
  c.require(seq.entries.size() == 7, "depth 7 sequence length");
  for (size_t i = 0; i < seq.entries.size(); ++i) {
    const auto& f = seq.entries[i].fraction;
    c.require(f.p == expected[i].first && f.q == expected[i].second,
              "entry " + std::to_string(i + 1) + " = " + f.str());
  }
  for (size_t i = 0; i + 1 < seq.entries.size(); ++i) {
    c.require(farey::farey_adjacent(seq.entries[i].fraction, seq.entries[i + 1].fraction),
              "Farey adjacency at " + std::to_string(i + 1));
    c.require(farey::parity_class(seq.entries[i].fraction) != farey::Parity::P10,
              "parity admissibility");
  }
  for (size_t i = 2; i < seq.entries.size(); ++i) {
    c.require(seq.entries[i].k.has_value(), "coding integer present");
    long k = *seq.entries[i].k;
    const auto& pm = seq.entries[i - 2].fraction;
    const auto& pc = seq.entries[i - 1].fraction;
    auto expect = farey::ReducedFraction::of(pm.p + 2 * k * pc.p, pm.q + 2 * k * pc.q);
    c.require(expect == seq.entries[i].fraction, "inductive recurrence at entry " +
                                                      std::to_string(i + 1));
  }

  auto wit = farey::recurrence_witness(theta, cfg.depth);
  c.require(wit.running_min.back() < 0.01,
            "witness running min " + std::to_string(wit.running_min.back()));

  auto overlap = farey::cf_overlap(theta, 7);
  c.require(overlap.admissible > 0 && overlap.found == overlap.admissible,
            "admissible CF convergents all appear (" + std::to_string(overlap.found) + "/" +
                std::to_string(overlap.admissible) + ")");
  std::ostringstream os;
  os << "sqrt2 table exact; witness min " << wit.running_min.back() << " by depth " << cfg.depth
     << "; CF overlap " << overlap.found << "/" << overlap.admissible;
  c.note(os.str());
}

void crit_klein(Check& c, const RunConfig& cfg) {
  QuadratureConfig qc;
  qc.tolerance = 1e-11;
  double worst = hyperbolic::distance_agreement_scan(100, cfg.seed * 1000 + 13, qc, exec_of(cfg));
  c.require(worst <= 1e-8, "cross-ratio vs integral distance, worst " + std::to_string(worst));

  std::mt19937_64 rng(cfg.seed * 1000 + 13);
  std::uniform_real_distribution<double> radius(0.0, 0.9);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  auto sample = [&]() {
    double r = radius(rng), t = angle(rng);
    return hyperbolic::KleinPoint{r * std::cos(t), r * std::sin(t)};
  };
  int contracted = 0;
  for (int t = 0; t < 100; ++t) {
    auto x = sample(), y = sample();
    if (std::abs(x.y) < 1e-3 && std::abs(y.y) < 1e-3) {
      --t;  // resample segments on the fixed line y = 0
      continue;
    }
    double before = hyperbolic::klein_distance_cr(x, y);
    double after =
        hyperbolic::klein_distance_cr(hyperbolic::map_Mc(0.0, x), hyperbolic::map_Mc(0.0, y));
    if (after < before) ++contracted;
  }
  c.require(contracted == 100, "M_0 contracted " + std::to_string(contracted) + "/100 segments");
  std::ostringstream os;
  os << "cr vs integral worst gap " << worst << "; M_0 contracted 100/100";
  c.note(os.str());
}

struct Criterion {
  const char* name;
  void (*body)(Check&, const RunConfig&);
  double runtime_limit;  // seconds, 0 = none
};

const Criterion kCriteria[] = {
    {"cylinder moduli exact", crit_moduli, 1.0},
    {"holonomy table exact", crit_holonomy_table, 0.0},
    {"intersection form properties", crit_intersection_form, 0.0},
    {"commutative diagram", crit_commutative_diagram, 0.0},
    {"integral reconstruction", crit_reconstruction, 10.0},
    {"catalan recurrence/integral/asymptotics", crit_catalan, 0.0},
    {"growth lemma example", crit_growth_lemma, 0.0},
    {"cylinder intersection asymptotics A=B=horizontal:1", crit_headline_a, 30.0},
    {"cylinder intersection asymptotics B=slope_one:1", crit_headline_b, 30.0},
    {"non-recurrence partial sums", crit_nonrecurrence, 0.0},
    {"eigenvalue bound and derivative lemmas", crit_eigenvalue_lemmas, 0.0},
    {"G-sequence for sqrt 2", crit_gsequence, 0.0},
    {"Klein distances and contraction", crit_klein, 0.0},
};

}  // namespace

CriterionResult run_criterion(int id, const RunConfig& cfg) {
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("criterion id out of range");
  const Criterion& cr = kCriteria[id - 1];
  Check check;
  auto start = std::chrono::steady_clock::now();
  try {
    cr.body(check, cfg);
  } catch (const std::exception& e) {
    check.ok = false;
    check.detail << "exception: " << e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (cr.runtime_limit > 0 && secs >= cr.runtime_limit) {
    check.ok = false;
    check.detail << "runtime " << secs << "s exceeds " << cr.runtime_limit << "s; ";
  }
  return {id, cr.name, check.ok, check.detail.str(), secs};
}

std::vector<CriterionResult> run_all(const RunConfig& cfg) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, cfg));
  return out;
}

}  // namespace latsurf::verify
