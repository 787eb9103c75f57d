#include "latsurf/asymptotics.hpp"

#include <cmath>

namespace latsurf::asymptotics {

namespace {

double scaled_value(const Rat& exact, long m, const BigFloat* lambda_pow, mpfr_prec_t bits) {
  BigFloat v = BigFloat::of(exact, bits);
  if (lambda_pow) v = v / *lambda_pow;
  BigFloat mm = BigFloat::of(static_cast<long>(m), bits);
  return (v * mm * sqrt(mm)).d();
}

std::optional<double> extrapolate(const std::vector<long>& ms, const std::vector<double>& scaled) {
  if (ms.size() < 2) return std::nullopt;
  // model a0 + a1/m on the two largest m
  size_t k = ms.size();
  double m1 = static_cast<double>(ms[k - 2]), m2 = static_cast<double>(ms[k - 1]);
  double s1 = scaled[k - 2], s2 = scaled[k - 1];
  return (m2 * s2 - m1 * s1) / (m2 - m1);
}

void require_increasing(const std::vector<long>& m_list) {
  if (m_list.empty()) throw std::invalid_argument("asymptotics: empty m list");
  for (size_t i = 0; i < m_list.size(); ++i) {
    if (m_list[i] < 1 || (i > 0 && m_list[i] <= m_list[i - 1]))
      throw std::invalid_argument("asymptotics: m list must be strictly increasing, m >= 1");
  }
}

BigFloat lambda_at_one(const GroupWord& w, mpfr_prec_t bits) {
  Poly t = veech::trace_poly(w);
  Rat t1 = t.eval(1);
  Rat det = veech::eval_word(w, 1).det();
  Rat disc = t1 * t1 - 4 * det;
  if (!(disc > 0))
    throw veech::NotHyperbolic("word " + w.str() + " at c = 1");
  BigFloat lam = (abs(BigFloat::of(t1, bits)) + sqrt(BigFloat::of(disc, bits))) / BigFloat::of(2L, bits);
  if (lam.d() <= 1.0) throw veech::NotHyperbolic("word " + w.str() + " at c = 1");
  return lam;
}

}  // namespace

Evolution::Evolution(GroupWord word, const homology::HomologyClass& start, long max_steps,
                     Exec exec)
    : rewritten_(word.rewritten_for_homology()), exec_(exec) {
  long reach = static_cast<long>(rewritten_.size());
  support_hi_ = std::max<long>(start.max_support(), 1);
  capacity_ = support_hi_ + reach * max_steps + 2;
  alpha_.assign(static_cast<size_t>(capacity_), Rat(0));
  beta_.assign(static_cast<size_t>(capacity_), Rat(0));
  for (const auto& [n, v] : start.alpha()) alpha_[static_cast<size_t>(n - 1)] = v;
  for (const auto& [n, v] : start.beta()) beta_[static_cast<size_t>(n - 1)] = v;
}

void Evolution::advance_to(long m) {
  if (m < step_) throw std::invalid_argument("Evolution: cannot step backwards");
  const auto& ls = rewritten_.letters();
  while (step_ < m) {
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
      // each application can push the support out by one coordinate
      long limit = std::min(support_hi_ + 1, capacity_ - 1);
      homology::apply_generator_kernel(it->gen, it->exp, alpha_, beta_, limit, exec_);
      support_hi_ = limit;
    }
    ++step_;
  }
}

Rat Evolution::alpha(long n) const {
  return n >= 1 && n <= capacity_ ? alpha_[static_cast<size_t>(n - 1)] : Rat(0);
}

Rat Evolution::beta(long n) const {
  return n >= 1 && n <= capacity_ ? beta_[static_cast<size_t>(n - 1)] : Rat(0);
}

homology::HomologyClass Evolution::snapshot() const {
  homology::HomologyClass::Coords a, b;
  for (long n = 1; n <= capacity_; ++n) {
    if (alpha_[static_cast<size_t>(n - 1)] != 0) a[n] = alpha_[static_cast<size_t>(n - 1)];
    if (beta_[static_cast<size_t>(n - 1)] != 0) b[n] = beta_[static_cast<size_t>(n - 1)];
  }
  return homology::HomologyClass(std::move(a), std::move(b));
}

Rat Evolution::intersect_with(const homology::HomologyClass& y) const {
  Rat s(0);
  for (const auto& [n, by] : y.beta()) s += (alpha(n) + alpha(n + 1)) * by;
  for (const auto& [n, ay] : y.alpha()) {
    s -= beta(n) * ay;
    if (n >= 2) s -= beta(n - 1) * ay;
  }
  return s;
}

AsymptoticRun homology_asymptotics(const GroupWord& w, const homology::HomologyClass& x,
                                   const std::vector<long>& m_list, long n_bound, CoordRef coord,
                                   mpfr_prec_t bits, Exec exec) {
  require_increasing(m_list);
  long m_max = m_list.back();
  if (n_bound < x.max_support() + w.homology_reach() * m_max)
    throw homology::TruncationTooShort("homology_asymptotics: n_bound below support growth");

  veech::KappaData kd = veech::kappa(w, bits);
  BigFloat lam = lambda_at_one(w, bits);

  // projection of hol_1(x) in the v- direction onto v+, solved in the
  // eigenbasis of the exact matrix at c = 1
  Mat2q g1 = veech::eval_word(w, 1);
  Vec2q h = homology::hol(Rat(1), x);
  BigFloat a11 = BigFloat::of(g1.a, bits), a12 = BigFloat::of(g1.b, bits);
  BigFloat a21 = BigFloat::of(g1.c, bits), a22 = BigFloat::of(g1.d, bits);
  Rat t1 = g1.trace();
  BigFloat lam_signed = sgn(t1) >= 0 ? lam : -lam;
  BigFloat mu = BigFloat::of(g1.det(), bits) / lam_signed;
  // eigenvectors (b, lambda - a) unless degenerate in that slot
  auto eigvec = [&](const BigFloat& ev) -> std::array<BigFloat, 2> {
    if (!(g1.b == 0)) return {a12, ev - a11};
    if (!(g1.c == 0)) return {ev - a22, a21};
    return abs(a11 - ev) <= abs(a22 - ev) ? std::array<BigFloat, 2>{BigFloat::of(1L, bits), BigFloat::of(0L, bits)}
                                          : std::array<BigFloat, 2>{BigFloat::of(0L, bits), BigFloat::of(1L, bits)};
  };
  auto vp = eigvec(lam_signed);
  auto vm = eigvec(mu);
  BigFloat hx = BigFloat::of(h.x, bits), hy = BigFloat::of(h.y, bits);
  BigFloat det = vp[0] * vm[1] - vp[1] * vm[0];
  BigFloat p = (hx * vm[1] - hy * vm[0]) / det;  // component along v+
  BigFloat proj_a = p * vp[0], proj_b = p * vp[1];

  // target coordinate of kappa * L_1(proj): alpha_n = (a-b)(2n-1), beta_n = 2bn
  BigFloat target_coord = coord.beta
                              ? kd.kappa * BigFloat::of(2L, bits) * proj_b * BigFloat::of(coord.n, bits)
                              : kd.kappa * (proj_a - proj_b) * BigFloat::of(2 * coord.n - 1, bits);

  AsymptoticRun run;
  run.word = w;
  run.subject = std::string(coord.beta ? "beta_" : "alpha_") + std::to_string(coord.n) + " of " +
                x.json();
  run.m_list = m_list;
  run.target = target_coord.d();

  Evolution ev(w, x, m_max, exec);
  for (long m : m_list) {
    ev.advance_to(m);
    Rat value = coord.beta ? ev.beta(coord.n) : ev.alpha(coord.n);
    run.exact_values.push_back(value);
    BigFloat lam_pow = pow_si(lam, m);
    run.scaled_values.push_back(scaled_value(value, m, &lam_pow, bits));
  }
  run.extrapolated_limit = extrapolate(run.m_list, run.scaled_values);
  return run;
}

namespace {

homology::HomologyClass core_class(const surface::Cylinder& cyl) {
  return cyl.family == surface::Family::Horizontal ? homology::HomologyClass::horizontal(cyl.n)
                                                   : homology::HomologyClass::slope_one(cyl.n);
}

std::string cylinder_name(const surface::Cylinder& cyl) {
  return std::string(cyl.family == surface::Family::Horizontal ? "horizontal:" : "slope_one:") +
         std::to_string(cyl.n);
}

}  // namespace

AsymptoticRun intersection_asymptotics(const GroupWord& w, const surface::Cylinder& a,
                                       const surface::Cylinder& b, const std::vector<long>& m_list,
                                       mpfr_prec_t bits, Exec exec) {
  require_increasing(m_list);
  if (a.c != 1 || b.c != 1)
    throw std::invalid_argument("asymptotics: the intersection law runs on S_1 cylinders");
  veech::KappaData kd = veech::kappa(w, bits);

  homology::HomologyClass class_a = core_class(a);
  homology::HomologyClass class_b = core_class(b);
  Mat2q g1 = veech::eval_word(w, 1);
  Mat2q g_pow = Mat2q::identity();

  AsymptoticRun run;
  run.word = w;
  run.subject = "Area(G^m " + cylinder_name(a) + " ^ " + cylinder_name(b) + ")";
  run.m_list = m_list;
  run.target = (kd.kappa * BigFloat::of(a.area, bits) * BigFloat::of(b.area, bits)).d();

  Evolution ev(w, class_a, m_list.back(), exec);
  long at = 0;
  for (long m : m_list) {
    ev.advance_to(m);
    while (at < m) {
      g_pow = g1 * g_pow;
      ++at;
    }
    Rat inum = abs(ev.intersect_with(class_b));
    Rat wedge_m = wedge(g_pow * a.core_holonomy, b.core_holonomy);
    if (wedge_m == 0)
      throw DegenerateWedge("G^m hol(A) parallel to hol(B) at m = " + std::to_string(m));
    Rat area = inum * a.area * b.area / abs(wedge_m);
    run.exact_values.push_back(area);
    run.scaled_values.push_back(scaled_value(area, m, nullptr, bits));
  }
  run.extrapolated_limit = extrapolate(run.m_list, run.scaled_values);
  return run;
}

NonrecurrenceSum nonrecurrence_sum(const GroupWord& w, const surface::Cylinder& a, long m_max,
                                   mpfr_prec_t bits, Exec exec) {
  if (a.c != 1)
    throw std::invalid_argument("asymptotics: the intersection law runs on S_1 cylinders");
  NonrecurrenceSum out;
  out.m_max = m_max;
  veech::KappaData kd = veech::kappa(w, bits);
  double k_area2 = (kd.kappa * BigFloat::of(a.area * a.area, bits)).d();
  out.comparison_bound = k_area2 * kZeta32 * 1.1;
  out.last_increment_violation = 0;
  out.increments_monotone_decreasing_eventually = true;

  if (m_max <= 0) {
    out.partial_sum = 0;
    return out;
  }

  homology::HomologyClass class_a = core_class(a);
  Mat2q g1 = veech::eval_word(w, 1);
  Mat2q g_pow = Mat2q::identity();
  Evolution ev(w, class_a, m_max, exec);

  Rat sum(0);
  for (long m = 1; m <= m_max; ++m) {
    ev.advance_to(m);
    g_pow = g1 * g_pow;
    Rat inum = abs(ev.intersect_with(class_a));
    Rat wedge_m = wedge(g_pow * a.core_holonomy, a.core_holonomy);
    if (wedge_m == 0)
      throw DegenerateWedge("G^m hol(A) parallel to hol(A) at m = " + std::to_string(m));
    Rat area = inum * a.area * a.area / abs(wedge_m);
    sum += area;
    double inc = scaled_value(area, m, nullptr, bits);  // m^{3/2} Area
    if (inc > 1.1 * k_area2) out.last_increment_violation = m;
  }
  out.partial_sum = BigFloat::of(sum, bits).d();
  return out;
}

double zeta32_partial(long m_max) {
  // ascending-magnitude Kahan sum; the acceptance margin is ~5e-10 so naive
  // forward summation error (~1e-10 at M = 1e6) is not acceptable
  double s = 0.0, comp = 0.0;
  for (long m = m_max; m >= 1; --m) {
    double y = 1.0 / (static_cast<double>(m) * std::sqrt(static_cast<double>(m))) - comp;
    double t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  return s;
}

Int catalan(long n) {
  if (n < 0) throw std::invalid_argument("catalan: n >= 0");
  Int c = 1;
  for (long k = 0; k < n; ++k) {
    // c *= (4 - 6/(k+2)) = (4k + 2)/(k + 2), always exact on Catalan numbers
    c *= 4 * k + 2;
    Int q;
    mpz_divexact_ui(q.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 2));
    c = q;
  }
  return c;
}

Int catalan_closed_form(long n) {
  if (n < 0) throw std::invalid_argument("catalan: n >= 0");
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(2 * n), static_cast<unsigned long>(n));
  Int q;
  mpz_divexact_ui(q.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(n + 1));
  return q;
}

double catalan_integral(long n, const QuadratureConfig& cfg, Exec exec) {
  auto f = [n](double theta) {
    return (2.0 - 2.0 * std::cos(theta)) * std::pow((1.0 + std::cos(theta)) / 2.0, n);
  };
  double integral = integrate(f, -M_PI, M_PI, cfg, exec);
  return std::pow(4.0, static_cast<double>(n - 1)) / M_PI * integral;
}

double catalan_ratio(long n) {
  double ln_cn = std::lgamma(2.0 * n + 1.0) - 2.0 * std::lgamma(n + 1.0) - std::log(n + 1.0);
  return std::exp(ln_cn + 0.5 * std::log(M_PI) + 1.5 * std::log(static_cast<double>(n)) -
                  n * std::log(4.0));
}

GrowthLemmaResult growth_lemma_check(double a, double eps, const std::function<double(double)>& f,
                                     const std::function<double(double)>& g,
                                     const std::vector<long>& n_list, const QuadratureConfig& cfg,
                                     Exec exec) {
  if (a <= 0 || eps <= 0) throw HypothesisViolation("need a > 0 and eps > 0");
  const double h = 1e-4, tol = 1e-2;
  auto d2 = [h](const std::function<double(double)>& fn) {
    return (fn(h) - 2.0 * fn(0.0) + fn(-h)) / (h * h);
  };
  if (std::abs(f(0.0)) > tol) throw HypothesisViolation("f(0) != 0");
  if (std::abs((f(h) - f(-h)) / (2 * h)) > tol) throw HypothesisViolation("f'(0) != 0");
  if (std::abs(d2(f) - 2.0) > tol) throw HypothesisViolation("f''(0) != 2");
  if (std::abs(g(0.0) - 1.0) > tol) throw HypothesisViolation("g(0) != 1");
  if (std::abs((g(h) - g(-h)) / (2 * h)) > tol) throw HypothesisViolation("g'(0) != 0");
  if (std::abs(d2(g) + 2.0 * a) > tol * std::max(1.0, 2.0 * a))
    throw HypothesisViolation("g''(0) != -2a");
  for (int i = 1; i <= 50; ++i) {
    double x = eps * i / 50.0;
    if (std::abs(g(x)) >= 1.0 || std::abs(g(-x)) >= 1.0)
      throw HypothesisViolation("|g| >= 1 away from 0, at x = " + std::to_string(x));
  }

  GrowthLemmaResult out;
  out.n_list = n_list;
  for (long n : n_list) {
    auto integrand = [&f, &g, n](double x) { return f(x) * std::pow(g(x), static_cast<double>(n)); };
    double rn = integrate(integrand, -eps, eps, cfg, exec);
    double sn = std::sqrt(M_PI) / (2.0 * std::pow(a, 1.5) * std::pow(static_cast<double>(n), 1.5));
    out.r_n.push_back(rn);
    out.s_n.push_back(sn);
    out.ratio.push_back(rn / sn);
  }
  return out;
}

}  // namespace latsurf::asymptotics
