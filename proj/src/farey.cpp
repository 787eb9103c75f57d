#include "latsurf/farey.hpp"

#include <cmath>

namespace latsurf::farey {

ReducedFraction ReducedFraction::of(Int p, Int q) {
  if (p == 0 && q == 0) throw std::invalid_argument("farey: fraction 0/0");
  Int g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  p /= g;
  q /= g;
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return {std::move(p), std::move(q)};
}

Parity parity_class(const ReducedFraction& f) {
  bool p_odd = mpz_odd_p(f.p.get_mpz_t());
  bool q_odd = mpz_odd_p(f.q.get_mpz_t());
  if (p_odd && q_odd) return Parity::P11;
  if (p_odd) return Parity::P10;
  return Parity::P01;
}

std::string parity_str(Parity p) {
  switch (p) {
    case Parity::P01: return "01";
    case Parity::P11: return "11";
    case Parity::P10: return "10";
  }
  return "?";
}

bool farey_adjacent(const ReducedFraction& a, const ReducedFraction& b) {
  Int d = a.p * b.q - b.p * a.q;
  return d == 1 || d == -1;
}

Theta Theta::surd(long a, long b, long d, long e, mpfr_prec_t bits) {
  if (e == 0) throw std::invalid_argument("farey: surd with e = 0");
  if (d < 0) throw std::invalid_argument("farey: surd with d < 0");
  long root = std::lround(std::sqrt(static_cast<double>(d)));
  if (b == 0 || root * root == d)
    throw RationalInput("(" + std::to_string(a) + " + " + std::to_string(b) + " sqrt " +
                        std::to_string(d) + ") / " + std::to_string(e) + " is rational");
  // evaluate with headroom, then round to the working precision
  BigFloat wide = sqrt(BigFloat::of(d, bits + 64));
  wide = (BigFloat::of(a, bits + 64) + BigFloat::of(b, bits + 64) * wide) / BigFloat::of(e, bits + 64);
  BigFloat v = wide.rounded_to(bits);
  std::string desc = "quad:" + std::to_string(a) + "," + std::to_string(b) + "," +
                     std::to_string(d) + "," + std::to_string(e);
  return Theta(std::move(v), std::move(desc));
}

Theta Theta::decimal(const std::string& digits, mpfr_prec_t bits) {
  return Theta(BigFloat::parse(digits, bits), "dec:" + digits + "@" + std::to_string(bits));
}

namespace {
constexpr int kGuardBits = 48;
}

int Theta::compare(const Int& p, const Int& q) const {
  mpfr_prec_t bits = value_.bits();
  // diff = theta * q - p, with |q| extra headroom
  BigFloat diff = value_ * BigFloat::of(Int(q), bits + 64) - BigFloat::of(Int(p), bits + 64);
  if (diff.is_zero())
    throw PrecisionExhausted("theta indistinguishable from " + p.get_str() + "/" + q.get_str() +
                             " at " + std::to_string(bits) + " bits");
  // compare leading-bit positions: the guarded zone is where rounding noise
  // of theta (around 2^(exp(theta) - bits)) scaled by q could reach
  mpfr_exp_t noise_exp = value_.exponent() - bits + kGuardBits +
                         static_cast<mpfr_exp_t>(mpz_sizeinbase(q.get_mpz_t(), 2));
  if (diff.exponent() <= noise_exp)
    throw PrecisionExhausted("theta too close to " + p.get_str() + "/" + q.get_str() + " at " +
                             std::to_string(bits) + " bits");
  return diff.sign();
}

double Theta::distance(const Int& p, const Int& q) const {
  mpfr_prec_t bits = value_.bits();
  Rat r(p, q);
  r.canonicalize();
  return abs(value_ - BigFloat::of(r, bits)).d();
}

namespace {

double witness_value(const Theta& theta, const ReducedFraction& f, long index_1based) {
  return static_cast<double>(index_1based) * f.q.get_d() * theta.distance(f.p, f.q);
}

}  // namespace

GSequence gsequence(const Theta& theta, int depth) {
  if (depth < 2) throw std::invalid_argument("farey.gsequence: depth >= 2");
  GSequence out;
  out.theta_descriptor = theta.descriptor();
  out.precision_bits = theta.bits();

  mpfr_prec_t bits = theta.bits();
  // nearest integer; the guarded compare against it flags (near-)integer input
  Int n = (theta.value() + BigFloat::of(0.5, bits)).floor_to_int();
  int side = theta.compare(n, Int(1));
  ReducedFraction f1{n, Int(1)};
  out.entries.push_back({f1, std::nullopt, witness_value(theta, f1, 1)});

  // children of the integer n are n +- 1/b for odd b; pick the unique odd
  // integer within distance 1 of 1/|theta - n|
  BigFloat dist = abs(theta.value() - BigFloat::of(n, bits));
  BigFloat inv = BigFloat::of(1L, bits) / dist;
  Int b = inv.floor_to_int();
  if (mpz_even_p(b.get_mpz_t())) b += 1;
  ReducedFraction f2 = ReducedFraction::of(n * b + (side > 0 ? 1 : -1), b);
  out.entries.push_back({f2, std::nullopt, witness_value(theta, f2, 2)});

  while (static_cast<int>(out.entries.size()) < depth) {
    const ReducedFraction& prev = out.entries[out.entries.size() - 2].fraction;
    const ReducedFraction& cur = out.entries.back().fraction;
    theta.compare(cur.p, cur.q);  // throws once theta is indistinguishable from the walk
    // solve y_j = (p_{i-1} + j p_i) / (q_{i-1} + j q_i) = theta for real j,
    // then test the two even integers around it
    BigFloat pm = BigFloat::of(prev.p, bits), qm = BigFloat::of(prev.q, bits);
    BigFloat pc = BigFloat::of(cur.p, bits), qc = BigFloat::of(cur.q, bits);
    BigFloat j_star = (theta.value() * qm - pm) / (pc - theta.value() * qc);
    Int base = (j_star / BigFloat::of(2L, bits)).floor_to_int();

    std::optional<std::pair<long, ReducedFraction>> chosen;
    for (Int k = base; k <= base + 1; ++k) {
      if (k == 0) continue;
      Int j = 2 * k;
      // subtree of child y_{2k} has limit interval bounded by the excluded
      // neighbors y_{2k-1} and y_{2k+1}
      Int p_lo = prev.p + (j - 1) * cur.p, q_lo = prev.q + (j - 1) * cur.q;
      Int p_hi = prev.p + (j + 1) * cur.p, q_hi = prev.q + (j + 1) * cur.q;
      int s_lo = theta.compare(p_lo, q_lo) * (q_lo < 0 ? -1 : 1);
      int s_hi = theta.compare(p_hi, q_hi) * (q_hi < 0 ? -1 : 1);
      if (s_lo != s_hi) {
        if (chosen)
          throw PrecisionExhausted("ambiguous bracketing near entry " +
                                   std::to_string(out.entries.size() + 1));
        chosen = {k.get_si(), ReducedFraction::of(prev.p + j * cur.p, prev.q + j * cur.q)};
      }
    }
    if (!chosen)
      throw PrecisionExhausted("no bracketing child found at entry " +
                               std::to_string(out.entries.size() + 1));
    out.entries.push_back({chosen->second, chosen->first,
                           witness_value(theta, chosen->second,
                                         static_cast<long>(out.entries.size()) + 1)});
  }
  return out;
}

Vec2q boundary_holonomy(const ReducedFraction& f, long n) {
  if (n < 1) throw std::invalid_argument("farey.boundary_holonomy: n >= 1");
  Parity par = parity_class(f);
  if (par == Parity::P10)
    throw ExcludedParity("direction " + f.str() + " decomposes into strips");
  long factor = par == Parity::P01 ? 2 * n : 2 * n + 1;
  return {Rat(factor) * Rat(f.q), Rat(factor) * Rat(f.p)};
}

double transverse_boundary_measure(const Theta& theta, const ReducedFraction& f, long n) {
  Parity par = parity_class(f);
  if (par == Parity::P10)
    throw ExcludedParity("direction " + f.str() + " decomposes into strips");
  double factor = par == Parity::P01 ? 2.0 * n : 2.0 * n + 1.0;
  mpfr_prec_t bits = theta.bits();
  // |(1, theta) ^ (q, p)| = |p - theta q|
  BigFloat w = abs(BigFloat::of(f.p, bits) - theta.value() * BigFloat::of(f.q, bits));
  BigFloat norm = sqrt(BigFloat::of(1L, bits) + theta.value() * theta.value());
  return factor * (w / norm).d();
}

WitnessSeries recurrence_witness(const Theta& theta, int depth) {
  if (depth < 1) throw std::invalid_argument("farey.recurrence_witness: depth >= 1");
  if (depth == 1) {
    // just the nearest-integer witness 1 * 1 * |theta - n| <= 1/2
    Int n = (theta.value() + BigFloat::of(0.5, theta.bits())).floor_to_int();
    double w = theta.distance(n, Int(1));
    return {{w}, {w}};
  }
  GSequence seq = gsequence(theta, depth);
  WitnessSeries out;
  double run = std::numeric_limits<double>::infinity();
  for (const auto& e : seq.entries) {
    out.witnesses.push_back(e.witness);
    run = std::min(run, e.witness);
    out.running_min.push_back(run);
  }
  return out;
}

CfOverlap cf_overlap(const Theta& theta, int depth) {
  GSequence seq = gsequence(theta, depth);
  Int q_max(0);
  for (const auto& e : seq.entries) q_max = std::max(q_max, e.fraction.q);

  CfOverlap out;
  mpfr_prec_t bits = theta.bits();
  // standard continued fraction: s_{i+1}/t_{i+1} = (a s_i + s_{i-1}) / (a t_i + t_{i-1})
  Int s_prev(1), t_prev(0);
  Int a0 = theta.value().floor_to_int();
  Int s(a0), t(1);
  BigFloat rem = theta.value() - BigFloat::of(a0, bits);
  while (t <= q_max) {
    ReducedFraction conv{s, t};
    Parity par = parity_class(conv);
    bool found = false;
    for (const auto& e : seq.entries)
      if (e.fraction == conv) found = true;
    out.convergents.push_back({conv, par, found});
    if (par != Parity::P10) {
      ++out.admissible;
      if (found) ++out.found;
    }
    if (rem.is_zero()) throw RationalInput("theta has a terminating continued fraction");
    if (rem.exponent() < -(bits - kGuardBits))
      throw PrecisionExhausted("continued fraction remainder below guard");
    BigFloat inv = BigFloat::of(1L, bits) / rem;
    Int a = inv.floor_to_int();
    rem = inv - BigFloat::of(a, bits);
    Int s_next = a * s + s_prev, t_next = a * t + t_prev;
    s_prev = s;
    t_prev = t;
    s = s_next;
    t = t_next;
  }
  return out;
}

}  // namespace latsurf::farey
