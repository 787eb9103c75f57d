#include "latsurf/homology.hpp"

#include <cmath>
#include <sstream>

namespace latsurf::homology {

HomologyClass::HomologyClass(Coords alpha, Coords beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  for (const auto& [n, v] : alpha_)
    if (n < 1) throw std::invalid_argument("homology: alpha index < 1");
  for (const auto& [n, v] : beta_)
    if (n < 1) throw std::invalid_argument("homology: beta index < 1");
  prune();
}

void HomologyClass::prune() {
  std::erase_if(alpha_, [](const auto& kv) { return kv.second == 0; });
  std::erase_if(beta_, [](const auto& kv) { return kv.second == 0; });
}

HomologyClass HomologyClass::horizontal(long n, Rat coeff) {
  return HomologyClass({{n, std::move(coeff)}}, {});
}

HomologyClass HomologyClass::slope_one(long n, Rat coeff) {
  return HomologyClass({}, {{n, std::move(coeff)}});
}

Rat HomologyClass::alpha_at(long n) const {
  auto it = alpha_.find(n);
  return it == alpha_.end() ? Rat(0) : it->second;
}

Rat HomologyClass::beta_at(long n) const {
  auto it = beta_.find(n);
  return it == beta_.end() ? Rat(0) : it->second;
}

long HomologyClass::max_support() const {
  long m = 0;
  if (!alpha_.empty()) m = alpha_.rbegin()->first;
  if (!beta_.empty()) m = std::max(m, beta_.rbegin()->first);
  return m;
}

HomologyClass HomologyClass::operator+(const HomologyClass& o) const {
  HomologyClass r = *this;
  for (const auto& [n, v] : o.alpha_) r.alpha_[n] += v;
  for (const auto& [n, v] : o.beta_) r.beta_[n] += v;
  r.prune();
  return r;
}

HomologyClass HomologyClass::operator-() const { return *this * Rat(-1); }

HomologyClass HomologyClass::operator*(const Rat& s) const {
  HomologyClass r = *this;
  if (s == 0) return HomologyClass();
  for (auto& [n, v] : r.alpha_) v *= s;
  for (auto& [n, v] : r.beta_) v *= s;
  return r;
}

std::string HomologyClass::json() const {
  auto coords = [](const Coords& cs) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [n, v] : cs) {
      if (!first) os << ',';
      first = false;
      os << '"' << n << "\":\"" << rat_str(v) << '"';
    }
    os << '}';
    return os.str();
  };
  return "{\"alpha\":" + coords(alpha_) + ",\"beta\":" + coords(beta_) + "}";
}

TruncatedExtendedClass::TruncatedExtendedClass(long n, std::string provenance)
    : valid_(n), tag_(std::move(provenance)) {
  if (n < 1) throw TruncationTooShort("requested truncation bound " + std::to_string(n));
  alpha_.assign(static_cast<size_t>(n) + 1, Rat(0));
  beta_.assign(static_cast<size_t>(n) + 1, Rat(0));
}

void TruncatedExtendedClass::consume_top(int count, const std::string& op) {
  if (valid_ - count < 1)
    throw TruncationTooShort(op + " needs " + std::to_string(count) +
                             " top coordinates but only " + std::to_string(valid_) +
                             " are valid (" + tag_ + ")");
  valid_ -= count;
}

TruncatedExtendedClass TruncatedExtendedClass::kernel_element_z(long n) {
  TruncatedExtendedClass z(n, "z");
  for (long i = 1; i <= n; ++i) z.alpha(i) = (i % 2 == 1) ? Rat(1) : Rat(-1);
  return z;
}

Rat intersect(const HomologyClass& x, const HomologyClass& y) {
  Rat s(0);
  for (const auto& [n, by] : y.beta()) s += (x.alpha_at(n) + x.alpha_at(n + 1)) * by;
  for (const auto& [n, bx] : x.beta()) s -= bx * (y.alpha_at(n) + y.alpha_at(n + 1));
  return s;
}

Rat intersect(const TruncatedExtendedClass& x, const HomologyClass& y) {
  long need = y.max_support() + 1;
  if (need > x.valid_n())
    throw TruncationTooShort("intersect needs coordinates up to " + std::to_string(need) +
                             " but only " + std::to_string(x.valid_n()) + " are valid (" +
                             x.provenance() + ")");
  Rat s(0);
  for (const auto& [n, by] : y.beta()) s += (x.alpha(n) + x.alpha(n + 1)) * by;
  for (const auto& [n, ay] : y.alpha()) {
    // beta^x_n (a^y_n + a^y_{n+1}) regrouped over the support of alpha^y
    s -= x.beta(n) * ay;
    if (n >= 2) s -= x.beta(n - 1) * ay;
  }
  return s;
}

HomologyClass act(Gen g, int exp, const HomologyClass& x) {
  auto alpha = x.alpha();
  auto beta = x.beta();
  Rat e(exp);
  switch (g) {
    case Gen::D:
      for (const auto& [n, b] : x.beta()) {
        alpha[n] += e * b;
        alpha[n + 1] += e * b;
      }
      break;
    case Gen::E:
      for (const auto& [n, a] : x.alpha()) {
        beta[n] -= e * a;
        if (n >= 2) beta[n - 1] -= e * a;
      }
      break;
    case Gen::A:
      for (auto& [n, a] : alpha) a = -a;
      for (const auto& [n, b] : x.beta()) {
        alpha[n] -= b;
        alpha[n + 1] -= b;
      }
      break;
    case Gen::NegI:
      for (auto& [n, a] : alpha) a = -a;
      for (auto& [n, b] : beta) b = -b;
      break;
    default:
      throw std::invalid_argument("homology action only defined for A, D, E, -I");
  }
  return HomologyClass(std::move(alpha), std::move(beta));
}

void apply_generator_kernel(Gen g, int exp, std::vector<Rat>& alpha, std::vector<Rat>& beta,
                            long limit, Exec exec) {
  // slot i holds coordinate n = i + 1; coordinates 1..limit are written and
  // reads reach one slot past `limit` for the E stencil
  if (limit < 1) throw TruncationTooShort("kernel limit < 1");
  if (g == Gen::E && static_cast<size_t>(limit) + 1 > alpha.size())
    throw TruncationTooShort("kernel buffer too small for the E stencil");
  long e = exp;
  switch (g) {
    case Gen::D:
      parallel_for(exec, 0, limit, [&](std::int64_t i) {
        Rat t = beta[i];
        if (i > 0) t += beta[i - 1];
        if (e > 0)
          alpha[i] += t;
        else
          alpha[i] -= t;
      });
      break;
    case Gen::E:
      parallel_for(exec, 0, limit, [&](std::int64_t i) {
        Rat t = alpha[i] + alpha[i + 1];
        if (e > 0)
          beta[i] -= t;
        else
          beta[i] += t;
      });
      break;
    case Gen::A:
      parallel_for(exec, 0, limit, [&](std::int64_t i) {
        Rat t = beta[i];
        if (i > 0) t += beta[i - 1];
        alpha[i] = -alpha[i] - t;
      });
      break;
    case Gen::NegI:
      parallel_for(exec, 0, limit, [&](std::int64_t i) {
        alpha[i] = -alpha[i];
        beta[i] = -beta[i];
      });
      break;
    default:
      throw std::invalid_argument("homology action only defined for A, D, E, -I");
  }
}

void act_in_place(Gen g, int exp, TruncatedExtendedClass& x, Exec exec) {
  x.consume_top(1, std::string("act ") + gen_char(g));
  long limit = x.valid_n();
  switch (g) {
    case Gen::D:
      parallel_for(exec, 1, limit + 1, [&](std::int64_t n) {
        Rat t = x.beta(n);
        if (n > 1) t += x.beta(n - 1);
        if (exp > 0)
          x.alpha(n) += t;
        else
          x.alpha(n) -= t;
      });
      break;
    case Gen::E:
      parallel_for(exec, 1, limit + 1, [&](std::int64_t n) {
        Rat t = x.alpha(n) + x.alpha(n + 1);
        if (exp > 0)
          x.beta(n) -= t;
        else
          x.beta(n) += t;
      });
      break;
    case Gen::A:
      parallel_for(exec, 1, limit + 1, [&](std::int64_t n) {
        Rat t = x.beta(n);
        if (n > 1) t += x.beta(n - 1);
        x.alpha(n) = -x.alpha(n) - t;
      });
      break;
    case Gen::NegI:
      parallel_for(exec, 1, limit + 1, [&](std::int64_t n) {
        x.alpha(n) = -x.alpha(n);
        x.beta(n) = -x.beta(n);
      });
      break;
    default:
      throw std::invalid_argument("homology action only defined for A, D, E, -I");
  }
}

HomologyClass act_word(const GroupWord& w, const HomologyClass& x) {
  GroupWord rw = w.rewritten_for_homology();
  HomologyClass out = x;
  const auto& ls = rw.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) out = act(it->gen, it->exp, out);
  return out;
}

void act_word_in_place(const GroupWord& w, TruncatedExtendedClass& x, Exec exec) {
  GroupWord rw = w.rewritten_for_homology();
  const auto& ls = rw.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) act_in_place(it->gen, it->exp, x, exec);
}

namespace {

// x-coordinates of the vertices P_k for k in [-k_lo, k_hi], indexed by k
std::map<long, Rat> vertex_x_range(const Rat& c, long k_lo, long k_hi) {
  std::map<long, Rat> xs;
  Vec2q p(0, 0);
  xs[0] = p.x;
  for (long k = 1; k <= k_hi; ++k) {
    p = Vec2q{c * p.x + (c - 1) * p.y + 1, (c + 1) * p.x + c * p.y + 1};
    xs[k] = p.x;
  }
  p = Vec2q(0, 0);
  for (long k = -1; k >= k_lo; --k) {
    Rat x = p.x - 1, y = p.y - 1;
    p = Vec2q{c * x - (c - 1) * y, -(c + 1) * x + c * y};
    xs[k] = p.x;
  }
  return xs;
}

}  // namespace

Vec2q hol(const Rat& c, const HomologyClass& x) {
  long m = x.max_support();
  auto xs = vertex_x_range(c, -m, m + 1);
  Vec2q out(0, 0);
  for (const auto& [n, a] : x.alpha()) {
    Rat circ = 2 * xs[n - 1] + 2 * xs[n];
    out.x += a * circ;
  }
  for (const auto& [n, b] : x.beta()) {
    Rat w = xs[n] - xs[1 - n] + xs[n + 1] - xs[-n];
    out.x += b * w;
    out.y += b * w;
  }
  return out;
}

TruncatedExtendedClass invariant_plane_class(const Rat& c, const Rat& a, const Rat& b, long n) {
  TruncatedExtendedClass out(n, "L(" + rat_str(c) + "; " + rat_str(a) + ", " + rat_str(b) + ")");
  // T_j(c) running sum for the alpha widths, U_{k-1}(c) for beta
  Rat t_prev(1), t_cur = c;
  Rat width(1);  // 1 + 2 sum_{j=1}^{k-1} T_j(c), starts at k = 1
  Rat u_prev(0), u_cur(1);
  Rat ab = a - b, b2 = 2 * b;
  for (long k = 1; k <= n; ++k) {
    out.alpha(k) = ab * width;
    out.beta(k) = b2 * u_cur;
    width += 2 * t_cur;
    Rat t_next = 2 * c * t_cur - t_prev;
    t_prev = t_cur;
    t_cur = t_next;
    Rat u_next = 2 * c * u_cur - u_prev;
    u_prev = u_cur;
    u_cur = u_next;
  }
  return out;
}

PolyPair psi(const HomologyClass& x) {
  PolyPair out;
  for (const auto& [n, a] : x.alpha()) {
    out.first.add_term(static_cast<int>(n - 1), 2 * a);
    out.first.add_term(static_cast<int>(n), -2 * a);
  }
  for (const auto& [n, b] : x.beta()) {
    out.first.add_term(static_cast<int>(n - 1), b);
    out.first.add_term(static_cast<int>(n + 1), -b);
    out.second.add_term(static_cast<int>(n - 1), b);
    out.second.add_term(static_cast<int>(n + 1), -b);
  }
  return out;
}

double reconstruct_error(const HomologyClass& x, long n, const QuadratureConfig& cfg, Exec exec) {
  PolyPair pp = psi(x);
  size_t dim = static_cast<size_t>(2 * n);

  auto integrand = [&pp, n](double theta, std::vector<double>& out) {
    double c = std::cos(theta);
    double pa = pp.first.eval_d(c);
    double pb = pp.second.eval_d(c);
    // L_c(pa, pb) coordinates via T and U value recurrences
    double t_prev = 1.0, t_cur = c;
    double width = 1.0;
    double u_prev = 0.0, u_cur = 1.0;
    for (long k = 1; k <= n; ++k) {
      out[static_cast<size_t>(k - 1)] = (pa - pb) * width;
      out[static_cast<size_t>(n + k - 1)] = 2.0 * pb * u_cur;
      width += 2.0 * t_cur;
      double t_next = 2.0 * c * t_cur - t_prev;
      t_prev = t_cur;
      t_cur = t_next;
      double u_next = 2.0 * c * u_cur - u_prev;
      u_prev = u_cur;
      u_cur = u_next;
    }
  };

  std::vector<double> integral = integrate_vec(integrand, dim, -M_PI, M_PI, cfg, exec);
  double scale = 1.0 / (4.0 * M_PI);
  double worst = 0.0;
  for (long k = 1; k <= n; ++k) {
    double got_a = scale * integral[static_cast<size_t>(k - 1)];
    double got_b = scale * integral[static_cast<size_t>(n + k - 1)];
    worst = std::max(worst, std::abs(got_a - rat_d(x.alpha_at(k))));
    worst = std::max(worst, std::abs(got_b - rat_d(x.beta_at(k))));
  }
  return worst;
}

}  // namespace latsurf::homology
