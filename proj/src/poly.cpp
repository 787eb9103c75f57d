#include "latsurf/poly.hpp"

#include <mutex>

namespace latsurf {

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& s) const {
  std::vector<Rat> r(c_);
  for (auto& v : r) v *= s;
  return Poly(std::move(r));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(r));
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Poly::eval_d(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += rat_str(c_[k]);
    if (k >= 1) out += "*" + var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

namespace {

std::vector<Poly>& cheb_cache(bool second_kind) {
  static std::vector<Poly> t_cache{Poly::constant(Rat(1)), Poly::x()};
  static std::vector<Poly> u_cache{Poly::constant(Rat(1)), Poly({Rat(0), Rat(2)})};
  return second_kind ? u_cache : t_cache;
}

const Poly& cheb(int j, bool second_kind) {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto& cache = cheb_cache(second_kind);
  const Poly two_x({Rat(0), Rat(2)});
  while (static_cast<int>(cache.size()) <= j) {
    size_t n = cache.size();
    cache.push_back(two_x * cache[n - 1] - cache[n - 2]);
  }
  return cache[j];
}

}  // namespace

const Poly& chebyshev_T(int j) { return cheb(j < 0 ? -j : j, false); }
const Poly& chebyshev_U(int j) { return cheb(j, true); }

ChebSeries ChebSeries::operator+(const ChebSeries& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return ChebSeries(std::move(r));
}

ChebSeries ChebSeries::operator*(const Rat& s) const {
  std::vector<Rat> r(c_);
  for (auto& v : r) v *= s;
  return ChebSeries(std::move(r));
}

Rat ChebSeries::value_at_one() const {
  Rat s(0);
  for (const auto& v : c_) s += v;
  return s;
}

Rat ChebSeries::second_theta_derivative_at_zero() const {
  Rat s(0);
  for (size_t j = 1; j < c_.size(); ++j) s -= c_[j] * Rat(static_cast<long>(j * j));
  return s;
}

Rat ChebSeries::eval(const Rat& c) const {
  if (c_.empty()) return Rat(0);
  Rat s = c_[0];
  Rat t_prev(1), t_cur = c;
  for (size_t j = 1; j < c_.size(); ++j) {
    s += c_[j] * t_cur;
    Rat t_next = Rat(2) * c * t_cur - t_prev;
    t_prev = t_cur;
    t_cur = t_next;
  }
  return s;
}

double ChebSeries::eval_d(double c) const {
  if (c_.empty()) return 0.0;
  double s = c_[0].get_d();
  double t_prev = 1.0, t_cur = c;
  for (size_t j = 1; j < c_.size(); ++j) {
    s += c_[j].get_d() * t_cur;
    double t_next = 2.0 * c * t_cur - t_prev;
    t_prev = t_cur;
    t_cur = t_next;
  }
  return s;
}

Poly ChebSeries::to_poly() const {
  Poly p;
  for (size_t j = 0; j < c_.size(); ++j)
    if (c_[j] != 0) p = p + chebyshev_T(static_cast<int>(j)) * c_[j];
  return p;
}

}  // namespace latsurf
