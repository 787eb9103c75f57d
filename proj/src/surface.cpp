#include "latsurf/surface.hpp"

#include <map>
#include <sstream>

namespace latsurf::surface {

namespace {

Vec2q apply_T(const Rat& c, const Vec2q& v) {
  return {c * v.x + (c - 1) * v.y + 1, (c + 1) * v.x + c * v.y + 1};
}

Vec2q apply_T_inv(const Rat& c, const Vec2q& v) {
  // linear part has determinant 1; undo the translation, then invert
  Rat x = v.x - 1, y = v.y - 1;
  return {c * x - (c - 1) * y, -(c + 1) * x + c * y};
}

}  // namespace

Vertex vertex(const Rat& c, long k) {
  Vec2q p(0, 0);
  for (long i = 0; i < (k >= 0 ? k : -k); ++i) p = k >= 0 ? apply_T(c, p) : apply_T_inv(c, p);
  return {k, p};
}

Cylinder cylinder(const Rat& c, Family family, long n) {
  if (c < 1) throw std::domain_error("surface.cylinder: decomposition requires c >= 1");
  if (n < 1) throw std::domain_error("surface.cylinder: n >= 1");

  Cylinder out;
  out.family = family;
  out.n = n;
  out.c = c;

  if (family == Family::Horizontal) {
    // C_n = 2 x_{n-1} + 2 x_n, H_n = y_n - y_{n-1}; core in direction (1,0)
    Vec2q pm = vertex(c, n - 1).point;
    Vec2q pn = vertex(c, n).point;
    Rat circ = 2 * pm.x + 2 * pn.x;
    Rat h = pn.y - pm.y;
    out.circumference = {circ, false};
    out.height = {h, false};
    out.modulus = h / circ;
    out.area = circ * h;
    out.core_holonomy = {circ, 0};
  } else {
    // C_n = sqrt2 (x_n - x_{1-n} + x_{n+1} - x_{-n}), H_n = sqrt2 x_n;
    // core in direction (1,1) with holonomy C_n / sqrt2 * (1,1)
    Rat xn = vertex(c, n).point.x;
    Rat x1mn = vertex(c, 1 - n).point.x;
    Rat xnp1 = vertex(c, n + 1).point.x;
    Rat xmn = vertex(c, -n).point.x;
    Rat w = xn - x1mn + xnp1 - xmn;
    out.circumference = {w, true};
    out.height = {xn, true};
    out.modulus = xn / w;
    out.area = Rat(2) * w * xn;
    out.core_holonomy = {w, w};
  }
  return out;
}

Rat intersection_area(const Rat& area_a, const Vec2q& hol_a, const Rat& area_b,
                      const Vec2q& hol_b, const Int& intersection_number) {
  Rat w = wedge(hol_a, hol_b);
  if (w == 0) throw ParallelCylinders();
  return abs(Rat(intersection_number)) * area_a * area_b / abs(w);
}

DirectionClass classify_direction(const Int& p, const Int& q) {
  if (p == 0 && q == 0) throw ZeroVector();
  Int g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  Int pr = p / g, qr = q / g;
  if (qr < 0 || (qr == 0 && pr < 0)) {
    pr = -pr;
    qr = -qr;
  }
  DirectionClass out;
  out.p = pr;
  out.q = qr;
  bool p_odd = mpz_odd_p(pr.get_mpz_t());
  bool q_odd = mpz_odd_p(qr.get_mpz_t());
  out.verdict = (p_odd && !q_odd) ? Verdict::Strip : Verdict::Periodic;
  return out;
}

std::string csv_header() {
  return "family,n,c,circumference,height,modulus,area,holx,holy";
}

std::string csv_row(const Cylinder& cyl) {
  std::ostringstream os;
  os << (cyl.family == Family::Horizontal ? "horizontal" : "slope_one") << ',' << cyl.n << ','
     << rat_str(cyl.c) << ',' << cyl.circumference.str() << ',' << cyl.height.str() << ','
     << rat_str(cyl.modulus) << ',' << rat_str(cyl.area) << ',' << rat_str(cyl.core_holonomy.x)
     << ',' << rat_str(cyl.core_holonomy.y);
  return os.str();
}

}  // namespace latsurf::surface
