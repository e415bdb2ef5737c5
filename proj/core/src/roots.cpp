#include "qlc/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "qlc/error.hpp"

namespace qlc {

namespace {

using cld = std::complex<long double>;

std::vector<cld> approx_coeffs(const UPoly& f) {
  std::vector<cld> c;
  for (const auto& s : f.coeffs()) {
    c.emplace_back(static_cast<long double>(s.re().get_d()), static_cast<long double>(s.im().get_d()));
  }
  return c;
}

// Aberth-Ehrlich simultaneous iteration; c is low-to-high and monic.
std::vector<cld> aberth(const std::vector<cld>& c) {
  const std::size_t n = c.size() - 1;
  long double bound = 0;
  for (std::size_t k = 0; k < n; ++k) bound = std::max(bound, std::abs(c[k]));
  bound += 1;
  std::vector<cld> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    long double ang = 2 * M_PIl * static_cast<long double>(k) / static_cast<long double>(n) + 0.4L;
    z[k] = std::polar(bound * 0.5L + 0.1L, ang);
  }
  auto eval = [&](cld x, cld& d) {
    cld p = c[n];
    d = 0;
    for (std::size_t k = n; k-- > 0;) {
      d = d * x + p;
      p = p * x + c[k];
    }
    return p;
  };
  for (int it = 0; it < 800; ++it) {
    long double worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      cld d;
      cld p = eval(z[k], d);
      if (p == cld(0)) continue;
      cld ratio = p / d;
      cld s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) s += 1.0L / (z[k] - z[j]);
      cld w = ratio / (1.0L - ratio * s);
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / std::max(1.0L, std::abs(z[k])));
    }
    if (worst < 1e-17L) break;
  }
  return z;
}

}  // namespace

mpq_class rational_approx(long double x, long max_den) {
  // continued fraction convergents
  bool neg = x < 0;
  long double y = std::fabs(x);
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int k = 0; k < 64; ++k) {
    long double a = std::floor(y);
    if (a > 1e18L) break;
    mpz_class ai(static_cast<unsigned long>(a));
    mpz_class p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    long double frac = y - a;
    if (frac < 1e-15L) break;
    y = 1.0L / frac;
  }
  if (q1 == 0) return mpq_class(0);
  mpq_class r(p1, q1);
  r.canonicalize();
  return neg ? mpq_class(-r) : r;
}

std::vector<Scalar> gaussian_rational_roots(const UPoly& f) {
  if (f.is_zero()) throw_invalid("roots.zero", "roots of the zero polynomial");
  std::vector<Scalar> out;
  UPoly g = squarefree_part(f);
  if (g.degree() < 1) return out;
  if (g.degree() == 1) {
    out.push_back(-g.coeff(0) / g.coeff(1));
    return out;
  }
  auto z = aberth(approx_coeffs(g.monic()));
  for (const auto& r : z) {
    for (long den : {1000L, 1000000L, 1000000000L}) {
      Scalar cand(rational_approx(r.real(), den), rational_approx(r.imag(), den));
      if (g(cand).is_zero()) {
        if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool splits_over_gaussian(const UPoly& f) {
  return static_cast<int>(gaussian_rational_roots(f).size()) == squarefree_part(f).degree();
}

}  // namespace qlc
