#include "afes/root_finding.hpp"

#include <algorithm>
#include <cmath>

namespace afes {

double find_zero(const std::function<double(double)>& f, double a, double b,
                 double tol_abs, int max_iter) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0))
    throw BracketError("find_zero: no sign change over bracket");

  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 0; iter < max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a; fc = fa;
      d = b - a; e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double m = 0.5 * (c - b);
    const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * tol_abs;
    if (std::abs(m) <= tol || fb == 0.0) return b;

    if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
      d = m; e = m;
    } else {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qq = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q; else p = -p;
      if (2.0 * p < 3.0 * m * q - std::abs(tol * q) && p < std::abs(0.5 * e * q)) {
        e = d; d = p / q;
      } else {
        d = m; e = m;
      }
    }
    a = b; fa = fb;
    if (std::abs(d) > tol) b += d;
    else b += (m > 0.0 ? tol : -tol);
    fb = f(b);
  }
  return b;
}

double find_zero_expand(const std::function<double(double)>& f, double a, double b,
                        const std::string& name, double tol_abs) {
  double lo = a, hi = b;
  for (int i = 0; i < 64; ++i) {
    double flo, fhi;
    try {
      flo = f(lo);
      fhi = f(hi);
    } catch (...) {
      throw BracketError("root bracket for " + name + ": function not evaluable");
    }
    if (std::isfinite(flo) && std::isfinite(fhi) && (flo > 0.0) != (fhi > 0.0))
      return find_zero(f, lo, hi, tol_abs);
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo) * 2.0;
    lo = mid - half;
    hi = mid + half;
  }
  throw BracketError("no sign change found for equation: " + name);
}

}  // namespace afes
