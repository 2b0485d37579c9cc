#include "levicav/numerics.hpp"

#include <cmath>
#include <stdexcept>

#include "levicav/constants.hpp"

namespace levicav::numerics {

std::pair<double, double> golden_section_min(
    const std::function<double(double)>& f, double a, double b,
    double xtol_rel, int max_iter) {
  constexpr double invphi = 0.6180339887498949;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < max_iter && std::abs(b - a) >
                                      xtol_rel * (std::abs(a) + std::abs(b));
       ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

double bracketed_root(const std::function<double(double)>& f, double a,
                      double b, double xtol, int max_iter) {
  double fa = f(a), fb = f(b);
  if (fa == 0) return a;
  if (fb == 0) return b;
  if (fa * fb > 0)
    throw std::runtime_error("bracketed_root: no sign change in bracket");
  for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
    // secant proposal, fall back to bisection when it leaves the bracket
    double x = b - fb * (b - a) / (fb - fa);
    double mid = 0.5 * (a + b);
    if (!(x > a && x < b)) x = mid;
    // keep the bracket shrinking geometrically
    if (std::abs(x - mid) > 0.45 * (b - a)) x = mid;
    double fx = f(x);
    if (fx == 0) return x;
    if (fa * fx < 0) {
      b = x;
      fb = fx;
    } else {
      a = x;
      fa = fx;
    }
  }
  return 0.5 * (a + b);
}

namespace {

double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double fa,
             double b, double fb, double m, double fm, double whole,
             double tol, int depth) {
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = simpson(a, fa, m, fm, flm);
  double right = simpson(m, fm, b, fb, frm);
  double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adapt(f, a, fa, m, fm, lm, flm, left, tol / 2.0, depth - 1) +
         adapt(f, m, fm, b, fb, rm, frm, right, tol / 2.0, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rtol, int max_depth) {
  if (a == b) return 0.0;
  double m = 0.5 * (a + b);
  double fa = f(a), fb = f(b), fm = f(m);
  double whole = simpson(a, fa, b, fb, fm);
  double scale = std::abs(whole);
  if (scale == 0) scale = 1.0;
  return adapt(f, a, fa, b, fb, m, fm, whole, rtol * scale, max_depth);
}

double adaptive_simpson_panels(const std::function<double(double)>& f,
                               const std::vector<double>& breaks, double rtol,
                               int max_depth) {
  double total = 0.0;
  for (size_t i = 0; i + 1 < breaks.size(); ++i)
    total += adaptive_simpson(f, breaks[i], breaks[i + 1], rtol, max_depth);
  return total;
}

GaussLegendre gauss_legendre(int n) {
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Newton iteration from the Chebyshev-like initial guess
    double x = std::cos(constants::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    gl.nodes[i] = -x;
    gl.nodes[n - 1 - i] = x;
    double w = 2.0 / ((1.0 - x * x) * pp * pp);
    gl.weights[i] = w;
    gl.weights[n - 1 - i] = w;
  }
  return gl;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (n < 2 || !(lo > 0) || !(hi > lo))
    throw std::invalid_argument("log_grid: need hi > lo > 0 and n >= 2");
  std::vector<double> g(n);
  double l0 = std::log(lo), l1 = std::log(hi);
  for (int i = 0; i < n; ++i)
    g[i] = std::exp(l0 + (l1 - l0) * i / (n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::vector<double> lin_grid(double lo, double hi, int n) {
  if (n < 2) throw std::invalid_argument("lin_grid: n >= 2");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return g;
}

}  // namespace levicav::numerics
