#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace levicav::numerics {

/// Golden-section minimum of a unimodal function on [a, b].
/// Returns {argmin, value}. Tolerance is on the bracket width.
std::pair<double, double> golden_section_min(
    const std::function<double(double)>& f, double a, double b,
    double xtol_rel = 1e-12, int max_iter = 200);

/// Bracketed root of f on [a, b] (f(a), f(b) of opposite sign): bisection
/// refined by secant steps. Throws std::runtime_error if the bracket does
/// not contain a sign change.
double bracketed_root(const std::function<double(double)>& f, double a,
                      double b, double xtol, int max_iter = 200);

/// Adaptive Simpson integral of f over [a, b] with relative tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double rtol = 1e-9, int max_depth = 40);

/// Same, but seeded with explicit panel break points (useful when the
/// integrand has a known narrow feature).
double adaptive_simpson_panels(const std::function<double(double)>& f,
                               const std::vector<double>& breaks,
                               double rtol = 1e-9, int max_depth = 40);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n);

/// Logarithmically spaced grid, inclusive of both ends.
std::vector<double> log_grid(double lo, double hi, int n);
/// Linearly spaced grid, inclusive of both ends.
std::vector<double> lin_grid(double lo, double hi, int n);

}  // namespace levicav::numerics
