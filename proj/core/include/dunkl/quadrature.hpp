#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace dunkl {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;   // achieved absolute error estimate
  bool converged = true;
};

/// Adaptive Gauss-Kronrod 7-15 on a finite interval.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-12, double rel_tol = 1e-10,
                     int max_depth = 48);

/// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Quadrature weights for int_{-L}^{L} |y|^beta g(y) dy over the symmetric
/// midpoint grid y_j = -L + (j+1/2)*dx, dx = 2L/n, n even, with g smooth on
/// each side of 0 (a jump of g at 0 is allowed).
///
/// Plain midpoint weights dx*|y_j|^beta are augmented on the innermost cells
/// by singular Euler-Maclaurin (Hurwitz-zeta) corrections, one-sided degree-5
/// stencils; the rule is then exact through O(dx^{beta+7}) at the singular
/// point. Requires beta > -1. For beta an even integer the two one-sided
/// corrections cancel against any g smooth across 0, so the rule integrates
/// such g exactly like plain midpoint (the individual weights still differ).
std::vector<double> power_weighted_midpoint_weights(double beta, double half_width, int n);

/// One-sided extrapolation stencil behind the singular corrections:
/// row m maps the six samples g((i+1/2)h), i = 0..5, to the coefficient of
/// (y/h)^m in the degree-5 polynomial through them, i.e. g^(m)(0) h^m / m!
/// up to the fit error O(h^{6-m}).
const std::array<std::array<double, 6>, 6>& midpoint_singular_stencil();

/// Argmax of a unimodal function on [a, b] by golden-section search.
double golden_section_max(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-10);

}  // namespace dunkl
