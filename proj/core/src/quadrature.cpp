#include "dunkl/quadrature.hpp"

#include "dunkl/special.hpp"

#include <cmath>
#include <stdexcept>

namespace dunkl {

namespace {

// QUADPACK G7-K15 nodes/weights, positive half.
const double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
const double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
const double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct PanelEstimate {
  double k15, err;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double k15 = 0.0, g7 = 0.0, kabs = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double x = h * kKronrodNodes[i];
    double fv, av;
    if (i == 7) {
      fv = f(c);
      av = std::abs(fv);
    } else {
      const double fl = f(c - x), fr = f(c + x);
      fv = fl + fr;
      av = std::abs(fl) + std::abs(fr);
    }
    k15 += kKronrodWeights[i] * fv;
    kabs += kKronrodWeights[i] * av;
    if (i % 2 == 1) g7 += kGaussWeights[i / 2] * fv;
    else if (i == 7) g7 += kGaussWeights[3] * fv;
  }
  k15 *= h;
  g7 *= h;
  kabs *= h;
  // QUADPACK-style estimate: superlinear sharpening of |K15 - G7|,
  // normalized by int |f| so the scale of the integrand cancels
  const double d = std::abs(k15 - g7);
  double err = d;
  if (kabs > 0.0 && d > 0.0)
    err = kabs * std::min(1.0, std::pow(200.0 * d / kabs, 1.5));
  return {k15, err};
}

void adapt(const std::function<double(double)>& f, double a, double b,
           double tol, int depth, QuadResult& out) {
  const auto e = gk15(f, a, b);
  if (e.err <= tol || depth <= 0) {
    out.value += e.k15;
    out.error += e.err;
    if (e.err > tol && depth <= 0) out.converged = false;
    return;
  }
  const double m = 0.5 * (a + b);
  adapt(f, a, m, 0.5 * tol, depth - 1, out);
  adapt(f, m, b, 0.5 * tol, depth - 1, out);
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, double rel_tol, int max_depth) {
  if (a == b) return {0.0, 0.0, true};
  const auto coarse = gk15(f, a, b);
  const double tol = std::max(abs_tol, rel_tol * std::abs(coarse.k15));
  QuadResult out;
  adapt(f, a, b, tol, max_depth, out);
  return out;
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
}

const std::array<std::array<double, 6>, 6>& midpoint_singular_stencil() {
  static const auto stencil = [] {
    constexpr int S = 6;
    double V[S][S];  // V[i][m] = u_i^m, u_i = i + 1/2
    for (int i = 0; i < S; ++i) {
      const double u = i + 0.5;
      V[i][0] = 1.0;
      for (int m = 1; m < S; ++m) V[i][m] = V[i][m - 1] * u;
    }
    // invert by Gauss-Jordan
    double inv[S][S] = {};
    for (int i = 0; i < S; ++i) inv[i][i] = 1.0;
    for (int col = 0; col < S; ++col) {
      int piv = col;
      for (int r = col + 1; r < S; ++r)
        if (std::abs(V[r][col]) > std::abs(V[piv][col])) piv = r;
      for (int m = 0; m < S; ++m) {
        std::swap(V[col][m], V[piv][m]);
        std::swap(inv[col][m], inv[piv][m]);
      }
      const double d = V[col][col];
      for (int m = 0; m < S; ++m) {
        V[col][m] /= d;
        inv[col][m] /= d;
      }
      for (int r = 0; r < S; ++r) {
        if (r == col) continue;
        const double fct = V[r][col];
        for (int m = 0; m < S; ++m) {
          V[r][m] -= fct * V[col][m];
          inv[r][m] -= fct * inv[col][m];
        }
      }
    }
    std::array<std::array<double, 6>, 6> out{};
    for (int m = 0; m < S; ++m)
      for (int i = 0; i < S; ++i) out[m][i] = inv[m][i];
    return out;
  }();
  return stencil;
}

std::vector<double> power_weighted_midpoint_weights(double beta, double half_width, int n) {
  if (beta <= -1.0) throw std::invalid_argument("weight exponent must exceed -1");
  if (n < 16 || n % 2 != 0) throw std::invalid_argument("grid size must be even and >= 16");
  const double dx = 2.0 * half_width / n;
  std::vector<double> w(n);
  for (int j = 0; j < n; ++j) {
    const double y = -half_width + (j + 0.5) * dx;
    w[j] = dx * std::pow(std::abs(y), beta);
  }

  // Singular Euler-Maclaurin corrections at y = 0 (a cell boundary):
  //   int_0^L y^beta g dy = midpoint - sum_m zeta(-beta-m,1/2) g^(m)(0)/m! dx^{beta+m+1}.
  // g^(m)(0)/m! is read from a one-sided degree-5 fit through the six
  // innermost midpoints of each side, so a jump of g across 0 is harmless.
  // a_m = sum_i st[m][i] g(u_i dx)  and  g^(m)(0)/m! dx^m = a_m, so the
  // node-i correction is dx^{beta+1} * sum_m zeta(-beta-m,1/2) st[m][i].
  constexpr int S = 6;
  const auto& st = midpoint_singular_stencil();
  double c[S];
  const double scale = std::pow(dx, beta + 1.0);
  for (int i = 0; i < S; ++i) {
    double acc = 0.0;
    for (int m = 0; m < S; ++m) acc += hurwitz_zeta_half(-beta - m) * st[m][i];
    c[i] = scale * acc;
  }
  const int mid = n / 2;
  for (int i = 0; i < S; ++i) {
    w[mid + i] -= c[i];      // positive side, y = (i+1/2) dx
    w[mid - 1 - i] -= c[i];  // mirrored
  }
  return w;
}

double golden_section_max(const std::function<double(double)>& f, double a, double b,
                          double tol) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol * (1.0 + std::abs(a) + std::abs(b))) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace dunkl
