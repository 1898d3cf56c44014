#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace dunkl {

/// Uniform symmetric midpoint grid: x_j = -L + (j+1/2)*dx, dx = 2L/n,
/// n even. 0 is always a cell boundary, never a node, and the grid is
/// symmetric: x_{n-1-j} = -x_j.
struct Grid1D {
  double half_width = 0.0;
  int n = 0;

  double dx() const { return 2.0 * half_width / n; }
  double node(int j) const { return -half_width + (j + 0.5) * dx(); }
  bool operator==(const Grid1D&) const = default;
};

/// Complex samples on a Grid1D, tied to a rank-one multiplicity k >= 0.
struct GridFunction1D {
  Grid1D grid;
  double k = 0.0;
  std::vector<std::complex<double>> samples;

  GridFunction1D() = default;
  GridFunction1D(Grid1D g, double multiplicity);
  template <typename F>
  static GridFunction1D sample(Grid1D g, double multiplicity, F&& f) {
    GridFunction1D out(g, multiplicity);
    for (int j = 0; j < g.n; ++j) out.samples[j] = f(g.node(j));
    return out;
  }

  int size() const { return grid.n; }
  double max_abs() const;
};

/// Samples of a Dunkl transform on the dual midpoint grid
/// xi_j = -pi/dx + (j+1/2)*dxi, dxi = 2pi/(n*dx).
struct SpectralFunction1D {
  Grid1D grid;  // dual grid
  double k = 0.0;
  std::vector<std::complex<double>> samples;
  bool boundary_decay_ok = true;
};

Grid1D dual_grid(const Grid1D& g);

/// Exact nu_k-measure of grid cell j (d = 1), int_cell |x|^{2k} dx.
double cell_measure(const Grid1D& g, double k, int j);

/// || f ||_{p,k,u} with u = |x|^delta, computed by singularity-corrected
/// midpoint quadrature. When `tail_exponent` sigma is given, |f| is assumed
/// ~ C |x|^sigma beyond the grid; C is fitted on the outer band of each side
/// and the analytic tail is added. Throws DivergentIntegral if that tail
/// diverges.
double weighted_lp_norm(const GridFunction1D& f, double p, double delta = 0.0,
                        std::optional<double> tail_exponent = std::nullopt);

/// nu_k({ |f| > s }) on the grid, plus the analytic tail contribution when
/// a decay exponent is supplied (and the level set leaks past the grid).
double measure_above(const GridFunction1D& f, double s,
                     std::optional<double> tail_exponent = std::nullopt);

/// CSV I/O, columns "x,re,im" (or "xi,re,im" for spectra).
void write_csv(const std::string& path, const GridFunction1D& f);
void write_csv(const std::string& path, const SpectralFunction1D& f);
GridFunction1D read_csv(const std::string& path, double k);

}  // namespace dunkl
