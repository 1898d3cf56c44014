#pragma once

#include "dunkl/grid.hpp"
#include "dunkl/special.hpp"

#include <memory>
#include <vector>

namespace dunkl {

struct MaximalResult {
  double value = 0.0;
  double clamped_mass_fraction = 0.0;  // worst clamped fraction over radii
  bool clamp_warning = false;          // clamped mass exceeded 1% somewhere
};

/// Rank-one (d = 1, Z_2) numeric engine for the Dunkl transform and every
/// operator built on it. The kernel matrix K_ij = E_k(-i xi_i, y_j) and the
/// quadrature weights are precomputed at construction; after that all
/// operations are matrix-vector products and are const / thread-safe.
///
/// Quadrature: plain midpoint weights dx |y|^{2k} in the matvec, plus a
/// singular Euler-Maclaurin correction at y = 0 applied analytically. The
/// correction needs the Taylor coefficients of the integrand f(y) E(y, .)
/// at the singular point; fitting the product numerically is hopeless once
/// xi dx = O(1), so the smooth data factor is fitted with a one-sided
/// stencil and the kernel's coefficients (powers of xi with known Bessel
/// ratios) enter exactly. The residual error is then xi-independent.
///
/// Conventions: F_k f(xi) = c_k int f(y) E_k(-i xi, y) |y|^{2k} dy with
/// c_k^{-1} = 2^{k+1/2} Gamma(k+1/2); the inverse carries the same c_k with
/// the conjugate kernel. The Gaussian e^{-x^2/2} is a fixed point and F_k
/// is unitary on L^2(nu_k).
class DunklEngine1D {
 public:
  DunklEngine1D(Grid1D grid, double k);

  const Grid1D& grid() const { return grid_; }
  const Grid1D& dual() const { return dual_; }
  double multiplicity() const { return k_; }
  double mehta_constant() const { return ck_; }

  SpectralFunction1D transform(const GridFunction1D& f) const;
  GridFunction1D inverse(const SpectralFunction1D& F) const;

  /// T f = f' + k (f(x) - f(-x)) / x, f' by 4th-order finite differences.
  GridFunction1D derivative(const GridFunction1D& f) const;
  /// |grad_k f| = |T f| in d = 1.
  GridFunction1D gradient_norm(const GridFunction1D& f) const;

  /// tau_x f = F^{-1}( E_k(ix, .) F_k f ).
  GridFunction1D translate(const GridFunction1D& f, double x) const;

  /// f *_k g, defined spectrally: F_k(f *_k g) = F_k f . F_k g.
  GridFunction1D convolve(const GridFunction1D& f, const GridFunction1D& g) const;

  /// I_alpha f = F^{-1}( |xi|^{-alpha} F_k f ), 0 < alpha < 2k+1.
  GridFunction1D riesz_potential(const GridFunction1D& f, double alpha) const;

  /// R f = F^{-1}( -i sign(xi) F_k f ).
  GridFunction1D riesz_transform(const GridFunction1D& f) const;

  /// M_{k,alpha} f(x): sup over a log grid of radii of the normalized
  /// averages against translated ball indicators (clamped at 0).
  MaximalResult fractional_maximal(const GridFunction1D& f, double alpha, double x,
                                   int n_radii = 128) const;
  /// M_{k,alpha} f at every grid node.
  std::vector<MaximalResult> fractional_maximal_all(const GridFunction1D& f,
                                                    double alpha,
                                                    int n_radii = 128) const;

  /// Behaviour of a data factor across its grid's singular point, which
  /// decides how the singular correction fits it: independent one-sided
  /// fits, a single centered fit, a centered fit after stripping sgn, or
  /// classification from the data itself.
  enum class DataShape { kOneSided, kSmooth, kSign, kAuto };

 private:
  /// Weighted sum over xi with the conjugate kernel: xi_weights are plain
  /// midpoint weights for |xi|^beta and beta drives the singular correction.
  GridFunction1D apply_inverse(const std::vector<std::complex<double>>& spectral,
                               const std::vector<double>& xi_weights,
                               double beta) const;
  SpectralFunction1D indicator_spectrum(double r) const;

  Grid1D grid_, dual_;
  double k_, ck_;
  DunklKernel1D kernel_;
  std::vector<double> wy_, wxi_;                // plain dx |.|^{2k} weights
  std::vector<std::complex<double>> kmat_;      // K[i*n+j] = E_k(-i xi_i, y_j)
  double gm_[14], gp_[14];                      // Taylor ratios of j_{k-/+1/2}
};

}  // namespace dunkl
