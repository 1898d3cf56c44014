#pragma once

#include <complex>

namespace dunkl {

/// Normalized Bessel function j_nu(z) = 2^nu Gamma(nu+1) J_nu(z) / z^nu.
///
/// Even and entire in z, j_nu(0) = 1. Closed forms:
///   j_{-1/2}(z) = cos z,   j_{1/2}(z) = sin(z)/z.
/// Evaluated by the ascending series for small |z| and the Hankel
/// asymptotic expansion beyond; requires nu > -1.
double bessel_j_normalized(double nu, double z);

/// Same function with the nu-dependent constants precomputed. Use this
/// when sweeping z at fixed order (kernel matrices, multipliers).
class NormalizedBesselJ {
 public:
  explicit NormalizedBesselJ(double nu);
  double operator()(double z) const;
  double order() const { return nu_; }

 private:
  double nu_;
  double norm_;        // 2^nu Gamma(nu+1)
  double phase_;       // nu*pi/2 + pi/4
  double hankel_a_[32];  // a_m(nu) = prod (4nu^2-(2j-1)^2) / (m! 8^m)
  int hankel_terms_;
  double series_cut_;

  double series(double z) const;
  double asymptotic(double z) const;
};

/// Hurwitz zeta at the half offset, zeta(s, 1/2) = (2^s - 1) zeta(s).
/// Used by the singular-endpoint quadrature corrections; s must avoid 1.
double hurwitz_zeta_half(double s);

/// Rank-one Dunkl kernel E_k(x, iy) for multiplicity k >= 0:
///   E_k(x, iy) = j_{k-1/2}(xy) + i*(xy/(2k+1))*j_{k+1/2}(xy).
/// Satisfies E_k(x,0) = 1, |E_k(x,iy)| <= 1, and e^{ixy} at k = 0.
std::complex<double> dunkl_kernel_1d(double k, double x, double y);

/// Fixed-order pair (k -/+ 1/2) for evaluating the kernel along a sweep.
class DunklKernel1D {
 public:
  explicit DunklKernel1D(double k);
  std::complex<double> operator()(double x, double y) const;
  double multiplicity() const { return k_; }

 private:
  double k_;
  NormalizedBesselJ jm_, jp_;
};

}  // namespace dunkl
