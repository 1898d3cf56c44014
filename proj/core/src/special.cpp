#include "dunkl/special.hpp"

#include <cmath>
#include <stdexcept>

namespace dunkl {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Ascending series j_nu(z) = sum_m (-1)^m (z^2/4)^m / (m! (nu+1)_m).
double series_impl(double nu, double z) {
  const double q = 0.25 * z * z;
  double term = 1.0, sum = 1.0;
  for (int m = 1; m < 60; ++m) {
    term *= -q / (m * (nu + m));
    sum += term;
    if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-30)) break;
  }
  return sum;
}

}  // namespace

NormalizedBesselJ::NormalizedBesselJ(double nu) : nu_(nu) {
  if (nu <= -1.0) throw std::invalid_argument("bessel order must exceed -1");
  norm_ = std::pow(2.0, nu) * std::tgamma(nu + 1.0);
  phase_ = nu * kPi / 2.0 + kPi / 4.0;
  // a_0 = 1, a_m = a_{m-1} * (4nu^2 - (2m-1)^2) / (8m)
  const double mu = 4.0 * nu * nu;
  hankel_a_[0] = 1.0;
  hankel_terms_ = 1;
  for (int m = 1; m < 32; ++m) {
    const double f = 2.0 * m - 1.0;
    hankel_a_[m] = hankel_a_[m - 1] * (mu - f * f) / (8.0 * m);
    hankel_terms_ = m + 1;
    if (hankel_a_[m] == 0.0) break;  // half-integer order: expansion terminates
  }
  // The series is cancellation-limited near the cut (absolute error about
  // eps * e^z / sqrt(2 pi z)); the optimally truncated asymptotic side has
  // remainder about e^{-2z} and needs z^2 >> nu^2. At 14 both sit near
  // 1e-12 absolute for the orders in use.
  series_cut_ = std::max(14.0, 1.5 * nu * nu);
}

double NormalizedBesselJ::series(double z) const { return series_impl(nu_, z); }

double NormalizedBesselJ::asymptotic(double z) const {
  // J_nu(z) ~ sqrt(2/(pi z)) [P cos w - Q sin w], w = z - nu pi/2 - pi/4
  double p = 0.0, q = 0.0, zm = 1.0;
  double prev = 1e300;
  for (int m = 0; m < hankel_terms_; ++m) {
    const double t = hankel_a_[m] * zm;
    if (std::abs(t) > prev) break;  // divergent tail reached
    prev = std::abs(t);
    const int r = m % 4;
    if (r == 0) p += t;
    else if (r == 1) q += t;
    else if (r == 2) p -= t;
    else q -= t;
    zm /= z;
  }
  const double w = z - phase_;
  const double J = std::sqrt(2.0 / (kPi * z)) * (p * std::cos(w) - q * std::sin(w));
  return norm_ * J * std::pow(z, -nu_);
}

double NormalizedBesselJ::operator()(double z) const {
  z = std::abs(z);
  if (z < 1e-150) return 1.0;
  if (z < 14.0) return series(z);
  if (z >= series_cut_) return asymptotic(z);
  // Large order, moderate argument: defer to the library implementation.
  const double J = std::cyl_bessel_j(nu_, z);
  return norm_ * J * std::pow(z, -nu_);
}

double bessel_j_normalized(double nu, double z) {
  return NormalizedBesselJ(nu)(z);
}

double hurwitz_zeta_half(double s) {
  if (s == 1.0) throw std::invalid_argument("hurwitz_zeta_half: pole at s = 1");
  return (std::pow(2.0, s) - 1.0) * std::riemann_zeta(s);
}

DunklKernel1D::DunklKernel1D(double k)
    : k_(k), jm_(k - 0.5), jp_(k + 0.5) {
  if (k < 0.0) throw std::invalid_argument("multiplicity must be nonnegative");
}

std::complex<double> DunklKernel1D::operator()(double x, double y) const {
  const double z = x * y;
  return {jm_(z), z / (2.0 * k_ + 1.0) * jp_(z)};
}

std::complex<double> dunkl_kernel_1d(double k, double x, double y) {
  return DunklKernel1D(k)(x, y);
}

}  // namespace dunkl
