#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dunkl {

/// Raised when an improper integral is detected (or classified) divergent.
struct DivergentIntegral : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a quadrature cannot reach its target tolerance.
struct QuadratureFailure : std::runtime_error {
  QuadratureFailure(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_tolerance(achieved) {}
  double achieved_tolerance;
};

enum class ReflectionModel { Z2Power, GeneralRoots };

/// Reflection-group data for the weighted measure dnu_k = w_k(x) dx,
/// w_k(x) = prod_{xi in R+} |<xi,x>|^{2 k(xi)}.
///
/// Z2Power: one coordinate reflection per axis, multiplicities k_1..k_d.
/// GeneralRoots: explicit positive-root list with per-root multiplicities.
/// Derived constants (gamma, Mehta c_k, sphere d_k) are fixed at
/// construction; instances are immutable and safe to share across threads.
class DunklStructure {
 public:
  static DunklStructure z2_power(std::vector<double> multiplicities);
  static DunklStructure general_roots(int dimension,
                                      std::vector<std::vector<double>> roots,
                                      std::vector<double> multiplicities);
  static DunklStructure rank_one(double k) { return z2_power({k}); }

  static DunklStructure from_json(const std::string& text);
  static DunklStructure from_json_file(const std::string& path);
  std::string to_json() const;

  int dimension() const { return dimension_; }
  ReflectionModel model() const { return model_; }
  const std::vector<double>& multiplicities() const { return multiplicities_; }
  const std::vector<std::vector<double>>& roots() const { return roots_; }

  /// gamma = sum of multiplicities over positive roots.
  double gamma() const { return gamma_; }
  /// Homogeneity degree of the measure, 2*gamma + d.
  double homogeneity() const { return 2.0 * gamma_ + dimension_; }
  /// Mehta-type constant c_k = (int e^{-|x|^2/2} w_k dx)^{-1}.
  double mehta_constant() const { return mehta_; }
  /// d_k = c_k^{-1} / (2^{gamma+d/2-1} Gamma(gamma+d/2)), the w_k-mass of
  /// the unit sphere.
  double sphere_constant() const { return sphere_; }

  /// w_k(x); x.size() must equal dimension().
  double weight_eval(const std::vector<double>& x) const;
  double weight_eval(double x) const;  // rank-one shorthand

  /// nu_k(B(0, r)) = d_k r^{2gamma+d} / (2gamma+d).
  double ball_measure(double r) const;

 private:
  DunklStructure() = default;
  void finalize();

  int dimension_ = 1;
  ReflectionModel model_ = ReflectionModel::Z2Power;
  std::vector<double> multiplicities_;
  std::vector<std::vector<double>> roots_;
  double gamma_ = 0.0, mehta_ = 0.0, sphere_ = 0.0;
};

/// Radial profile F with optional integrability hints: F(r) ~ C r^p near
/// the hinted endpoint. `support` truncates the domain at a finite radius.
struct RadialProfile {
  std::function<double(double)> eval;
  std::optional<double> power_at_zero;
  std::optional<double> power_at_inf;
  std::optional<double> support;
};

/// int_{R^d} F(|x|) dnu_k = d_k int_0^inf F(r) r^{2gamma+d-1} dr, adaptive
/// quadrature on the core plus hint-driven analytic power tails. Throws
/// DivergentIntegral when a tail diverges (by hint or by runaway blocks).
double radial_integral(const DunklStructure& cfg, const RadialProfile& F,
                       double rel_tol = 1e-10);

}  // namespace dunkl
