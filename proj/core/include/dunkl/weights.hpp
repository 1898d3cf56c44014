#pragma once

#include "dunkl/rearrangement.hpp"
#include "dunkl/structure.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dunkl {

/// A pair of weak-type endpoints (p1, q1), (p2, q2), p1 < p2, q1 < q2, for
/// interpolation-style admissibility checks.
struct WeakTypePair {
  double p1, q1, p2, q2;

  WeakTypePair(double p1_, double q1_, double p2_, double q2_);
  double lambda1() const { return 1.0 / q1 - 1.0 / q2; }
  double lambda2() const { return 1.0 / p1 - 1.0 / p2; }

  /// Endpoints of the Riesz potential I_alpha on L^1 -> weak L^{D/(D-alpha)}
  /// and L^r -> weak L^{s}, 1/s = 1/r - alpha/D.
  static WeakTypePair riesz(double alpha, double r, double D);
};

enum class AdmissibilityVerdict { Admissible, NotAdmissible, Undecided };

struct AdmissibilityReport {
  AdmissibilityVerdict verdict = AdmissibilityVerdict::Undecided;
  double sup1 = 0.0, sup2 = 0.0;        // +inf when the factor diverges
  bool finite1 = false, finite2 = false;
  double argmax1 = 0.0, argmax2 = 0.0;
  std::string explanation;
  std::string to_json() const;
};

enum class EvalMode { Auto, ClosedForm, Numeric };

/// Joint-sup admissibility for a pair of weak-type endpoints:
///   sup_s (int_{s^{1/l1}}^inf u*(t) t^{-q/q1} dt)^{1/q}
///         (int_0^{s^{1/l2}} [(1/v)*(t)]^{p'-1} t^{p'(1/p1-1)} dt)^{1/p'}
/// and the mirrored second condition with (p2, q2). Power-form profiles are
/// classified by exponent balance in closed form; grid profiles go through
/// log-spaced probes (Undecided when tails are unhinted).
AdmissibilityReport weak_type_conditions(const RearrangedProfile& u_star,
                                  const RearrangedProfile& inv_v_star, double p,
                                  double q, const WeakTypePair& wt,
                                  EvalMode mode = EvalMode::Auto);

/// The two Riesz-potential conditions, evaluated directly:
///   sup_s (int_s^inf u* t^{-q(1-alpha/D)} dt)^{1/q} (int_0^s [(1/v)*]^{p'-1} dt)^{1/p'}
///   sup_s (int_0^s u* t^{-q(1/r-alpha/D)} dt)^{1/q}
///         (int_s^inf [(1/v)*]^{p'-1} t^{p'(1/r-1)} dt)^{1/p'}
AdmissibilityReport riesz_conditions(const RearrangedProfile& u_star,
                                     const RearrangedProfile& inv_v_star, double p,
                                     double q, double r, double alpha,
                                     const DunklStructure& cfg,
                                     EvalMode mode = EvalMode::Auto);

/// Power-weight specialization u = |x|^delta (target), v = |x|^beta (source)
/// for I_alpha with p = q: admissible iff delta < 0, beta = delta + alpha p,
/// 0 < beta < D(p-1), with the parameter ranges that make those meaningful.
struct PowerAdmissibility {
  bool admissible = false;
  std::vector<std::pair<std::string, bool>> conditions;  // label -> satisfied
  std::string first_failure() const;
};
PowerAdmissibility power_weight_admissible(double p, double alpha, double delta,
                                           double beta, const DunklStructure& cfg);

/// Sobolev-type target-weight conditions for || f ||_{q,u} <= C || grad f ||_p:
///   sup_s s^{1-1/p}  (int_s^inf u* t^{-q(1-1/D)} dt)^{1/q}
///   sup_s s^{1/r-1/p}(int_0^s u* t^{-q(1/r-1/D)} dt)^{1/q}
AdmissibilityReport sobolev_conditions(const RearrangedProfile& u_star, double p,
                                       double q, double r,
                                       const DunklStructure& cfg,
                                       EvalMode mode = EvalMode::Auto);

/// Calderon-type pointwise bound at level t for a rearranged profile:
///   t^{-1/q1} int_0^{t^{l1/l2}} s^{1/p1 - 1} f*(s) ds
/// + t^{-1/q2} int_{t^{l1/l2}}^inf s^{1/p2 - 1} f*(s) ds.
double calderon_bound(const RearrangedProfile& f_star, double t,
                      const WeakTypePair& wt);

}  // namespace dunkl
