#pragma once

#include "dunkl/grid.hpp"
#include "dunkl/structure.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dunkl {

/// A nonnegative weight on R^d, radial by construction.
struct WeightSpec {
  enum class Kind { Power, RadialCallable, One };
  Kind kind = Kind::One;
  double exponent = 0.0;   // Power: |x|^exponent
  RadialProfile profile;   // RadialCallable

  static WeightSpec one() { return {}; }
  static WeightSpec power(double a) { return {Kind::Power, a, {}}; }
  static WeightSpec callable(RadialProfile p) {
    return {Kind::RadialCallable, 0.0, std::move(p)};
  }
};

/// Non-increasing function on (0, inf): the value class of decreasing
/// rearrangements. Grid profiles are right-continuous step functions.
struct RearrangedProfile {
  enum class Kind { PowerForm, IndicatorForm, Grid };
  Kind kind = Kind::PowerForm;
  double coefficient = 1.0, exponent = 0.0;  // PowerForm: C t^e, e <= 0
  double length = 1.0, height = 1.0;         // IndicatorForm: h chi_(0,R)
  std::vector<double> knots, values;         // Grid: ascending knots
  // power behavior beyond the tabulated range, for sup searches
  std::optional<double> tail_exponent_zero, tail_exponent_inf;

  static RearrangedProfile power_form(double C, double e);
  static RearrangedProfile indicator_form(double R, double h = 1.0);
  static RearrangedProfile grid_form(std::vector<double> knots, std::vector<double> values);
  static RearrangedProfile constant(double c) { return power_form(c, 0.0); }

  double operator()(double t) const;
  std::string to_json() const;
};

/// int_lo^hi profile(t) t^w dt; hi may be +inf. Closed forms for the
/// analytic kinds, step sums plus tail hints for grids. Returns +inf when
/// the integral diverges; throws only on invalid ranges.
double profile_integral(const RearrangedProfile& prof, double w, double lo, double hi);

/// Representation of |f| for rearrangement purposes.
struct MeasurableSample {
  enum class Kind { RadialIndicator, TruncatedPower, Power, Grid };
  Kind kind = Kind::RadialIndicator;
  double radius = 1.0;    // RadialIndicator / TruncatedPower support
  double exponent = 0.0;  // TruncatedPower / Power: |x|^exponent
  double height = 1.0;    // RadialIndicator level
  GridFunction1D grid;    // Grid (d = 1 numeric path)

  static MeasurableSample indicator(double r, double h = 1.0);
  static MeasurableSample power(double e);  // |x|^e, e < 0
  static MeasurableSample truncated_power(double e, double r);
  static MeasurableSample from_grid(GridFunction1D f);
};

/// D_f(s) = nu_k({ |f| > s }); +inf marker for non-integrable level sets.
double distribution_function(const MeasurableSample& f, const DunklStructure& cfg,
                             double s);

/// f*(t) = inf{ s >= 0 : D_f(s) <= t }, right-continuous. Closed forms for
/// power weights and indicators; threshold-grid inversion otherwise.
RearrangedProfile decreasing_rearrangement(const MeasurableSample& f,
                                           const DunklStructure& cfg);

/// (1/v)* for a positive weight v.
RearrangedProfile reciprocal_rearrangement(const WeightSpec& v,
                                           const DunklStructure& cfg);

enum class NormRoute { Direct, Rearranged };

/// || f ||_p, either int |f|^p dnu_k directly or int (f*)^p dt.
double lp_norm(const MeasurableSample& f, double p, const DunklStructure& cfg,
               NormRoute via);

/// Hardy-Littlewood pairing triple:
///   lhs_lower  = int f*(t) / (1/w)*(t) dt
///   lhs_direct = int f w dnu_k
///   rhs_upper  = int f*(t) w*(t) dt
/// with lhs_lower <= lhs_direct <= rhs_upper.
struct PairingResult {
  double lhs_lower = 0.0, lhs_direct = 0.0, rhs_upper = 0.0;
};
PairingResult hl_pairing(const MeasurableSample& f, const WeightSpec& w,
                         const DunklStructure& cfg);

}  // namespace dunkl
