#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dunkl {

/// A positive weight on the half line (0, inf). Exact powers c t^a carry
/// their exponent so endpoint behavior can be classified analytically;
/// general callables must supply endpoint power hints for the same purpose.
struct LineWeight {
  std::function<double(double)> eval;
  std::optional<double> power;  // exact power: eval(t) = coefficient * t^power
  double coefficient = 1.0;
  std::optional<double> exponent_zero, exponent_inf;  // growth hints if not exact

  static LineWeight power_weight(double a, double c = 1.0);
  /// Parse "t^a", "c*t^a", "c t^a" or a bare constant "c".
  static LineWeight parse(const std::string& text);

  double operator()(double t) const { return eval(t); }
  double at_zero() const { return power ? *power : exponent_zero.value(); }
  double at_inf() const { return power ? *power : exponent_inf.value(); }
  bool classifiable() const {
    return power || (exponent_zero && exponent_inf);
  }
};

enum class HardySide {
  Direct,  // B(s) = (int_s^inf mu)^{1/q} (int_0^s theta^{1-p'})^{1/p'}
  Dual     // B(s) = (int_0^s mu)^{1/q} (int_s^inf theta^{1-p'})^{1/p'}
};

enum class HardyVerdict { Finite, Infinite, CannotClassify };

struct HardyReport {
  HardyVerdict verdict = HardyVerdict::CannotClassify;
  double sup = 0.0;       // finite value, or +inf when Infinite
  double argmax_s = 0.0;  // maximizer (0 or +inf encode boundary blowup)
  std::string witness;    // which factor/endpoint decided the verdict
};

/// sup_{s>0} B(s) for 1 < p <= q < infinity. Exact power weights are
/// classified in closed form; otherwise 512 log-spaced probes plus
/// golden-section refinement, with endpoint behavior from the hints.
HardyReport hardy_condition(const LineWeight& mu, const LineWeight& theta, double p,
                            double q, HardySide side);

inline HardyReport hardy_condition_direct(const LineWeight& mu, const LineWeight& theta,
                                          double p, double q) {
  return hardy_condition(mu, theta, p, q, HardySide::Direct);
}
inline HardyReport hardy_condition_dual(const LineWeight& mu, const LineWeight& theta,
                                        double p, double q) {
  return hardy_condition(mu, theta, p, q, HardySide::Dual);
}

/// Nonnegative step function on (0, T): value values[i] on
/// (knots[i], knots[i+1]), with knots[0] = 0.
struct StepFunction {
  std::vector<double> knots;   // size m+1, ascending, knots[0] == 0
  std::vector<double> values;  // size m
};

struct HardyVerification {
  double lhs = 0.0;    // (int (Hf)^q mu)^{1/q}, Hf the (dual) averaging integral
  double rhs = 0.0;    // (int f^p theta)^{1/p}
  double ratio = 0.0;  // lhs / rhs (0 when f == 0)
  HardyReport condition;
};

/// Evaluate both sides of the weighted Hardy inequality for a concrete step
/// function f, alongside the corresponding condition check.
HardyVerification verify_hardy(const StepFunction& f, const LineWeight& mu,
                               const LineWeight& theta, double p, double q,
                               HardySide side);

}  // namespace dunkl
