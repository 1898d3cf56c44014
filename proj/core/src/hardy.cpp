#include "dunkl/hardy.hpp"

#include "dunkl/quadrature.hpp"
#include "dunkl/structure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dunkl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSLo = 1e-6, kSHi = 1e6;
constexpr int kProbes = 512;
constexpr double kBalanceTol = 1e-12;

void check_exponents(double p, double q) {
  if (!(p > 1.0) || !(q >= p) || !std::isfinite(q))
    throw std::invalid_argument("need 1 < p <= q < infinity");
}

double probe_s(int i) { return kSLo * std::pow(kSHi / kSLo, i / (kProbes - 1.0)); }

// int_0^eps C t^e dt from the value at eps and the endpoint exponent e.
double analytic_head(const std::function<double(double)>& g, double e, double eps) {
  if (e <= -1.0) return kInf;
  return g(eps) * eps / (e + 1.0);
}

// int_T^inf C t^e dt from the value at T.
double analytic_tail(const std::function<double(double)>& g, double e, double T) {
  if (e >= -1.0) return kInf;
  return -g(T) * T / (e + 1.0);
}

double quad(const std::function<double(double)>& g, double a, double b) {
  if (b <= a) return 0.0;
  return integrate(g, a, b, 1e-14, 1e-9).value;
}

HardyReport closed_form_power(double a, double c_mu, double b, double c_th, double p,
                              double q, HardySide side) {
  const double pp = p / (p - 1.0);
  const double sg = 1.0 - pp;
  const double bs = b * sg;           // exponent of theta^{1-p'}
  const double cs = std::pow(c_th, sg);
  HardyReport rep;
  const bool mu_ok = side == HardySide::Direct ? a < -1.0 : a > -1.0;
  const bool th_ok = side == HardySide::Direct ? bs > -1.0 : bs < -1.0;
  if (!mu_ok) {
    rep.verdict = HardyVerdict::Infinite;
    rep.sup = kInf;
    rep.witness = side == HardySide::Direct ? "int_s^inf mu diverges for every s"
                                            : "int_0^s mu diverges for every s";
    return rep;
  }
  if (!th_ok) {
    rep.verdict = HardyVerdict::Infinite;
    rep.sup = kInf;
    rep.witness = side == HardySide::Direct
                      ? "int_0^s theta^{1-p'} diverges for every s"
                      : "int_s^inf theta^{1-p'} diverges for every s";
    return rep;
  }
  const double balance = (a + 1.0) / q + (bs + 1.0) / pp;
  if (std::abs(balance) > kBalanceTol) {
    rep.verdict = HardyVerdict::Infinite;
    rep.sup = kInf;
    rep.argmax_s = balance < 0.0 ? 0.0 : kInf;
    rep.witness = balance < 0.0 ? "B(s) blows up as s -> 0"
                                : "B(s) blows up as s -> infinity";
    return rep;
  }
  rep.verdict = HardyVerdict::Finite;
  rep.argmax_s = 1.0;  // B is constant in s
  const double f1 = c_mu / std::abs(a + 1.0);
  const double f2 = cs / std::abs(bs + 1.0);
  rep.sup = std::pow(f1, 1.0 / q) * std::pow(f2, 1.0 / pp);
  rep.witness = "constant in s (exponent balance)";
  return rep;
}

}  // namespace

LineWeight LineWeight::power_weight(double a, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("weight coefficient must be positive");
  LineWeight w;
  w.eval = [a, c](double t) { return c * std::pow(t, a); };
  w.power = a;
  w.coefficient = c;
  return w;
}

LineWeight LineWeight::parse(const std::string& text) {
  const auto caret = text.find("t^");
  if (caret == std::string::npos) {
    size_t used = 0;
    const double c = std::stod(text, &used);
    return power_weight(0.0, c);
  }
  const double a = std::stod(text.substr(caret + 2));
  std::string head = text.substr(0, caret);
  while (!head.empty() && (head.back() == '*' || head.back() == ' ')) head.pop_back();
  const double c = head.empty() ? 1.0 : std::stod(head);
  return power_weight(a, c);
}

HardyReport hardy_condition(const LineWeight& mu, const LineWeight& theta, double p,
                            double q, HardySide side) {
  check_exponents(p, q);
  if (!mu.eval || !theta.eval) throw std::invalid_argument("weight has no evaluator");

  if (mu.power && theta.power)
    return closed_form_power(*mu.power, mu.coefficient, *theta.power, theta.coefficient,
                             p, q, side);

  HardyReport rep;
  if (!mu.classifiable() || !theta.classifiable()) {
    rep.verdict = HardyVerdict::CannotClassify;
    rep.witness = "missing endpoint exponent hints";
    return rep;
  }

  const double pp = p / (p - 1.0);
  const double sg = 1.0 - pp;
  auto mu_f = mu.eval;
  auto th_f = theta.eval;
  auto ts = [th_f, sg](double t) { return std::pow(th_f(t), sg); };
  const double mu0 = mu.at_zero(), mui = mu.at_inf();
  const double ts0 = sg * theta.at_zero(), tsi = sg * theta.at_inf();

  // endpoint classification under the power-law model
  if (side == HardySide::Direct) {
    if (mui >= -1.0) {
      rep.verdict = HardyVerdict::Infinite;
      rep.sup = kInf;
      rep.witness = "int_s^inf mu diverges for every s";
      return rep;
    }
    if (ts0 <= -1.0) {
      rep.verdict = HardyVerdict::Infinite;
      rep.sup = kInf;
      rep.witness = "int_0^s theta^{1-p'} diverges for every s";
      return rep;
    }
    const double e_zero = (mu0 <= -1.0 ? mu0 + 1.0 : 0.0) / q + (ts0 + 1.0) / pp;
    const double e_inf = (mui + 1.0) / q + std::max(tsi + 1.0, 0.0) / pp;
    if (e_zero < -kBalanceTol || e_inf > kBalanceTol) {
      rep.verdict = HardyVerdict::Infinite;
      rep.sup = kInf;
      rep.argmax_s = e_zero < -kBalanceTol ? 0.0 : kInf;
      rep.witness = e_zero < -kBalanceTol ? "B(s) blows up as s -> 0"
                                          : "B(s) blows up as s -> infinity";
      return rep;
    }
  } else {
    if (mu0 <= -1.0) {
      rep.verdict = HardyVerdict::Infinite;
      rep.sup = kInf;
      rep.witness = "int_0^s mu diverges for every s";
      return rep;
    }
    if (tsi >= -1.0) {
      rep.verdict = HardyVerdict::Infinite;
      rep.sup = kInf;
      rep.witness = "int_s^inf theta^{1-p'} diverges for every s";
      return rep;
    }
    const double e_zero = (mu0 + 1.0) / q + std::min(ts0 + 1.0, 0.0) / pp;
    const double e_inf = (mui > -1.0 ? mui + 1.0 : 0.0) / q + (tsi + 1.0) / pp;
    if (e_zero < -kBalanceTol || e_inf > kBalanceTol) {
      rep.verdict = HardyVerdict::Infinite;
      rep.sup = kInf;
      rep.argmax_s = e_zero < -kBalanceTol ? 0.0 : kInf;
      rep.witness = e_zero < -kBalanceTol ? "B(s) blows up as s -> 0"
                                          : "B(s) blows up as s -> infinity";
      return rep;
    }
  }

  // numeric sup: cumulative factors on the probe grid, analytic pieces
  // beyond the cutoffs
  std::vector<double> seg_mu(kProbes - 1), seg_ts(kProbes - 1);
  for (int i = 0; i + 1 < kProbes; ++i) {
    seg_mu[i] = quad(mu_f, probe_s(i), probe_s(i + 1));
    seg_ts[i] = quad(ts, probe_s(i), probe_s(i + 1));
  }
  std::vector<double> f1(kProbes), f2(kProbes);
  if (side == HardySide::Direct) {
    f1[kProbes - 1] = analytic_tail(mu_f, mui, kSHi);
    for (int i = kProbes - 2; i >= 0; --i) f1[i] = f1[i + 1] + seg_mu[i];
    f2[0] = analytic_head(ts, ts0, kSLo);
    for (int i = 1; i < kProbes; ++i) f2[i] = f2[i - 1] + seg_ts[i - 1];
  } else {
    f1[0] = analytic_head(mu_f, mu0, kSLo);
    for (int i = 1; i < kProbes; ++i) f1[i] = f1[i - 1] + seg_mu[i - 1];
    f2[kProbes - 1] = analytic_tail(ts, tsi, kSHi);
    for (int i = kProbes - 2; i >= 0; --i) f2[i] = f2[i + 1] + seg_ts[i];
  }
  int best = 0;
  double best_b = -1.0;
  for (int i = 0; i < kProbes; ++i) {
    const double b = std::pow(f1[i], 1.0 / q) * std::pow(f2[i], 1.0 / pp);
    if (b > best_b) {
      best_b = b;
      best = i;
    }
  }
  auto b_at = [&](double s) {
    int i = static_cast<int>(std::floor((kProbes - 1.0) * std::log(s / kSLo) /
                                        std::log(kSHi / kSLo)));
    i = std::clamp(i, 0, kProbes - 1);
    const double si = probe_s(i);
    double v1, v2;
    if (side == HardySide::Direct) {
      v1 = f1[i] - quad(mu_f, si, s);
      v2 = f2[i] + quad(ts, si, s);
    } else {
      v1 = f1[i] + quad(mu_f, si, s);
      v2 = f2[i] - quad(ts, si, s);
    }
    return std::pow(std::max(v1, 0.0), 1.0 / q) * std::pow(std::max(v2, 0.0), 1.0 / pp);
  };
  const double lo = probe_s(std::max(best - 1, 0));
  const double hi = probe_s(std::min(best + 1, kProbes - 1));
  const double s_star = golden_section_max(b_at, lo, hi, 1e-8);
  const double b_star = b_at(s_star);
  rep.verdict = HardyVerdict::Finite;
  rep.sup = std::max(b_star, best_b);
  rep.argmax_s = b_star >= best_b ? s_star : probe_s(best);
  rep.witness = "numeric sup over log-spaced probes";
  return rep;
}

HardyVerification verify_hardy(const StepFunction& f, const LineWeight& mu,
                               const LineWeight& theta, double p, double q,
                               HardySide side) {
  check_exponents(p, q);
  if (f.knots.size() < 2 || f.values.size() + 1 != f.knots.size())
    throw std::invalid_argument("step function needs m+1 knots and m values");
  if (f.knots.front() != 0.0)
    throw std::invalid_argument("step function must start at 0");
  for (size_t i = 1; i < f.knots.size(); ++i)
    if (f.knots[i] <= f.knots[i - 1])
      throw std::invalid_argument("step function knots must increase");
  for (double v : f.values)
    if (v < 0.0) throw std::invalid_argument("step function must be nonnegative");

  const size_t m = f.values.size();
  const double T = f.knots.back();

  // cumulative integral of f at the knots
  std::vector<double> cum(m + 1, 0.0);
  for (size_t i = 0; i < m; ++i)
    cum[i + 1] = cum[i] + f.values[i] * (f.knots[i + 1] - f.knots[i]);
  const double total = cum[m];

  auto inner = [&](double t) {  // Hf(t): running integral toward the far end
    if (t >= T) return side == HardySide::Direct ? total : 0.0;
    const auto it = std::upper_bound(f.knots.begin(), f.knots.end(), t);
    const size_t i = static_cast<size_t>(it - f.knots.begin()) - 1;
    const double upto = cum[i] + f.values[i] * (t - f.knots[i]);
    return side == HardySide::Direct ? upto : total - upto;
  };

  HardyVerification out;
  out.condition = hardy_condition(mu, theta, p, q, side);

  auto mu_f = mu.eval;
  auto lhs_integrand = [&](double t) { return std::pow(inner(t), q) * mu_f(t); };

  double lhs_q = 0.0;
  const double eps = 1e-9 * T;
  if (side == HardySide::Direct) {
    for (size_t i = 0; i < m; ++i)
      lhs_q += quad(lhs_integrand, std::max(f.knots[i], eps), f.knots[i + 1]);
    // beyond T the inner integral is constant
    lhs_q += std::pow(total, q) * quad(mu_f, T, kSHi);
    if (mu.power || mu.exponent_inf)
      lhs_q += std::pow(total, q) * analytic_tail(mu_f, mu.at_inf(), kSHi);
  } else {
    for (size_t i = 0; i < m; ++i)
      lhs_q += quad(lhs_integrand, std::max(f.knots[i], eps), f.knots[i + 1]);
    if (mu.power || mu.exponent_zero)
      lhs_q += std::pow(total, q) * analytic_head(mu_f, mu.at_zero(), eps);
  }
  out.lhs = std::pow(lhs_q, 1.0 / q);

  auto th_f = theta.eval;
  double rhs_p = 0.0;
  for (size_t i = 0; i < m; ++i)
    if (f.values[i] > 0.0)
      rhs_p += std::pow(f.values[i], p) *
               quad(th_f, std::max(f.knots[i], eps), f.knots[i + 1]);
  out.rhs = std::pow(rhs_p, 1.0 / p);
  out.ratio = out.rhs > 0.0 ? out.lhs / out.rhs : 0.0;
  return out;
}

}  // namespace dunkl
