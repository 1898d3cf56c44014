#include "dunkl/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace dunkl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// int_lo^hi C t^e dt on [0, inf]; +inf marker on divergence.
double power_integral(double C, double e, double lo, double hi) {
  if (lo < 0.0 || hi < lo) throw std::invalid_argument("bad power integral range");
  if (C == 0.0 || hi == lo) return 0.0;
  if (hi == kInf && e >= -1.0) return kInf;
  if (lo == 0.0 && e <= -1.0) return kInf;
  if (e == -1.0) return C * std::log(hi / lo);
  const double hi_part = (hi == kInf) ? 0.0 : std::pow(hi, e + 1.0);
  const double lo_part = (lo == 0.0) ? 0.0 : std::pow(lo, e + 1.0);
  return C * (hi_part - lo_part) / (e + 1.0);
}

// int_cell |x|^q dx for the cell [a, a+dx] of a symmetric midpoint grid
// (never straddles 0).
double cell_moment(const Grid1D& g, double q, int j) {
  const double a = g.node(j) - 0.5 * g.dx();
  const double b = a + g.dx();
  const double e = q + 1.0;
  if (e <= 0.0) return kInf;
  return std::abs(std::pow(std::abs(b), e) - std::pow(std::abs(a), e)) / e;
}

void check_grid_cfg(const MeasurableSample& f, const DunklStructure& cfg) {
  if (cfg.dimension() != 1)
    throw std::invalid_argument("grid samples require a rank-one structure");
  if (std::abs(f.grid.k - cfg.gamma()) > 1e-12)
    throw std::invalid_argument("grid sample multiplicity does not match structure");
}

// Exact rearrangement of grid samples: sort the (value, cell measure) pairs
// by decreasing value, group ties, and lay the groups out as a step profile
// over cumulative measure. The result is equimeasurable with the input, so
// the rearranged norm route reproduces the direct cell sums exactly.
RearrangedProfile rearrange_grid_samples(const std::vector<double>& abs_vals,
                                         const std::vector<double>& measures) {
  std::vector<std::pair<double, double>> sorted;  // (|value|, cell measure)
  sorted.reserve(abs_vals.size());
  for (size_t j = 0; j < abs_vals.size(); ++j)
    if (abs_vals[j] > 0.0 && measures[j] > 0.0)
      sorted.emplace_back(abs_vals[j], measures[j]);
  if (sorted.empty()) return RearrangedProfile::power_form(0.0, 0.0);
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });

  // The profile representation gives values[i] on [knots[i], knots[i+1])
  // and extends values[0] flat below knots[0], so the first knot is a dummy
  // placed inside the first group's interval.
  std::vector<double> knots, values;
  knots.reserve(sorted.size() + 1);
  values.reserve(sorted.size() + 1);
  double cum = 0.0;
  size_t i = 0;
  while (i < sorted.size()) {
    const double v = sorted[i].first;
    double group = 0.0;
    while (i < sorted.size() && sorted[i].first == v) group += sorted[i++].second;
    const double next = cum + group;
    // a group whose measure is below the rounding of the running total
    // cannot get its own knot; fold it into the previous step
    if (!knots.empty() && next <= knots.back()) continue;
    if (knots.empty()) knots.push_back(0.5 * next);
    values.push_back(v);
    knots.push_back(next);
    cum = next;
  }
  values.push_back(0.0);  // past the last knot the profile is zero anyway
  return RearrangedProfile::grid_form(std::move(knots), std::move(values));
}

// Rearrangement of a radial function r -> g(r) >= 0 by shell sampling on a
// wide geometric radius grid.
RearrangedProfile rearrange_radial(const std::function<double(double)>& g,
                                   const DunklStructure& cfg) {
  const int m = 4096;
  const double r_lo = 1e-6, r_hi = 1e6;
  const double D = cfg.homogeneity(), dk = cfg.sphere_constant();
  std::vector<double> vals(m), meas(m);
  double prev = 0.0;
  for (int i = 0; i < m; ++i) {
    const double a = r_lo * std::pow(r_hi / r_lo, i / static_cast<double>(m));
    const double b = r_lo * std::pow(r_hi / r_lo, (i + 1) / static_cast<double>(m));
    vals[i] = g(std::sqrt(a * b));
    meas[i] = dk * (std::pow(b, D) - std::pow(a, D)) / D;
    (void)prev;
  }
  return rearrange_grid_samples(vals, meas);
}

// int A(t) B(t) dt for profiles whose product is piecewise power/step.
double pair_integral(const RearrangedProfile& A, const RearrangedProfile& B);

double profile_p_integral(const RearrangedProfile& prof, double p) {
  switch (prof.kind) {
    case RearrangedProfile::Kind::PowerForm:
      if (prof.coefficient == 0.0) return 0.0;
      return power_integral(std::pow(prof.coefficient, p), prof.exponent * p, 0.0, kInf);
    case RearrangedProfile::Kind::IndicatorForm:
      return std::pow(prof.height, p) * prof.length;
    case RearrangedProfile::Kind::Grid: {
      double acc = 0.0;
      const auto& kn = prof.knots;
      const auto& vl = prof.values;
      if (prof.tail_exponent_zero) {
        const double e = *prof.tail_exponent_zero;
        const double C = vl.front() / std::pow(kn.front(), e);
        acc += power_integral(std::pow(C, p), e * p, 0.0, kn.front());
      } else {
        acc += std::pow(vl.front(), p) * kn.front();
      }
      for (size_t i = 0; i + 1 < kn.size(); ++i)
        acc += std::pow(vl[i], p) * (kn[i + 1] - kn[i]);
      if (prof.tail_exponent_inf) {
        const double e = *prof.tail_exponent_inf;
        const double C = vl.back() / std::pow(kn.back(), e);
        acc += power_integral(std::pow(C, p), e * p, kn.back(), kInf);
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

RearrangedProfile RearrangedProfile::power_form(double C, double e) {
  RearrangedProfile p;
  p.kind = Kind::PowerForm;
  p.coefficient = C;
  p.exponent = e;
  return p;
}

RearrangedProfile RearrangedProfile::indicator_form(double R, double h) {
  if (R < 0.0 || h < 0.0) throw std::invalid_argument("indicator needs R, h >= 0");
  RearrangedProfile p;
  p.kind = Kind::IndicatorForm;
  p.length = R;
  p.height = h;
  return p;
}

RearrangedProfile RearrangedProfile::grid_form(std::vector<double> knots,
                                               std::vector<double> values) {
  if (knots.empty() || knots.size() != values.size())
    throw std::invalid_argument("grid profile needs matching nonempty knots/values");
  for (size_t i = 1; i < knots.size(); ++i)
    if (knots[i] <= knots[i - 1])
      throw std::invalid_argument("grid profile knots must be strictly increasing");
  RearrangedProfile p;
  p.kind = Kind::Grid;
  p.knots = std::move(knots);
  p.values = std::move(values);
  return p;
}

double RearrangedProfile::operator()(double t) const {
  if (t <= 0.0) throw std::invalid_argument("profiles live on (0, inf)");
  switch (kind) {
    case Kind::PowerForm:
      return coefficient * std::pow(t, exponent);
    case Kind::IndicatorForm:
      return t < length ? height : 0.0;
    case Kind::Grid: {
      if (t < knots.front()) {
        if (tail_exponent_zero)
          return values.front() * std::pow(t / knots.front(), *tail_exponent_zero);
        return values.front();
      }
      if (t >= knots.back()) {
        if (tail_exponent_inf)
          return values.back() * std::pow(t / knots.back(), *tail_exponent_inf);
        return 0.0;
      }
      const auto it = std::upper_bound(knots.begin(), knots.end(), t);
      return values[static_cast<size_t>(it - knots.begin()) - 1];
    }
  }
  throw std::logic_error("unreachable");
}

std::string RearrangedProfile::to_json() const {
  nlohmann::json j;
  switch (kind) {
    case Kind::PowerForm:
      j["kind"] = "power_form";
      j["coefficient"] = coefficient;
      j["exponent"] = exponent;
      break;
    case Kind::IndicatorForm:
      j["kind"] = "indicator_form";
      j["length"] = length;
      j["height"] = height;
      break;
    case Kind::Grid:
      j["kind"] = "grid";
      j["knots"] = knots;
      j["values"] = values;
      if (tail_exponent_zero) j["tail_exponent_zero"] = *tail_exponent_zero;
      if (tail_exponent_inf) j["tail_exponent_inf"] = *tail_exponent_inf;
      break;
  }
  return j.dump();
}

double profile_integral(const RearrangedProfile& prof, double w, double lo, double hi) {
  if (lo < 0.0 || hi < lo) throw std::invalid_argument("bad profile integral range");
  switch (prof.kind) {
    case RearrangedProfile::Kind::PowerForm:
      return power_integral(prof.coefficient, prof.exponent + w, lo, hi);
    case RearrangedProfile::Kind::IndicatorForm:
      if (lo >= prof.length) return 0.0;
      return power_integral(prof.height, w, lo, std::min(hi, prof.length));
    case RearrangedProfile::Kind::Grid: {
      const auto& kn = prof.knots;
      const auto& vl = prof.values;
      double acc = 0.0;
      if (lo < kn.front()) {
        const double b = std::min(hi, kn.front());
        if (prof.tail_exponent_zero) {
          const double e = *prof.tail_exponent_zero;
          const double C = vl.front() / std::pow(kn.front(), e);
          acc += power_integral(C, e + w, lo, b);
        } else {
          acc += power_integral(vl.front(), w, lo, b);
        }
      }
      for (size_t i = 0; i + 1 < kn.size(); ++i) {
        const double a = std::max(lo, kn[i]);
        const double b = std::min(hi, kn[i + 1]);
        if (b > a) acc += power_integral(vl[i], w, a, b);
      }
      if (hi > kn.back() && prof.tail_exponent_inf) {
        const double e = *prof.tail_exponent_inf;
        const double C = vl.back() / std::pow(kn.back(), e);
        acc += power_integral(C, e + w, std::max(lo, kn.back()), hi);
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

MeasurableSample MeasurableSample::indicator(double r, double h) {
  if (r <= 0.0 || h < 0.0) throw std::invalid_argument("indicator needs r > 0, h >= 0");
  MeasurableSample s;
  s.kind = Kind::RadialIndicator;
  s.radius = r;
  s.height = h;
  return s;
}

MeasurableSample MeasurableSample::power(double e) {
  if (e >= 0.0)
    throw std::invalid_argument("untruncated power samples need a negative exponent");
  MeasurableSample s;
  s.kind = Kind::Power;
  s.exponent = e;
  return s;
}

MeasurableSample MeasurableSample::truncated_power(double e, double r) {
  if (r <= 0.0) throw std::invalid_argument("truncation radius must be positive");
  MeasurableSample s;
  s.kind = Kind::TruncatedPower;
  s.exponent = e;
  s.radius = r;
  return s;
}

MeasurableSample MeasurableSample::from_grid(GridFunction1D f) {
  MeasurableSample s;
  s.kind = Kind::Grid;
  s.grid = std::move(f);
  return s;
}

double distribution_function(const MeasurableSample& f, const DunklStructure& cfg,
                             double s) {
  if (s < 0.0) throw std::invalid_argument("threshold must be nonnegative");
  const double D = cfg.homogeneity();
  switch (f.kind) {
    case MeasurableSample::Kind::RadialIndicator:
      return s < f.height ? cfg.ball_measure(f.radius) : 0.0;
    case MeasurableSample::Kind::Power:
      if (s == 0.0) return kInf;
      return cfg.ball_measure(std::pow(s, 1.0 / f.exponent));
    case MeasurableSample::Kind::TruncatedPower: {
      const double e = f.exponent;
      if (e < 0.0) {
        if (s == 0.0) return cfg.ball_measure(f.radius);
        return cfg.ball_measure(std::min(f.radius, std::pow(s, 1.0 / e)));
      }
      if (e == 0.0) return s < 1.0 ? cfg.ball_measure(f.radius) : 0.0;
      if (s >= std::pow(f.radius, e)) return 0.0;
      const double r_in = s == 0.0 ? 0.0 : std::pow(s, 1.0 / e);
      return cfg.ball_measure(f.radius) - cfg.ball_measure(r_in);
    }
    case MeasurableSample::Kind::Grid: {
      check_grid_cfg(f, cfg);
      double m = 0.0;
      for (int j = 0; j < f.grid.size(); ++j)
        if (std::abs(f.grid.samples[j]) > s) m += cell_measure(f.grid.grid, f.grid.k, j);
      return m;
    }
  }
  (void)D;
  throw std::logic_error("unreachable");
}

RearrangedProfile decreasing_rearrangement(const MeasurableSample& f,
                                           const DunklStructure& cfg) {
  const double D = cfg.homogeneity(), dk = cfg.sphere_constant();
  switch (f.kind) {
    case MeasurableSample::Kind::RadialIndicator:
      return RearrangedProfile::indicator_form(cfg.ball_measure(f.radius), f.height);
    case MeasurableSample::Kind::Power:
      return RearrangedProfile::power_form(std::pow(D / dk, f.exponent / D),
                                           f.exponent / D);
    case MeasurableSample::Kind::TruncatedPower: {
      const double e = f.exponent;
      const double T0 = cfg.ball_measure(f.radius);
      if (e == 0.0) return RearrangedProfile::indicator_form(T0, 1.0);
      const int m = 512;
      std::vector<double> knots(m), values(m);
      for (int i = 0; i < m; ++i) {
        const double t = e < 0.0 ? T0 * std::pow(1e-8, 1.0 - i / (m - 1.0))
                                 : T0 * (i + 0.5) / m;
        knots[i] = t;
        const double arg = e < 0.0 ? t : T0 - t;
        values[i] = std::pow(D / dk * arg, e / D);
      }
      auto prof = RearrangedProfile::grid_form(std::move(knots), std::move(values));
      if (e < 0.0) prof.tail_exponent_zero = e / D;
      return prof;
    }
    case MeasurableSample::Kind::Grid: {
      check_grid_cfg(f, cfg);
      std::vector<double> vals(f.grid.size()), meas(f.grid.size());
      for (int j = 0; j < f.grid.size(); ++j) {
        vals[j] = std::abs(f.grid.samples[j]);
        meas[j] = cell_measure(f.grid.grid, f.grid.k, j);
      }
      return rearrange_grid_samples(vals, meas);
    }
  }
  throw std::logic_error("unreachable");
}

RearrangedProfile reciprocal_rearrangement(const WeightSpec& v,
                                           const DunklStructure& cfg) {
  const double D = cfg.homogeneity(), dk = cfg.sphere_constant();
  switch (v.kind) {
    case WeightSpec::Kind::One:
      return RearrangedProfile::constant(1.0);
    case WeightSpec::Kind::Power: {
      const double a = v.exponent;
      if (a == 0.0) return RearrangedProfile::constant(1.0);
      if (a < 0.0)
        throw DivergentIntegral(
            "1/v is unbounded with infinite level sets; no finite rearrangement");
      // 1/v = |x|^{-a} with -a < 0
      return RearrangedProfile::power_form(std::pow(D / dk, -a / D), -a / D);
    }
    case WeightSpec::Kind::RadialCallable: {
      auto eval = v.profile.eval;
      if (!eval) throw std::invalid_argument("callable weight has no evaluator");
      return rearrange_radial([eval](double r) { return 1.0 / eval(r); }, cfg);
    }
  }
  throw std::logic_error("unreachable");
}

double lp_norm(const MeasurableSample& f, double p, const DunklStructure& cfg,
               NormRoute via) {
  if (p < 1.0) throw std::invalid_argument("p must be >= 1");
  const double D = cfg.homogeneity(), dk = cfg.sphere_constant();
  if (via == NormRoute::Rearranged) {
    const double val = profile_p_integral(decreasing_rearrangement(f, cfg), p);
    return std::isinf(val) ? kInf : std::pow(val, 1.0 / p);
  }
  switch (f.kind) {
    case MeasurableSample::Kind::RadialIndicator:
      return std::pow(std::pow(f.height, p) * cfg.ball_measure(f.radius), 1.0 / p);
    case MeasurableSample::Kind::Power:
      return kInf;  // diverges at 0 or at infinity for every p
    case MeasurableSample::Kind::TruncatedPower: {
      const double e = f.exponent * p + D;
      if (e <= 0.0) return kInf;
      return std::pow(dk * std::pow(f.radius, e) / e, 1.0 / p);
    }
    case MeasurableSample::Kind::Grid:
      check_grid_cfg(f, cfg);
      return weighted_lp_norm(f.grid, p);
  }
  throw std::logic_error("unreachable");
}

namespace {

double pair_integral(const RearrangedProfile& A, const RearrangedProfile& B) {
  using Kind = RearrangedProfile::Kind;
  if (A.kind == Kind::PowerForm) {
    if (A.coefficient == 0.0) return 0.0;
    return A.coefficient * profile_integral(B, A.exponent, 0.0, kInf);
  }
  if (B.kind == Kind::PowerForm) return pair_integral(B, A);
  if (A.kind == Kind::IndicatorForm)
    return A.height * profile_integral(B, 0.0, 0.0, A.length);
  if (B.kind == Kind::IndicatorForm) return pair_integral(B, A);
  // Grid x Grid: piecewise-constant product over the union of knot sets.
  std::vector<double> cuts;
  cuts.reserve(A.knots.size() + B.knots.size());
  cuts.insert(cuts.end(), A.knots.begin(), A.knots.end());
  cuts.insert(cuts.end(), B.knots.begin(), B.knots.end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  double acc = 0.0;
  // below the first cut both factors are flat or hinted powers; sample at
  // the geometric midpoint of a short run-in instead of integrating to 0
  const double t0 = cuts.front();
  {
    const int m = 64;
    for (int i = 0; i < m; ++i) {
      const double a = t0 * std::pow(1e-8, 1.0 - i / static_cast<double>(m));
      const double b = t0 * std::pow(1e-8, 1.0 - (i + 1.0) / m);
      const double mid = std::sqrt(a * b);
      acc += A(mid) * B(mid) * (b - a);
    }
  }
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    acc += A(mid) * B(mid) * (cuts[i + 1] - cuts[i]);
  }
  if (A.tail_exponent_inf || B.tail_exponent_inf) {
    const double tb = cuts.back();
    const double eA = A.tail_exponent_inf.value_or(0.0);
    const double eB = B.tail_exponent_inf.value_or(0.0);
    const double prod = A(tb * (1.0 + 1e-12)) * B(tb * (1.0 + 1e-12));
    if (prod > 0.0) acc += power_integral(prod / std::pow(tb, eA + eB), eA + eB, tb, kInf);
  }
  return acc;
}

}  // namespace

PairingResult hl_pairing(const MeasurableSample& f, const WeightSpec& w,
                         const DunklStructure& cfg) {
  const double D = cfg.homogeneity(), dk = cfg.sphere_constant();
  PairingResult out;
  const RearrangedProfile fstar = decreasing_rearrangement(f, cfg);

  // lhs_direct = int f w dnu_k
  switch (w.kind) {
    case WeightSpec::Kind::One:
      out.lhs_direct = lp_norm(f, 1.0, cfg, NormRoute::Direct);
      break;
    case WeightSpec::Kind::Power: {
      const double a = w.exponent;
      switch (f.kind) {
        case MeasurableSample::Kind::RadialIndicator: {
          const double e = a + D;
          out.lhs_direct =
              e > 0.0 ? f.height * dk * std::pow(f.radius, e) / e : kInf;
          break;
        }
        case MeasurableSample::Kind::TruncatedPower: {
          const double e = f.exponent + a + D;
          out.lhs_direct = e > 0.0 ? dk * std::pow(f.radius, e) / e : kInf;
          break;
        }
        case MeasurableSample::Kind::Power:
          out.lhs_direct = kInf;  // a pure power against a power never converges
          break;
        case MeasurableSample::Kind::Grid: {
          check_grid_cfg(f, cfg);
          const double q = a + 2.0 * f.grid.k;
          if (q <= -1.0)
            throw DivergentIntegral("weight moment diverges at the origin");
          double acc = 0.0;
          for (int j = 0; j < f.grid.size(); ++j)
            acc += std::abs(f.grid.samples[j]) * cell_moment(f.grid.grid, q, j);
          out.lhs_direct = acc;
          break;
        }
      }
      break;
    }
    case WeightSpec::Kind::RadialCallable: {
      auto weval = w.profile.eval;
      if (!weval) throw std::invalid_argument("callable weight has no evaluator");
      if (f.kind == MeasurableSample::Kind::Grid) {
        check_grid_cfg(f, cfg);
        double acc = 0.0;
        for (int j = 0; j < f.grid.size(); ++j)
          acc += std::abs(f.grid.samples[j]) * weval(std::abs(f.grid.grid.node(j))) *
                 cell_measure(f.grid.grid, f.grid.k, j);
        out.lhs_direct = acc;
      } else {
        RadialProfile prod;
        const MeasurableSample fc = f;
        prod.eval = [fc, weval](double r) {
          double fv = 0.0;
          switch (fc.kind) {
            case MeasurableSample::Kind::RadialIndicator:
              fv = r < fc.radius ? fc.height : 0.0;
              break;
            case MeasurableSample::Kind::TruncatedPower:
              fv = r < fc.radius ? std::pow(r, fc.exponent) : 0.0;
              break;
            case MeasurableSample::Kind::Power:
              fv = std::pow(r, fc.exponent);
              break;
            default:
              break;
          }
          return fv * weval(r);
        };
        if (f.kind != MeasurableSample::Kind::Power) prod.support = f.radius;
        prod.power_at_zero = w.profile.power_at_zero.value_or(0.0) +
                             (f.kind == MeasurableSample::Kind::RadialIndicator
                                  ? 0.0
                                  : f.exponent);
        prod.power_at_inf = w.profile.power_at_inf;
        try {
          out.lhs_direct = radial_integral(cfg, prod);
        } catch (const DivergentIntegral&) {
          out.lhs_direct = kInf;
        }
      }
      break;
    }
  }

  // rhs_upper = int f* w* dt
  switch (w.kind) {
    case WeightSpec::Kind::One:
      out.rhs_upper = profile_integral(fstar, 0.0, 0.0, kInf);
      break;
    case WeightSpec::Kind::Power: {
      const double a = w.exponent;
      if (a > 0.0) {
        // w is unbounded with infinite level sets: w* is identically +inf
        out.rhs_upper = profile_integral(fstar, 0.0, 0.0, kInf) > 0.0 ? kInf : 0.0;
      } else if (a == 0.0) {
        out.rhs_upper = profile_integral(fstar, 0.0, 0.0, kInf);
      } else {
        const double C = std::pow(D / dk, a / D);
        out.rhs_upper = C * profile_integral(fstar, a / D, 0.0, kInf);
      }
      break;
    }
    case WeightSpec::Kind::RadialCallable: {
      const auto wstar = rearrange_radial(w.profile.eval, cfg);
      out.rhs_upper = pair_integral(fstar, wstar);
      break;
    }
  }

  // lhs_lower = int f*(t) / (1/w)*(t) dt
  {
    RearrangedProfile inv;
    try {
      inv = reciprocal_rearrangement(w, cfg);
    } catch (const DivergentIntegral&) {
      // (1/w)* is identically +inf: the lower bound degenerates to 0
      out.lhs_lower = 0.0;
      return out;
    }
    RearrangedProfile recip;  // pointwise 1 / inv (non-increasing is not required)
    switch (inv.kind) {
      case RearrangedProfile::Kind::PowerForm:
        recip = RearrangedProfile::power_form(1.0 / inv.coefficient, -inv.exponent);
        break;
      case RearrangedProfile::Kind::IndicatorForm:
        recip = RearrangedProfile::indicator_form(inv.length, 1.0 / inv.height);
        break;
      case RearrangedProfile::Kind::Grid: {
        std::vector<double> vals(inv.values.size());
        for (size_t i = 0; i < vals.size(); ++i)
          vals[i] = inv.values[i] > 0.0 ? 1.0 / inv.values[i] : 0.0;
        recip = RearrangedProfile::grid_form(inv.knots, std::move(vals));
        if (inv.tail_exponent_zero) recip.tail_exponent_zero = -*inv.tail_exponent_zero;
        if (inv.tail_exponent_inf) recip.tail_exponent_inf = -*inv.tail_exponent_inf;
        break;
      }
    }
    out.lhs_lower = pair_integral(fstar, recip);
  }
  return out;
}

}  // namespace dunkl
