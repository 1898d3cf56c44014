#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dunkl/weights.hpp"

#include <cmath>
#include <random>

using namespace dunkl;

TEST_CASE("weak-type endpoint arithmetic") {
  const double alpha = 0.5, r = 1.5, D = 2.0;
  const auto wt = WeakTypePair::riesz(alpha, r, D);
  CHECK(wt.p1 == doctest::Approx(1.0));
  CHECK(wt.q1 == doctest::Approx(1.0 / (1.0 - alpha / D)));
  CHECK(wt.p2 == doctest::Approx(r));
  CHECK(1.0 / wt.q2 == doctest::Approx(1.0 / r - alpha / D));
  // for the Riesz endpoints both interpolation parameters collapse
  CHECK(wt.lambda1() == doctest::Approx(wt.lambda2()).epsilon(1e-14));
  CHECK_THROWS_AS(WeakTypePair(2.0, 2.0, 1.5, 3.0), std::invalid_argument);
}

TEST_CASE("direct conditions and endpoint-pair route give identical verdicts") {
  // 50 random power-form profile pairs
  std::mt19937_64 rng(77001u);
  std::uniform_real_distribution<double> Ue(-1.5, 0.0), Uc(0.5, 2.0), Up(1.1, 2.8),
      Uq(0.0, 1.5), Ur(0.0, 1.0), Ua(0.1, 0.9);
  const auto cfg = DunklStructure::rank_one(1.0);  // homogeneity D = 3
  const double D = cfg.homogeneity();
  int admissible_seen = 0;
  for (int trial = 0; trial < 50; ++trial) {
    double p = Up(rng), q = p + Uq(rng);
    const double alpha = Ua(rng) * (D - 1.0);
    const double r = 1.0 + Ur(rng) * (D / alpha - 1.0 - 1e-3);
    double eu = Ue(rng), ev = Ue(rng);
    if (trial % 2 == 0) {
      // balanced constant-profile tuples so Admissible is exercised:
      // p < r and 1/q = 1/p - alpha/D make both conditions finite
      eu = ev = 0.0;
      p = 1.0 + 0.9 * (std::min(r, D / alpha) - 1.0) * (0.2 + 0.6 * Ur(rng));
      q = 1.0 / (1.0 / p - alpha / D);
    }
    const auto u = RearrangedProfile::power_form(Uc(rng), eu);
    const auto iv = RearrangedProfile::power_form(Uc(rng), ev);

    const auto direct = riesz_conditions(u, iv, p, q, r, alpha, cfg);
    const auto via_pair = weak_type_conditions(u, iv, p, q, WeakTypePair::riesz(alpha, r, D));
    CAPTURE(trial); CAPTURE(p); CAPTURE(q); CAPTURE(r); CAPTURE(alpha);
    CHECK(direct.verdict == via_pair.verdict);
    if (direct.verdict == AdmissibilityVerdict::Admissible) {
      ++admissible_seen;
      CHECK(direct.sup1 == doctest::Approx(via_pair.sup1).epsilon(1e-9));
      CHECK(direct.sup2 == doctest::Approx(via_pair.sup2).epsilon(1e-9));
    }
  }
  CHECK(admissible_seen >= 1);
}

TEST_CASE("unweighted case: admissible iff p < r and 1/q = 1/p - alpha/D") {
  const auto cfg = DunklStructure::rank_one(2.0);  // D = 5
  const double D = cfg.homogeneity();
  const auto one = RearrangedProfile::constant(1.0);
  int checked = 0, disagreements = 0;
  for (double p : {1.1, 1.3, 1.8, 2.4, 3.0})
    for (double r : {1.5, 2.0, 3.0, 4.0})
      for (double alpha : {0.5, 1.0} )
        for (bool balanced : {true, false}) {
          const double inv_q = 1.0 / p - alpha / D;
          if (inv_q <= 0.0) continue;
          const double q = balanced ? 1.0 / inv_q : 1.05 / inv_q;
          if (q < p) continue;
          const auto rep = riesz_conditions(one, one, p, q, r, alpha, cfg);
          const bool want = (p < r) && balanced;
          const bool got = rep.verdict == AdmissibilityVerdict::Admissible;
          if (got != want) ++disagreements;
          ++checked;
        }
  CHECK(checked >= 60);
  CHECK(disagreements == 0);
}

TEST_CASE("closed-form and numeric evaluation agree on power profiles") {
  const auto cfg = DunklStructure::rank_one(0.5);
  const double D = cfg.homogeneity();
  const double alpha = 0.5, p = 1.5, r = 1.5;
  const double q = 1.0 / (1.0 / p - alpha / D);
  const auto u = RearrangedProfile::power_form(1.0, -0.1);
  const auto iv = RearrangedProfile::power_form(1.0, -0.05);
  const auto cf = riesz_conditions(u, iv, p, q, r, alpha, cfg, EvalMode::ClosedForm);
  const auto nm = riesz_conditions(u, iv, p, q, r, alpha, cfg, EvalMode::Numeric);
  CHECK(cf.verdict == nm.verdict);
  if (cf.verdict == AdmissibilityVerdict::Admissible) {
    CHECK(cf.sup1 == doctest::Approx(nm.sup1).epsilon(1e-4));
    CHECK(cf.sup2 == doctest::Approx(nm.sup2).epsilon(1e-4));
  }
}

TEST_CASE("power-weight admissibility catalogue") {
  const auto cfg = DunklStructure::rank_one(0.5);  // D = 2
  // the reference admissible set
  auto ok = power_weight_admissible(1.5, 0.5, -0.5, 0.25, cfg);
  CHECK(ok.admissible);
  CHECK(ok.first_failure().empty());
  // scale-balance violation: beta != delta + alpha p
  auto bad = power_weight_admissible(1.5, 0.5, -0.5, 0.5, cfg);
  CHECK_FALSE(bad.admissible);
  CHECK_FALSE(bad.first_failure().empty());
  // delta must be negative
  CHECK_FALSE(power_weight_admissible(1.5, 0.5, 0.1, 0.85, cfg).admissible);
  // p out of range
  CHECK_FALSE(power_weight_admissible(5.0, 0.5, -0.5, 2.0, cfg).admissible);
  // every labeled condition is reported
  CHECK(ok.conditions.size() >= 4);
}

TEST_CASE("Sobolev-type target conditions for the conformal exponent") {
  const auto cfg = DunklStructure::rank_one(0.5);  // D = 2
  const double D = cfg.homogeneity();
  const double p = 1.5, r = 1.8;
  const double q = 1.0 / (1.0 / p - 1.0 / D);  // conformal pairing
  const auto rep = sobolev_conditions(RearrangedProfile::constant(1.0), p, q, r, cfg);
  CHECK(rep.verdict == AdmissibilityVerdict::Admissible);
  // breaking the pairing breaks admissibility
  const auto rep2 =
      sobolev_conditions(RearrangedProfile::constant(1.0), p, 1.15 * q, r, cfg);
  CHECK(rep2.verdict == AdmissibilityVerdict::NotAdmissible);
  // parameter guards
  CHECK_THROWS_AS(sobolev_conditions(RearrangedProfile::constant(1.0), p, q, D + 1.0, cfg),
                  std::invalid_argument);
}

TEST_CASE("pointwise rearrangement bound is positive and scales monotonely") {
  const auto wt = WeakTypePair::riesz(0.5, 1.5, 2.0);
  const auto f = RearrangedProfile::indicator_form(1.0, 1.0);
  double prev = calderon_bound(f, 1e-3, wt);
  CHECK(prev > 0.0);
  for (double t = 1e-2; t < 1e3; t *= 10.0) {
    const double cur = calderon_bound(f, t, wt);
    CHECK(cur > 0.0);
    CHECK(cur <= prev * (1.0 + 1e-9));  // decreasing in t for a fixed profile
    prev = cur;
  }
  // doubling the profile doubles the bound (linearity)
  const auto f2 = RearrangedProfile::indicator_form(1.0, 2.0);
  CHECK(calderon_bound(f2, 0.5, wt) == doctest::Approx(2.0 * calderon_bound(f, 0.5, wt)));
}

TEST_CASE("grid profiles without tail hints stay undecided") {
  auto g = RearrangedProfile::grid_form({0.1, 1.0, 10.0}, {3.0, 2.0, 1.0});
  const auto cfg = DunklStructure::rank_one(0.5);
  const auto rep = riesz_conditions(g, RearrangedProfile::constant(1.0), 1.5, 4.0, 1.5,
                                    0.5, cfg);
  CHECK(rep.verdict == AdmissibilityVerdict::Undecided);
}
