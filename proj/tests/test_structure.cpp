#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dunkl/structure.hpp"

#include <cmath>

using namespace dunkl;

namespace {
constexpr double kPi = 3.14159265358979323846;

RadialProfile gaussian_profile() {
  RadialProfile F;
  F.eval = [](double r) { return std::exp(-r * r / 2.0); };
  F.power_at_zero = 0.0;
  // no tail hint: the doubling-block tail handles super-polynomial decay
  return F;
}
}  // namespace

TEST_CASE("rank-one sphere mass is 2 for every multiplicity") {
  for (double k : {0.0, 0.5, 1.0, 2.5})
    CHECK(std::abs(DunklStructure::rank_one(k).sphere_constant() - 2.0) < 1e-10);
}

TEST_CASE("planar unweighted sphere mass is 2 pi") {
  const auto cfg = DunklStructure::z2_power({0.0, 0.0});
  CHECK(std::abs(cfg.sphere_constant() - 2.0 * kPi) < 1e-8);
}

TEST_CASE("Gaussian radial integral inverts the Mehta-type constant") {
  const auto cases = {DunklStructure::rank_one(0.0), DunklStructure::rank_one(0.8),
                      DunklStructure::z2_power({0.0, 0.0}),
                      DunklStructure::z2_power({0.3, 1.2})};
  for (const auto& cfg : cases) {
    const double got = radial_integral(cfg, gaussian_profile());
    CHECK(std::abs(got - 1.0 / cfg.mehta_constant()) <
          1e-8 * (1.0 / cfg.mehta_constant()));
  }
}

TEST_CASE("index arithmetic") {
  const auto cfg = DunklStructure::z2_power({0.5, 1.5});
  CHECK(cfg.dimension() == 2);
  CHECK(cfg.gamma() == doctest::Approx(2.0));
  CHECK(cfg.homogeneity() == doctest::Approx(6.0));
  CHECK(cfg.weight_eval({2.0, 3.0}) ==
        doctest::Approx(std::pow(2.0, 1.0) * std::pow(3.0, 3.0)));
}

TEST_CASE("ball measure homogeneity and closed form") {
  for (const auto& cfg :
       {DunklStructure::rank_one(0.7), DunklStructure::z2_power({0.5, 1.5})}) {
    const double D = cfg.homogeneity();
    for (double r : {0.3, 1.0, 2.5}) {
      CHECK(cfg.ball_measure(2.0 * r) ==
            doctest::Approx(std::pow(2.0, D) * cfg.ball_measure(r)).epsilon(1e-12));
      CHECK(cfg.ball_measure(r) ==
            doctest::Approx(cfg.sphere_constant() * std::pow(r, D) / D).epsilon(1e-12));
    }
  }
}

TEST_CASE("ball measure equals the radial integral of its indicator") {
  const auto cfg = DunklStructure::rank_one(1.25);
  RadialProfile chi;
  const double R = 1.8;
  chi.eval = [R](double r) { return r < R ? 1.0 : 0.0; };
  chi.power_at_zero = 0.0;
  chi.support = R;
  CHECK(radial_integral(cfg, chi) ==
        doctest::Approx(cfg.ball_measure(R)).epsilon(1e-9));
}

TEST_CASE("divergent tails are refused") {
  const auto cfg = DunklStructure::rank_one(0.5);  // homogeneity 2
  RadialProfile F;
  F.eval = [](double r) { return 1.0 / (1.0 + r); };  // ~ r^{-1}: r^{-1+1} dr diverges
  F.power_at_zero = 0.0;
  F.power_at_inf = -1.0;
  CHECK_THROWS_AS(radial_integral(cfg, F), DivergentIntegral);
}

TEST_CASE("JSON round trip preserves the structure") {
  const auto cfg = DunklStructure::z2_power({0.25, 1.75});
  const auto back = DunklStructure::from_json(cfg.to_json());
  CHECK(back.dimension() == cfg.dimension());
  CHECK(back.gamma() == doctest::Approx(cfg.gamma()).epsilon(1e-15));
  CHECK(back.sphere_constant() == doctest::Approx(cfg.sphere_constant()).epsilon(1e-15));
}

TEST_CASE("invalid inputs are refused") {
  CHECK_THROWS_AS(DunklStructure::z2_power({-0.5}), std::invalid_argument);
  CHECK_THROWS_AS(DunklStructure::z2_power({}), std::invalid_argument);
}
