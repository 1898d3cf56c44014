#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dunkl/grid.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/structure.hpp"

#include <cmath>
#include <cstdio>

using namespace dunkl;

TEST_CASE("midpoint grid geometry") {
  const Grid1D g{4.0, 128};
  CHECK(g.dx() == doctest::Approx(8.0 / 128));
  // symmetric nodes, zero on a cell boundary
  for (int j = 0; j < g.n; ++j)
    CHECK(g.node(g.n - 1 - j) == doctest::Approx(-g.node(j)).epsilon(1e-15));
  CHECK(g.node(g.n / 2) == doctest::Approx(0.5 * g.dx()));
}

TEST_CASE("cell measures sum to the exact weighted length") {
  for (double k : {0.0, 0.5, 1.3}) {
    const Grid1D g{2.5, 96};
    double total = 0.0;
    for (int j = 0; j < g.n; ++j) total += cell_measure(g, k, j);
    const double e = 2.0 * k + 1.0;
    CHECK(total == doctest::Approx(2.0 * std::pow(2.5, e) / e).epsilon(1e-13));
  }
}

TEST_CASE("weighted norm against the adaptive oracle") {
  const Grid1D g{6.0, 512};
  const double k = 0.6;
  const auto f = GridFunction1D::sample(g, k, [](double x) { return std::exp(-x * x); });
  for (double p : {1.0, 2.0, 3.0})
    for (double delta : {0.0, -0.5, 0.7}) {
      const double got = weighted_lp_norm(f, p, delta);
      const double want = std::pow(
          2.0 * integrate(
                    [&](double x) {
                      return std::pow(std::exp(-x * x), p) * std::pow(x, 2.0 * k + delta);
                    },
                    0.0, 6.0, 1e-15, 1e-12)
                    .value,
          1.0 / p);
      CHECK(got == doctest::Approx(want).epsilon(1e-8));
    }
}

TEST_CASE("tail extrapolation recovers a slowly decaying norm") {
  const Grid1D g{20.0, 1024};
  const double k = 0.5, p = 2.0;
  auto fn = [](double x) { return 1.0 / std::pow(1.0 + std::abs(x), 3.0); };
  const auto f = GridFunction1D::sample(g, k, fn);
  const double got = weighted_lp_norm(f, p, 0.0, -3.0);
  const double want = std::pow(
      2.0 * integrate([&](double x) { return std::pow(fn(x), p) * x; }, 0.0, 4000.0,
                      1e-15, 1e-12)
                .value,
      1.0 / p);
  CHECK(got == doctest::Approx(want).epsilon(1e-3));
  // and refuses a tail it cannot integrate
  CHECK_THROWS_AS(weighted_lp_norm(f, 1.0, 1.5, -3.0), DivergentIntegral);
}

TEST_CASE("level-set measure with and without the analytic tail") {
  const Grid1D g{10.0, 1024};
  const double k = 0.0;  // Lebesgue: measures are plain lengths
  auto fn = [](double x) { return 1.0 / (1.0 + x * x); };
  const auto f = GridFunction1D::sample(g, k, fn);
  // {|f| > s} = (-r, r), r = sqrt(1/s - 1)
  for (double s : {0.02, 0.2, 0.8}) {
    const double r = std::sqrt(1.0 / s - 1.0);
    CHECK(measure_above(f, s, -2.0) == doctest::Approx(2.0 * r).epsilon(2e-2));
  }
  // monotone in the level
  double prev = measure_above(f, 0.005, -2.0);
  for (double s = 0.01; s < 1.0; s *= 1.5) {
    const double cur = measure_above(f, s, -2.0);
    CHECK(cur <= prev + 1e-12);
    prev = cur;
  }
}

TEST_CASE("CSV round trip") {
  const Grid1D g{3.0, 64};
  const auto f = GridFunction1D::sample(
      g, 0.75, [](double x) { return std::complex<double>{std::sin(x), x}; });
  const std::string path = "tmp_grid_roundtrip.csv";
  write_csv(path, f);
  const auto back = read_csv(path, 0.75);
  REQUIRE(back.size() == f.size());
  CHECK(back.grid == f.grid);
  for (int j = 0; j < f.size(); ++j)
    CHECK(std::abs(back.samples[j] - f.samples[j]) < 1e-14);
  std::remove(path.c_str());
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(GridFunction1D(Grid1D{1.0, 63}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(GridFunction1D(Grid1D{1.0, 128}, -0.5), std::invalid_argument);
}
