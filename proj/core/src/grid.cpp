#include "dunkl/grid.hpp"

#include "dunkl/quadrature.hpp"
#include "dunkl/structure.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dunkl {

namespace {
constexpr double kPi = 3.14159265358979323846;

// Fit |f| ~ C |x|^sigma + b |x|^{sigma-2} on the outer band of one side by
// least squares (the subleading term absorbs the slow approach to the
// asymptote). Falls back to a one-term median fit when ill-conditioned.
struct TailFit {
  double c = 0.0, b = 0.0;
  double eval(double x, double sigma) const {
    return c * std::pow(x, sigma) + b * std::pow(x, sigma - 2.0);
  }
};

TailFit fit_tail(const GridFunction1D& f, double sigma, bool positive_side) {
  const int n = f.size();
  // Samples near the grid boundary are unreliable for slowly decaying
  // functions (spectral wrap-around), so fit on an interior band
  // |x| in [0.35 L, 0.6 L] instead of the outermost cells.
  const int skip = static_cast<int>(0.2 * n);   // outer 40% of one side
  const int band = std::max(8, n / 8);          // |x| down to ~0.35 L
  double uu = 0.0, uv = 0.0, vv = 0.0, uy = 0.0, vy = 0.0;
  std::vector<double> cs;
  for (int i = skip; i < skip + band; ++i) {
    const int j = positive_side ? n - 1 - i : i;
    const double x = std::abs(f.grid.node(j));
    const double u = std::pow(x, sigma), v = std::pow(x, sigma - 2.0);
    const double y = std::abs(f.samples[j]);
    uu += u * u; uv += u * v; vv += v * v;
    uy += u * y; vy += v * y;
    cs.push_back(y / u);
  }
  const double det = uu * vv - uv * uv;
  TailFit fit;
  if (std::abs(det) > 1e-14 * uu * vv) {
    fit.c = (uy * vv - vy * uv) / det;
    fit.b = (vy * uu - uy * uv) / det;
  }
  if (!(fit.c > 0.0)) {
    std::nth_element(cs.begin(), cs.begin() + cs.size() / 2, cs.end());
    fit.c = cs[cs.size() / 2];
    fit.b = 0.0;
  }
  return fit;
}
}  // namespace

GridFunction1D::GridFunction1D(Grid1D g, double multiplicity)
    : grid(g), k(multiplicity), samples(g.n, {0.0, 0.0}) {
  if (g.n < 64 || g.n % 2 != 0)
    throw std::invalid_argument("grid size must be even and >= 64");
  if (multiplicity < 0.0)
    throw std::invalid_argument("multiplicity must be nonnegative");
}

double GridFunction1D::max_abs() const {
  double m = 0.0;
  for (const auto& v : samples) m = std::max(m, std::abs(v));
  return m;
}

Grid1D dual_grid(const Grid1D& g) {
  return Grid1D{kPi / g.dx(), g.n};
}

double cell_measure(const Grid1D& g, double k, int j) {
  const double a = g.node(j) - 0.5 * g.dx();
  const double b = a + g.dx();
  const double e = 2.0 * k + 1.0;
  // 0 is a cell boundary, so [a,b] never straddles it
  return std::abs(std::pow(std::abs(b), e) - std::pow(std::abs(a), e)) / e;
}

double weighted_lp_norm(const GridFunction1D& f, double p, double delta,
                        std::optional<double> tail_exponent) {
  if (p < 1.0) throw std::invalid_argument("p must be >= 1");
  const double beta = 2.0 * f.k + delta;
  const auto w = power_weighted_midpoint_weights(beta, f.grid.half_width, f.grid.n);
  double acc = 0.0;
  for (int j = 0; j < f.size(); ++j)
    acc += w[j] * std::pow(std::abs(f.samples[j]), p);
  if (tail_exponent) {
    const double sigma = *tail_exponent;
    const double e = p * sigma + beta;  // tail integrand exponent
    if (e >= -1.0) throw DivergentIntegral("weighted norm tail diverges");
    const double L = f.grid.half_width;
    for (bool side : {false, true}) {
      const TailFit fit = fit_tail(f, sigma, side);
      // (C x^s + b x^{s-2})^p ~ C^p x^{ps} + p C^{p-1} b x^{ps-2}
      double tail = -std::pow(fit.c, p) * std::pow(L, e + 1.0) / (e + 1.0);
      tail += -p * std::pow(fit.c, p - 1.0) * fit.b * std::pow(L, e - 1.0) / (e - 1.0);
      if (tail > 0.0) acc += tail;
    }
  }
  return std::pow(acc, 1.0 / p);
}

double measure_above(const GridFunction1D& f, double s,
                     std::optional<double> tail_exponent) {
  if (s < 0.0) throw std::invalid_argument("threshold must be nonnegative");
  double m = 0.0;
  for (int j = 0; j < f.size(); ++j)
    if (std::abs(f.samples[j]) > s) m += cell_measure(f.grid, f.k, j);
  if (tail_exponent && s > 0.0) {
    const double sigma = *tail_exponent;  // decay: sigma < 0
    const double L = f.grid.half_width;
    const double e = 2.0 * f.k + 1.0;
    for (bool side : {false, true}) {
      const TailFit fit = fit_tail(f, sigma, side);
      if (fit.c <= 0.0) continue;
      // Level-set radius from the leading term only: the subleading term is
      // not sign-controlled and can make the inversion non-monotone in s.
      const double r = std::pow(s / fit.c, 1.0 / sigma);
      if (r > L) m += (std::pow(r, e) - std::pow(L, e)) / e;
    }
  }
  return m;
}

void write_csv(const std::string& path, const GridFunction1D& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "x,re,im\n";
  out.precision(17);
  for (int j = 0; j < f.size(); ++j)
    out << f.grid.node(j) << ',' << f.samples[j].real() << ',' << f.samples[j].imag() << '\n';
}

void write_csv(const std::string& path, const SpectralFunction1D& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "xi,re,im\n";
  out.precision(17);
  for (int j = 0; j < f.grid.n; ++j)
    out << f.grid.node(j) << ',' << f.samples[j].real() << ',' << f.samples[j].imag() << '\n';
}

GridFunction1D read_csv(const std::string& path, double k) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string line;
  std::getline(in, line);  // header
  std::vector<double> xs;
  std::vector<std::complex<double>> vs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string tok;
    double col[3] = {0, 0, 0};
    for (int c = 0; c < 3 && std::getline(ss, tok, ','); ++c) col[c] = std::stod(tok);
    xs.push_back(col[0]);
    vs.emplace_back(col[1], col[2]);
  }
  const int n = static_cast<int>(xs.size());
  if (n < 64) throw std::runtime_error("grid CSV too short: " + path);
  const double dx = xs[1] - xs[0];
  const double L = -(xs[0] - 0.5 * dx);
  const Grid1D g{L, n};
  for (int j = 0; j < n; ++j)
    if (std::abs(xs[j] - g.node(j)) > 1e-9 * (1.0 + std::abs(xs[j])))
      throw std::runtime_error("CSV nodes are not a symmetric midpoint grid");
  GridFunction1D f(g, k);
  f.samples = std::move(vs);
  return f;
}

}  // namespace dunkl
