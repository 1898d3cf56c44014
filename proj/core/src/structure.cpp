#include "dunkl/structure.hpp"

#include "dunkl/quadrature.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace dunkl {

namespace {

double z2_mehta_inverse(const std::vector<double>& ks) {
  // c_k^{-1} = prod_i 2^{k_i + 1/2} Gamma(k_i + 1/2)
  double v = 1.0;
  for (double k : ks) v *= std::pow(2.0, k + 0.5) * std::tgamma(k + 0.5);
  return v;
}

double general_roots_gaussian_integral(const DunklStructure& cfg, int n) {
  const int d = cfg.dimension();
  const double R = 10.0 + 2.0 * std::sqrt(cfg.gamma() + 1.0) + cfg.gamma();
  std::vector<double> x1, w1;
  gauss_legendre(n, x1, w1);
  for (int i = 0; i < n; ++i) {
    x1[i] *= R;
    w1[i] *= R;
  }
  std::vector<int> idx(d, 0);
  std::vector<double> pt(d);
  double total = 0.0;
  while (true) {
    double w = 1.0, r2 = 0.0;
    for (int j = 0; j < d; ++j) {
      pt[j] = x1[idx[j]];
      w *= w1[idx[j]];
      r2 += pt[j] * pt[j];
    }
    total += w * std::exp(-0.5 * r2) * cfg.weight_eval(pt);
    int j = 0;
    for (; j < d; ++j) {
      if (++idx[j] < n) break;
      idx[j] = 0;
    }
    if (j == d) break;
  }
  return total;
}

}  // namespace

DunklStructure DunklStructure::z2_power(std::vector<double> multiplicities) {
  if (multiplicities.empty())
    throw std::invalid_argument("z2_power needs at least one multiplicity");
  DunklStructure s;
  s.dimension_ = static_cast<int>(multiplicities.size());
  s.model_ = ReflectionModel::Z2Power;
  s.multiplicities_ = std::move(multiplicities);
  s.finalize();
  return s;
}

DunklStructure DunklStructure::general_roots(int dimension,
                                             std::vector<std::vector<double>> roots,
                                             std::vector<double> multiplicities) {
  if (dimension < 1) throw std::invalid_argument("dimension must be positive");
  if (roots.size() != multiplicities.size())
    throw std::invalid_argument("one multiplicity per positive root required");
  for (const auto& r : roots)
    if (static_cast<int>(r.size()) != dimension)
      throw std::invalid_argument("root dimension mismatch");
  if (dimension > 4)
    throw std::invalid_argument("general-roots quadrature supports d <= 4");
  DunklStructure s;
  s.dimension_ = dimension;
  s.model_ = ReflectionModel::GeneralRoots;
  s.roots_ = std::move(roots);
  s.multiplicities_ = std::move(multiplicities);
  s.finalize();
  return s;
}

void DunklStructure::finalize() {
  for (double k : multiplicities_)
    if (k < 0.0) throw std::invalid_argument("multiplicities must be nonnegative");
  gamma_ = 0.0;
  for (double k : multiplicities_) gamma_ += k;

  if (model_ == ReflectionModel::Z2Power) {
    mehta_ = 1.0 / z2_mehta_inverse(multiplicities_);
  } else {
    const double coarse = general_roots_gaussian_integral(*this, 96);
    const double fine = general_roots_gaussian_integral(*this, 144);
    const double rel = std::abs(fine - coarse) / std::abs(fine);
    if (rel > 1e-7)
      throw QuadratureFailure("Mehta constant quadrature did not converge", rel);
    mehta_ = 1.0 / fine;
  }
  sphere_ = (1.0 / mehta_) /
            (std::pow(2.0, gamma_ + 0.5 * dimension_ - 1.0) *
             std::tgamma(gamma_ + 0.5 * dimension_));
}

double DunklStructure::weight_eval(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != dimension_)
    throw std::invalid_argument("point dimension mismatch");
  double w = 1.0;
  if (model_ == ReflectionModel::Z2Power) {
    for (int i = 0; i < dimension_; ++i)
      if (multiplicities_[i] != 0.0)
        w *= std::pow(std::abs(x[i]), 2.0 * multiplicities_[i]);
  } else {
    for (size_t r = 0; r < roots_.size(); ++r) {
      double dot = 0.0;
      for (int i = 0; i < dimension_; ++i) dot += roots_[r][i] * x[i];
      if (multiplicities_[r] != 0.0)
        w *= std::pow(std::abs(dot), 2.0 * multiplicities_[r]);
    }
  }
  return w;
}

double DunklStructure::weight_eval(double x) const { return weight_eval(std::vector<double>{x}); }

double DunklStructure::ball_measure(double r) const {
  if (r < 0.0) throw std::invalid_argument("radius must be nonnegative");
  const double D = homogeneity();
  return sphere_ * std::pow(r, D) / D;
}

double radial_integral(const DunklStructure& cfg, const RadialProfile& F,
                       double rel_tol) {
  const double D = cfg.homogeneity();
  const auto g = [&](double r) { return F.eval(r) * std::pow(r, D - 1.0); };

  double a = F.support ? std::min(1e-4, 0.5 * *F.support) : 1e-4;
  double core = 0.0;

  // tail toward 0
  double tail0 = 0.0;
  if (F.power_at_zero) {
    const double p = *F.power_at_zero;
    if (p + D <= 0.0) throw DivergentIntegral("divergent integral near r = 0");
    const double C = F.eval(a) / std::pow(a, p);
    tail0 = C * std::pow(a, p + D) / (p + D);
  } else {
    double lo = a;
    int flat = 0;
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 60; ++i) {
      const double hi = lo;
      lo *= 0.5;
      const double block = integrate(g, lo, hi, 0.0, 1e-12).value;
      tail0 += block;
      if (std::abs(block) >= std::abs(prev)) {
        if (++flat >= 8) throw DivergentIntegral("divergent integral near r = 0");
      } else {
        flat = 0;
      }
      prev = block;
      if (std::abs(block) < 1e-16 * (std::abs(tail0) + 1e-300) || lo < 1e-300) break;
    }
  }

  // core and tail toward infinity
  double b = F.support ? *F.support : 1.0;
  if (F.support) {
    core = integrate(g, a, b, 0.0, rel_tol * 0.1).value;
    return cfg.sphere_constant() * (tail0 + core);
  }
  core = integrate(g, a, b, 0.0, rel_tol * 0.1).value;
  double tail_inf = 0.0;
  if (F.power_at_inf) {
    const double p = *F.power_at_inf;
    // push the core out far enough that the power law is the whole story
    const double far = 100.0;
    core += integrate(g, b, far, 0.0, rel_tol * 0.1).value;
    if (p + D >= 0.0) throw DivergentIntegral("divergent integral near r = inf");
    const double C = F.eval(far) / std::pow(far, p);
    tail_inf = -C * std::pow(far, p + D) / (p + D);
  } else {
    int flat = 0;
    double prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 60; ++i) {
      const double hi = 2.0 * b;
      const double block = integrate(g, b, hi, 0.0, 1e-12).value;
      tail_inf += block;
      b = hi;
      if (std::abs(block) >= std::abs(prev)) {
        if (++flat >= 8) throw DivergentIntegral("divergent integral near r = inf");
      } else {
        flat = 0;
      }
      prev = block;
      if (std::abs(block) < 1e-16 * (std::abs(core + tail_inf) + 1e-300)) break;
    }
  }
  return cfg.sphere_constant() * (tail0 + core + tail_inf);
}

DunklStructure DunklStructure::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const std::string model = j.value("model", "z2_power");
  std::vector<double> ks = j.at("multiplicities").get<std::vector<double>>();
  if (model == "z2_power") {
    if (j.contains("dimension") &&
        j.at("dimension").get<int>() != static_cast<int>(ks.size()))
      throw std::invalid_argument("dimension disagrees with multiplicity count");
    return z2_power(std::move(ks));
  }
  if (model == "general_roots") {
    return general_roots(j.at("dimension").get<int>(),
                         j.at("roots").get<std::vector<std::vector<double>>>(),
                         std::move(ks));
  }
  throw std::invalid_argument("unknown model: " + model);
}

DunklStructure DunklStructure::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::string DunklStructure::to_json() const {
  nlohmann::json j;
  j["dimension"] = dimension_;
  j["model"] = model_ == ReflectionModel::Z2Power ? "z2_power" : "general_roots";
  j["multiplicities"] = multiplicities_;
  if (model_ == ReflectionModel::GeneralRoots) j["roots"] = roots_;
  return j.dump(2);
}

}  // namespace dunkl
