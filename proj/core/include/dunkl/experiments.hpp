#pragma once

#include "dunkl/structure.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dunkl {

/// Shared knobs for the experiment runners (d = 1 engine experiments require
/// a rank-one structure).
struct ExperimentOptions {
  DunklStructure cfg = DunklStructure::rank_one(0.5);
  int n = 512;              // grid size
  double half_width = 8.0;  // grid half width
  std::uint64_t seed = 0;
  bool force = false;       // run even when parameters fail admissibility
};

struct ReportRow {
  std::string label;
  std::map<std::string, double> values;  // ordered -> deterministic output
  bool pass = true;
};

struct Report {
  std::string experiment;
  std::map<std::string, double> params;
  std::vector<ReportRow> rows;
  bool pass = true;
  std::uint64_t seed = 0;

  std::string to_json() const;  // versioned with "schema": 1
  void write_csv(const std::string& path) const;
};

/// Dilation-family check of || I_alpha f ||_{q,u} <= c || f ||_{p,v} for
/// u = |x|^delta, v = |x|^beta: the ratio must be lambda-independent when
/// the exponents balance. Throws std::invalid_argument on inadmissible
/// parameters unless opts.force.
Report run_riesz_bound(const ExperimentOptions& opts, double p, double q,
                       double alpha, double delta, double beta, double tol = 0.02);

/// Weak-type (1, 1/(1-alpha/D)) bound for I_alpha on a bump: fitted constant
/// across a log grid of levels, checked stable under grid doubling.
Report run_weak_type(const ExperimentOptions& opts, double alpha, double tol = 0.10);

/// Pointwise domination M_{k,alpha} f <= c I_alpha(|f|) across the grid for
/// a family of test functions, with a single fitted c.
Report run_maximal_domination(const ExperimentOptions& opts, double alpha,
                              double uniformity_factor = 3.0);

/// Dilation-family check of || f ||_{q,u} <= c || grad_k f ||_p with
/// u = |x|^delta (delta = 0 means u == 1 and the conformal exponent rule).
Report run_sobolev(const ExperimentOptions& opts, double p, double q, double delta,
                   double tol = 0.03);

/// Closed forms of the power-weight/indicator example (distribution
/// functions, rearrangements, pairing equalities) against an independent
/// adaptive-quadrature path. Valid for any dimension in the structure.
Report run_power_closed_forms(const ExperimentOptions& opts, double delta, double beta,
                     double r, double tol = 1e-3);

}  // namespace dunkl
