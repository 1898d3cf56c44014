// dunkl-kit: command-line harness for the weighted-analysis toolkit.
//
// Exit codes: 0 = all assertions pass, 1 = assertion failure,
// 2 = precondition refusal / invalid parameters.

#include "dunkl/experiments.hpp"
#include "dunkl/grid.hpp"
#include "dunkl/hardy.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/rearrangement.hpp"
#include "dunkl/structure.hpp"
#include "dunkl/weights.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

using dunkl::DunklStructure;

struct CommonOpts {
  std::string config;  // JSON file describing the reflection structure
  double k = 0.5;      // rank-one shorthand when no config is given
  std::string out;     // report destination (stdout when empty)
  std::string csv;     // optional CSV row dump
  std::uint64_t seed = 0;
  int n = 512;
  double half_width = 8.0;
  bool force = false;
};

void add_common(CLI::App* cmd, CommonOpts& c, bool grid_opts = true) {
  cmd->add_option("--config", c.config, "reflection structure JSON file");
  cmd->add_option("--k", c.k, "rank-one multiplicity (ignored with --config)");
  cmd->add_option("--out", c.out, "write the JSON report here instead of stdout");
  cmd->add_option("--csv", c.csv, "also write report rows as CSV");
  cmd->add_option("--seed", c.seed, "seed echoed into the report");
  if (grid_opts) {
    cmd->add_option("--n", c.n, "grid size (even, >= 64)");
    cmd->add_option("--half-width", c.half_width, "grid half width");
    cmd->add_flag("--force", c.force, "run even when parameters are inadmissible");
  }
}

DunklStructure load_structure(const CommonOpts& c) {
  if (!c.config.empty()) return DunklStructure::from_json_file(c.config);
  return DunklStructure::rank_one(c.k);
}

dunkl::ExperimentOptions experiment_options(const CommonOpts& c) {
  dunkl::ExperimentOptions o;
  o.cfg = load_structure(c);
  o.n = c.n;
  o.half_width = c.half_width;
  o.seed = c.seed;
  o.force = c.force;
  return o;
}

void emit(const CommonOpts& c, const std::string& json_text) {
  if (c.out.empty()) {
    std::cout << json_text << '\n';
  } else {
    std::ofstream f(c.out);
    if (!f) throw std::runtime_error("cannot open for writing: " + c.out);
    f << json_text << '\n';
  }
}

int finish_report(const CommonOpts& c, const dunkl::Report& rep) {
  emit(c, rep.to_json());
  if (!c.csv.empty()) rep.write_csv(c.csv);
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical toolkit for weighted function-space analysis"};
  app.require_subcommand(1);

  // ---- constants ----
  CommonOpts c_const;
  auto* cmd_const = app.add_subcommand("constants", "derived structure constants");
  add_common(cmd_const, c_const, false);
  double const_radius = 1.0;
  cmd_const->add_option("--radius", const_radius, "ball radius for the measure row");

  // ---- rearrange ----
  CommonOpts c_rear;
  auto* cmd_rear = app.add_subcommand("rearrange", "decreasing rearrangement");
  add_common(cmd_rear, c_rear, false);
  std::string rear_kind = "power";
  double rear_exponent = -0.5, rear_radius = 1.0, rear_height = 1.0;
  std::string rear_input;
  std::vector<double> rear_probes;
  cmd_rear->add_option("--kind", rear_kind, "power | indicator | truncated | grid");
  cmd_rear->add_option("--exponent", rear_exponent, "power exponent");
  cmd_rear->add_option("--radius", rear_radius, "support radius");
  cmd_rear->add_option("--height", rear_height, "indicator height");
  cmd_rear->add_option("--input", rear_input, "grid CSV (kind = grid)");
  cmd_rear->add_option("--t", rear_probes, "probe points t for f*(t)");

  // ---- hardy-check ----
  CommonOpts c_hardy;
  auto* cmd_hardy = app.add_subcommand("hardy-check", "weighted Hardy condition");
  add_common(cmd_hardy, c_hardy, false);
  std::string hc_mu = "t^-2", hc_theta = "1", hc_side = "direct", hc_expect;
  double hc_p = 2.0, hc_q = 2.0;
  cmd_hardy->add_option("--mu", hc_mu, "target weight, e.g. \"t^-2\" or \"3*t^-2\"");
  cmd_hardy->add_option("--theta", hc_theta, "source weight");
  cmd_hardy->add_option("--p", hc_p)->required();
  cmd_hardy->add_option("--q", hc_q)->required();
  cmd_hardy->add_option("--side", hc_side, "direct | dual");
  cmd_hardy->add_option("--expect", hc_expect, "assert verdict: finite | infinite");

  // ---- admissible ----
  CommonOpts c_adm;
  auto* cmd_adm = app.add_subcommand("admissible", "two-weight admissibility");
  add_common(cmd_adm, c_adm, false);
  double adm_p = 1.5, adm_q = 1.5, adm_r = 2.0, adm_alpha = 0.5;
  double adm_delta = -0.5, adm_beta = 0.25;
  std::string adm_expect;
  cmd_adm->add_option("--p", adm_p)->required();
  cmd_adm->add_option("--q", adm_q)->required();
  cmd_adm->add_option("--r", adm_r, "interpolation exponent, 1 < r < D/alpha");
  cmd_adm->add_option("--alpha", adm_alpha)->required();
  cmd_adm->add_option("--delta", adm_delta, "target weight |x|^delta");
  cmd_adm->add_option("--beta", adm_beta, "source weight |x|^beta");
  cmd_adm->add_option("--expect", adm_expect,
                      "assert verdict: admissible | not_admissible");

  // ---- riesz ----
  CommonOpts c_riesz;
  auto* cmd_riesz = app.add_subcommand("riesz", "Riesz potential of a grid CSV");
  add_common(cmd_riesz, c_riesz);
  double rz_alpha = 0.5;
  std::string rz_input, rz_output = "riesz_out.csv";
  bool rz_transform = false;
  cmd_riesz->add_option("--alpha", rz_alpha)->required();
  cmd_riesz->add_option("--input", rz_input, "grid CSV (x,re,im)")->required();
  cmd_riesz->add_option("--output", rz_output, "output CSV path");
  cmd_riesz->add_flag("--transform", rz_transform,
                      "apply the Riesz transform instead of the potential");

  // ---- maximal ----
  CommonOpts c_max;
  auto* cmd_max = app.add_subcommand(
      "maximal", "fractional maximal function / domination experiment");
  add_common(cmd_max, c_max);
  double mx_alpha = 0.5, mx_x = 0.0;
  std::string mx_input;
  cmd_max->add_option("--alpha", mx_alpha)->required();
  cmd_max->add_option("--input", mx_input, "grid CSV; omit for the experiment");
  cmd_max->add_option("--x", mx_x, "evaluation point (with --input)");

  // ---- riesz-bound ----
  CommonOpts c_rb;
  auto* cmd_rb = app.add_subcommand("riesz-bound", "weighted Riesz bound experiment");
  add_common(cmd_rb, c_rb);
  double rb_p = 1.5, rb_q = 1.5, rb_alpha = 0.5, rb_delta = -0.5, rb_beta = 0.25;
  double rb_tol = 0.02;
  cmd_rb->add_option("--p", rb_p)->required();
  cmd_rb->add_option("--q", rb_q)->required();
  cmd_rb->add_option("--alpha", rb_alpha)->required();
  cmd_rb->add_option("--delta", rb_delta);
  cmd_rb->add_option("--beta", rb_beta);
  cmd_rb->add_option("--tol", rb_tol, "ratio-drift tolerance");

  // ---- weak-type ----
  CommonOpts c_wt;
  auto* cmd_wt = app.add_subcommand("weak-type", "weak-type constant experiment");
  add_common(cmd_wt, c_wt);
  double wt_alpha = 0.5, wt_tol = 0.10;
  cmd_wt->add_option("--alpha", wt_alpha)->required();
  cmd_wt->add_option("--tol", wt_tol, "fitted-constant stability tolerance");

  // ---- sobolev ----
  CommonOpts c_so;
  auto* cmd_so = app.add_subcommand("sobolev", "weighted Sobolev experiment");
  add_common(cmd_so, c_so);
  double so_p = 1.5, so_q = 6.0, so_delta = 0.0, so_tol = 0.03;
  cmd_so->add_option("--p", so_p)->required();
  cmd_so->add_option("--q", so_q)->required();
  cmd_so->add_option("--delta", so_delta, "0 means u == 1");
  cmd_so->add_option("--tol", so_tol);

  // ---- power-closed-forms ----
  CommonOpts c_ex;
  auto* cmd_ex = app.add_subcommand("power-closed-forms",
                                    "closed forms vs independent quadrature");
  add_common(cmd_ex, c_ex);
  double ex_delta = -0.5, ex_beta = 1.0, ex_r = 2.0, ex_tol = 1e-3;
  cmd_ex->add_option("--delta", ex_delta);
  cmd_ex->add_option("--beta", ex_beta);
  cmd_ex->add_option("--r", ex_r);
  cmd_ex->add_option("--tol", ex_tol);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_const) {
      const auto cfg = load_structure(c_const);
      nlohmann::json j;
      j["schema"] = 1;
      j["structure"] = nlohmann::json::parse(cfg.to_json());
      j["gamma"] = cfg.gamma();
      j["homogeneity"] = cfg.homogeneity();
      j["mehta_constant"] = cfg.mehta_constant();
      j["sphere_constant"] = cfg.sphere_constant();
      j["ball_measure"] = cfg.ball_measure(const_radius);
      emit(c_const, j.dump(2));
      return 0;
    }

    if (*cmd_rear) {
      const auto cfg = load_structure(c_rear);
      dunkl::MeasurableSample sample;
      if (rear_kind == "power")
        sample = dunkl::MeasurableSample::power(rear_exponent);
      else if (rear_kind == "indicator")
        sample = dunkl::MeasurableSample::indicator(rear_radius, rear_height);
      else if (rear_kind == "truncated")
        sample = dunkl::MeasurableSample::truncated_power(rear_exponent, rear_radius);
      else if (rear_kind == "grid")
        sample = dunkl::MeasurableSample::from_grid(
            dunkl::read_csv(rear_input, cfg.gamma()));
      else
        throw std::invalid_argument("unknown sample kind: " + rear_kind);
      const auto prof = dunkl::decreasing_rearrangement(sample, cfg);
      nlohmann::json j;
      j["schema"] = 1;
      j["profile"] = nlohmann::json::parse(prof.to_json());
      for (double t : rear_probes)
        j["probes"].push_back({{"t", t}, {"value", prof(t)}});
      emit(c_rear, j.dump(2));
      return 0;
    }

    if (*cmd_hardy) {
      const auto mu = dunkl::LineWeight::parse(hc_mu);
      const auto theta = dunkl::LineWeight::parse(hc_theta);
      const auto side = hc_side == "dual" ? dunkl::HardySide::Dual
                                          : dunkl::HardySide::Direct;
      const auto rep = dunkl::hardy_condition(mu, theta, hc_p, hc_q, side);
      nlohmann::json j;
      j["schema"] = 1;
      const char* verdict = rep.verdict == dunkl::HardyVerdict::Finite ? "finite"
                            : rep.verdict == dunkl::HardyVerdict::Infinite
                                ? "infinite"
                                : "cannot_classify";
      j["verdict"] = verdict;
      j["sup"] = std::isinf(rep.sup) ? -1.0 : rep.sup;
      j["argmax_s"] = std::isinf(rep.argmax_s) ? -1.0 : rep.argmax_s;
      j["witness"] = rep.witness;
      emit(c_hardy, j.dump(2));
      if (!hc_expect.empty() && hc_expect != verdict) return 1;
      return 0;
    }

    if (*cmd_adm) {
      const auto cfg = load_structure(c_adm);
      const auto u_star = dunkl::decreasing_rearrangement(
          dunkl::MeasurableSample::power(adm_delta), cfg);
      const auto invv_star =
          dunkl::reciprocal_rearrangement(dunkl::WeightSpec::power(adm_beta), cfg);
      const auto direct = dunkl::riesz_conditions(u_star, invv_star, adm_p, adm_q,
                                                  adm_r, adm_alpha, cfg);
      const auto viawt = dunkl::weak_type_conditions(
          u_star, invv_star, adm_p, adm_q,
          dunkl::WeakTypePair::riesz(adm_alpha, adm_r, cfg.homogeneity()));
      nlohmann::json j;
      j["schema"] = 1;
      j["riesz_conditions"] = nlohmann::json::parse(direct.to_json());
      j["weak_type_route"] = nlohmann::json::parse(viawt.to_json());
      j["routes_agree"] = direct.verdict == viawt.verdict;
      emit(c_adm, j.dump(2));
      const std::string verdict = j["riesz_conditions"]["verdict"];
      if (!adm_expect.empty() && adm_expect != verdict) return 1;
      return direct.verdict == viawt.verdict ? 0 : 1;
    }

    if (*cmd_riesz) {
      const auto cfg = load_structure(c_riesz);
      if (cfg.dimension() != 1)
        throw std::invalid_argument("grid operators need a rank-one structure");
      const auto f = dunkl::read_csv(rz_input, cfg.gamma());
      const dunkl::DunklEngine1D engine(f.grid, f.k);
      const auto out = rz_transform ? engine.riesz_transform(f)
                                    : engine.riesz_potential(f, rz_alpha);
      dunkl::write_csv(rz_output, out);
      nlohmann::json j;
      j["schema"] = 1;
      j["output"] = rz_output;
      j["max_abs"] = out.max_abs();
      emit(c_riesz, j.dump(2));
      return 0;
    }

    if (*cmd_max) {
      if (mx_input.empty())
        return finish_report(c_max, dunkl::run_maximal_domination(
                                        experiment_options(c_max), mx_alpha));
      const auto cfg = load_structure(c_max);
      if (cfg.dimension() != 1)
        throw std::invalid_argument("grid operators need a rank-one structure");
      const auto f = dunkl::read_csv(mx_input, cfg.gamma());
      const dunkl::DunklEngine1D engine(f.grid, f.k);
      const auto res = engine.fractional_maximal(f, mx_alpha, mx_x);
      nlohmann::json j;
      j["schema"] = 1;
      j["value"] = res.value;
      j["clamped_mass_fraction"] = res.clamped_mass_fraction;
      j["clamp_warning"] = res.clamp_warning;
      emit(c_max, j.dump(2));
      return 0;
    }

    if (*cmd_rb)
      return finish_report(c_rb, dunkl::run_riesz_bound(experiment_options(c_rb),
                                                        rb_p, rb_q, rb_alpha,
                                                        rb_delta, rb_beta, rb_tol));
    if (*cmd_wt)
      return finish_report(
          c_wt, dunkl::run_weak_type(experiment_options(c_wt), wt_alpha, wt_tol));
    if (*cmd_so)
      return finish_report(c_so, dunkl::run_sobolev(experiment_options(c_so), so_p,
                                                    so_q, so_delta, so_tol));
    if (*cmd_ex)
      return finish_report(c_ex, dunkl::run_power_closed_forms(experiment_options(c_ex),
                                                      ex_delta, ex_beta, ex_r,
                                                      ex_tol));
  } catch (const std::invalid_argument& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 2;
  } catch (const dunkl::DivergentIntegral& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
