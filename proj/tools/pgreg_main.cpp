// Command-line front end: fitting, tuning, prediction, and the simulation
// experiments, all writing deterministic CSV/JSON artifacts.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pgreg/pgreg.hpp"

namespace {

pgreg::KernelKind kernel_from_flag(const std::string& name) {
  if (name == "periodic-gaussian") return pgreg::KernelKind::periodic_gaussian;
  if (name == "plain-gaussian") return pgreg::KernelKind::plain_gaussian;
  if (name == "periodic-spline") return pgreg::KernelKind::periodic_spline;
  throw CLI::ValidationError("--kernel", "unknown kernel: " + name);
}

pgreg::FitVariant variant_from_flag(const std::string& name) {
  if (name == "penalized") return pgreg::FitVariant::penalized;
  if (name == "unpenalized-const")
    return pgreg::FitVariant::unpenalized_constant;
  throw CLI::ValidationError("--variant", "unknown variant: " + name);
}

pgreg::KernelSpec spec_for(pgreg::KernelKind kind, double omega) {
  switch (kind) {
    case pgreg::KernelKind::periodic_gaussian:
      return pgreg::KernelSpec::periodic_gaussian(omega);
    case pgreg::KernelKind::plain_gaussian:
      return pgreg::KernelSpec::plain_gaussian(omega);
    case pgreg::KernelKind::periodic_spline:
      return pgreg::KernelSpec::periodic_spline();
  }
  throw std::logic_error("unreachable");
}

std::vector<pgreg::EstimatorId> estimators_from_flag(
    const std::string& list) {
  std::vector<pgreg::EstimatorId> ids;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = list.find(',', start);
    const std::string token =
        list.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    if (!token.empty()) ids.push_back(pgreg::estimator_from_name(token));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return ids;
}

struct ExperimentFlags {
  std::string function = "f1";
  std::size_t n = 100;
  std::size_t reps = 100;
  std::string design = "equidistant";
  std::uint64_t seed = pgreg::kDefaultMasterSeed;
  double sigma2 = 1.0;
  std::string estimators;
  std::string out;
};

void add_experiment_flags(CLI::App* cmd, ExperimentFlags& flags) {
  cmd->add_option("--function", flags.function, "test function (f1..f4)");
  cmd->add_option("--n", flags.n, "sample size");
  cmd->add_option("--reps", flags.reps, "number of replications");
  cmd->add_option("--design", flags.design,
                  "design kind (equidistant|nonequidistant)");
  cmd->add_option("--seed", flags.seed, "master seed");
  cmd->add_option("--sigma2", flags.sigma2, "noise variance");
  cmd->add_option("--estimators", flags.estimators,
                  "comma list of estimators");
  cmd->add_option("--out", flags.out, "output report path (JSON)");
}

pgreg::ExperimentConfig config_from_flags(const ExperimentFlags& flags) {
  pgreg::ExperimentConfig config;
  config.function = pgreg::test_function_from_name(flags.function);
  config.n = flags.n;
  config.replications = flags.reps;
  config.design = pgreg::design_from_name(flags.design);
  config.master_seed = flags.seed;
  config.sigma2 = flags.sigma2;
  if (!flags.estimators.empty())
    config.estimators = estimators_from_flag(flags.estimators);
  return config;
}

void emit_report(const pgreg::Table1Report& report, const std::string& out) {
  if (out.empty())
    std::cout << pgreg::report_to_json(report).dump(2) << '\n';
  else
    pgreg::write_report_json(out, report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"periodic Gaussian kernel regularization toolkit"};
  app.require_subcommand(1);

  // fit
  std::string fit_data, fit_kernel = "periodic-gaussian",
              fit_variant = "penalized", fit_out;
  double fit_omega = 1.0, fit_lambda = 0.0, fit_sigma2 = 1.0;
  CLI::App* fit_cmd = app.add_subcommand("fit", "fit at fixed (omega, lambda)");
  fit_cmd->add_option("--data", fit_data, "input CSV with header x,y")
      ->required();
  fit_cmd->add_option("--kernel", fit_kernel,
                      "periodic-gaussian|plain-gaussian|periodic-spline");
  fit_cmd->add_option("--omega", fit_omega, "kernel width");
  fit_cmd->add_option("--lambda", fit_lambda, "penalty level")->required();
  fit_cmd->add_option("--variant", fit_variant,
                      "penalized|unpenalized-const");
  fit_cmd->add_option("--sigma2", fit_sigma2, "noise variance for C_p");
  fit_cmd->add_option("--out", fit_out, "output model path (JSON)")
      ->required();

  // predict
  std::string predict_model, predict_out;
  std::vector<double> predict_x;
  std::size_t predict_grid = 0;
  CLI::App* predict_cmd =
      app.add_subcommand("predict", "evaluate a saved model");
  predict_cmd->add_option("--model", predict_model, "model JSON path")
      ->required();
  predict_cmd->add_option("--x", predict_x, "evaluation points");
  predict_cmd->add_option("--grid", predict_grid,
                          "evaluate on an equidistant grid of this size");
  predict_cmd->add_option("--out", predict_out, "output CSV path");

  // tune
  std::string tune_data, tune_kernel = "periodic-gaussian",
              tune_variant = "penalized", tune_out;
  double tune_sigma2 = 1.0;
  CLI::App* tune_cmd =
      app.add_subcommand("tune", "C_p tuning over the standard grids");
  tune_cmd->add_option("--data", tune_data, "input CSV with header x,y")
      ->required();
  tune_cmd->add_option("--kernel", tune_kernel,
                       "periodic-gaussian|plain-gaussian|periodic-spline");
  tune_cmd->add_option("--variant", tune_variant,
                       "penalized|unpenalized-const");
  tune_cmd->add_option("--sigma2", tune_sigma2, "noise variance for C_p");
  tune_cmd->add_option("--out", tune_out, "output model path (JSON)");

  // table1 / nonperiodic
  ExperimentFlags table1_flags;
  CLI::App* table1_cmd =
      app.add_subcommand("table1", "replication study of the periodic fits");
  add_experiment_flags(table1_cmd, table1_flags);

  ExperimentFlags nonper_flags;
  CLI::App* nonper_cmd = app.add_subcommand(
      "nonperiodic", "periodic vs plain Gaussian replication study");
  add_experiment_flags(nonper_cmd, nonper_flags);

  // contour
  std::string contour_function = "f1", contour_design = "equidistant",
              contour_out;
  std::uint64_t contour_seed = pgreg::kDefaultMasterSeed;
  std::size_t contour_n = 100;
  CLI::App* contour_cmd = app.add_subcommand(
      "contour", "ASE over the (omega, lambda) grid for one dataset");
  contour_cmd->add_option("--function", contour_function, "test function");
  contour_cmd->add_option("--design", contour_design,
                          "equidistant|nonequidistant");
  contour_cmd->add_option("--seed", contour_seed, "master seed");
  contour_cmd->add_option("--n", contour_n, "sample size");
  contour_cmd->add_option("--out", contour_out, "output CSV path")->required();

  // asymptotics
  double asy_m = 1.0, asy_q = 1.0, asy_alpha = 1.0, asy_omega = 1.0;
  long asy_n = 100;
  CLI::App* asy_cmd = app.add_subcommand(
      "asymptotics", "closed-form risk values and efficiency constants");
  asy_cmd->add_option("--m", asy_m, "Sobolev smoothness");
  asy_cmd->add_option("--q", asy_q, "ellipsoid radius Q");
  asy_cmd->add_option("--n", asy_n, "sample size");
  asy_cmd->add_option("--alpha", asy_alpha, "analytic-class parameter");
  asy_cmd->add_option("--omega", asy_omega, "kernel width");

  // pinsker
  std::string pin_kind = "infinite-order";
  double pin_m = 1.0, pin_alpha = 1.0, pin_omega = 1.0, pin_q = 1.0;
  long pin_n = 100;
  CLI::App* pin_cmd =
      app.add_subcommand("pinsker", "linear minimax risk on an ellipsoid");
  pin_cmd->add_option("--kind", pin_kind, "sobolev|analytic|infinite-order");
  pin_cmd->add_option("--m", pin_m, "Sobolev smoothness");
  pin_cmd->add_option("--alpha", pin_alpha, "analytic-class parameter");
  pin_cmd->add_option("--omega", pin_omega, "infinite-order width");
  pin_cmd->add_option("--q", pin_q, "ellipsoid radius Q");
  pin_cmd->add_option("--n", pin_n, "sample size");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fit_cmd->parsed()) {
      const pgreg::RegressionData data = pgreg::read_xy_csv(fit_data);
      const pgreg::KernelKind kind = kernel_from_flag(fit_kernel);
      const pgreg::KernelEigen eigen(data.x, spec_for(kind, fit_omega));
      const pgreg::FitResult fit =
          eigen.fit(data, fit_lambda, variant_from_flag(fit_variant),
                    fit_sigma2);
      pgreg::write_model_json(fit_out, fit);
      std::cout << "cp " << pgreg::format_g17(fit.cp) << " trace "
                << pgreg::format_g17(fit.smoother_trace) << '\n';
    } else if (predict_cmd->parsed()) {
      const pgreg::FitResult fit = pgreg::read_model_json(predict_model);
      std::vector<double> xs = predict_x;
      if (predict_grid > 0)
        for (std::size_t j = 1; j <= predict_grid; ++j)
          xs.push_back(-std::numbers::pi +
                       2.0 * std::numbers::pi * static_cast<double>(j) /
                           static_cast<double>(predict_grid));
      if (xs.empty())
        throw std::invalid_argument("predict: give --x or --grid");
      std::vector<double> yhat(xs.size());
      for (std::size_t j = 0; j < xs.size(); ++j)
        yhat[j] = pgreg::predict(fit, xs[j]);
      if (predict_out.empty()) {
        std::cout << "x,yhat\n";
        for (std::size_t j = 0; j < xs.size(); ++j)
          std::cout << pgreg::format_g17(xs[j]) << ','
                    << pgreg::format_g17(yhat[j]) << '\n';
      } else {
        std::ofstream out(predict_out);
        if (!out)
          throw std::runtime_error("cannot open for writing: " + predict_out);
        out << "x,yhat\n";
        for (std::size_t j = 0; j < xs.size(); ++j)
          out << pgreg::format_g17(xs[j]) << ','
              << pgreg::format_g17(yhat[j]) << '\n';
      }
    } else if (tune_cmd->parsed()) {
      const pgreg::RegressionData data = pgreg::read_xy_csv(tune_data);
      const pgreg::TunedFit tuned = pgreg::tune_fit(
          data, kernel_from_flag(tune_kernel), pgreg::table1_lambda_grid(),
          pgreg::table1_omega_grid(), variant_from_flag(tune_variant),
          tune_sigma2);
      std::cout << "lambda_star " << pgreg::format_g17(tuned.lambda_star)
                << " omega_star " << pgreg::format_g17(tuned.omega_star)
                << " cp " << pgreg::format_g17(tuned.cp_star) << '\n';
      if (!tune_out.empty()) pgreg::write_model_json(tune_out, tuned.fit);
    } else if (table1_cmd->parsed()) {
      emit_report(pgreg::run_table1(config_from_flags(table1_flags)),
                  table1_flags.out);
    } else if (nonper_cmd->parsed()) {
      emit_report(
          pgreg::run_nonperiodic_comparison(config_from_flags(nonper_flags)),
          nonper_flags.out);
    } else if (contour_cmd->parsed()) {
      const pgreg::ContourGrid grid = pgreg::run_contour(
          pgreg::test_function_from_name(contour_function),
          pgreg::design_from_name(contour_design), contour_seed, contour_n);
      pgreg::write_contour_csv(contour_out, grid);
      std::cout << "min_ase " << pgreg::format_g17(grid.min_ase) << '\n';
    } else if (asy_cmd->parsed()) {
      const pgreg::Efficiency eff = pgreg::efficiency_Hm(asy_m);
      std::cout << "minimax_Hinf(omega, n)        "
                << pgreg::format_g17(
                       pgreg::asymptotic_minimax_Hinf(asy_omega, asy_n))
                << '\n'
                << "gauss_risk_Hm(m, Q, n)        "
                << pgreg::format_g17(pgreg::gauss_risk_Hm(asy_m, asy_q, asy_n))
                << '\n'
                << "minimax_Hm(m, Q, n)           "
                << pgreg::format_g17(pgreg::minimax_Hm(asy_m, asy_q, asy_n))
                << '\n'
                << "log_inv_lambda_Hm             "
                << pgreg::format_g17(pgreg::optimal_log_inv_lambda_Hm(
                       asy_m, asy_q, asy_n, asy_omega))
                << '\n'
                << "risk_analytic(alpha, n)       "
                << pgreg::format_g17(pgreg::risk_analytic(asy_alpha, asy_n))
                << '\n'
                << "log_inv_lambda_analytic       "
                << pgreg::format_g17(pgreg::optimal_log_inv_lambda_analytic(
                       asy_alpha, asy_n, asy_omega))
                << '\n'
                << "risk_ratio(m)                 "
                << pgreg::format_g17(eff.risk_ratio) << '\n'
                << "sample_efficiency(m)          "
                << pgreg::format_g17(eff.sample_efficiency) << '\n';
    } else if (pin_cmd->parsed()) {
      pgreg::EllipsoidSpec spec = pgreg::EllipsoidSpec::infinite_order(
          pin_omega, pin_q);
      if (pin_kind == "sobolev")
        spec = pgreg::EllipsoidSpec::sobolev(pin_m, pin_q);
      else if (pin_kind == "analytic")
        spec = pgreg::EllipsoidSpec::analytic(pin_alpha, pin_q);
      else if (pin_kind != "infinite-order")
        throw std::invalid_argument("pinsker: unknown kind " + pin_kind);
      const pgreg::PinskerSolution sol = pgreg::pinsker_solve(spec, pin_n);
      std::cout << "mu " << pgreg::format_g17(sol.mu) << " cutoff "
                << sol.cutoff << " risk " << pgreg::format_g17(sol.risk)
                << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
