#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgreg/regression.hpp"
#include "pgreg/rng.hpp"
#include "pgreg/stats.hpp"
#include "pgreg/test_functions.hpp"

namespace pgreg {

inline constexpr std::uint64_t kDefaultMasterSeed = 26;

// Stream layout: stream 0 draws the design (once per run), stream 1 + r
// draws the noise of replication r.
inline constexpr std::uint64_t kDesignStream = 0;
inline constexpr std::uint64_t kNoiseStreamBase = 1;

enum class EstimatorId {
  periodic_gauss,
  periodic_gauss_unpenalized_const,
  periodic_spline,
  plain_gauss,
};

inline std::string estimator_name(EstimatorId id) {
  switch (id) {
    case EstimatorId::periodic_gauss: return "periodic_gauss";
    case EstimatorId::periodic_gauss_unpenalized_const:
      return "periodic_gauss_unpenalized_const";
    case EstimatorId::periodic_spline: return "periodic_spline";
    case EstimatorId::plain_gauss: return "plain_gauss";
  }
  return "unknown";
}

inline EstimatorId estimator_from_name(const std::string& name) {
  if (name == "periodic_gauss") return EstimatorId::periodic_gauss;
  if (name == "periodic_gauss_unpenalized_const")
    return EstimatorId::periodic_gauss_unpenalized_const;
  if (name == "periodic_spline") return EstimatorId::periodic_spline;
  if (name == "plain_gauss") return EstimatorId::plain_gauss;
  throw std::invalid_argument("unknown estimator: " + name);
}

// Tuning grids of the simulation study: omega = 0.3 k1 - 0.1 for
// k1 = 1..10, lambda = exp(7 - 0.4 k2) for k2 = 1..50. The spline
// estimator searches lambda only.
inline std::vector<double> table1_omega_grid() {
  std::vector<double> grid(10);
  for (int k = 1; k <= 10; ++k) grid[k - 1] = 0.3 * k - 0.1;
  return grid;
}

inline std::vector<double> table1_lambda_grid() {
  std::vector<double> grid(50);
  for (int k = 1; k <= 50; ++k) grid[k - 1] = std::exp(7.0 - 0.4 * k);
  return grid;
}

// Contour grids: omega = sqrt(k1/5), lambda = exp(-k2/5), k1, k2 = 1..100.
inline double contour_omega(int k1) { return std::sqrt(k1 / 5.0); }
inline double contour_lambda(int k2) { return std::exp(-k2 / 5.0); }

struct ExperimentConfig {
  TestFunctionId function = TestFunctionId::f1;
  std::size_t n = 100;
  std::size_t replications = 100;
  DesignKind design = DesignKind::equidistant;
  std::vector<double> lambda_grid = table1_lambda_grid();
  std::vector<double> omega_grid = table1_omega_grid();
  std::vector<EstimatorId> estimators;  // empty = subcommand default
  std::uint64_t master_seed = kDefaultMasterSeed;
  double sigma2 = 1.0;  // noise variance, also used in the C_p penalty

  void validate() const {
    if (n < 4) throw std::invalid_argument("ExperimentConfig: need n >= 4");
    if (replications < 1)
      throw std::invalid_argument("ExperimentConfig: need replications >= 1");
    if (lambda_grid.empty() || omega_grid.empty())
      throw std::invalid_argument("ExperimentConfig: empty grid");
    if (sigma2 < 0.0)
      throw std::invalid_argument("ExperimentConfig: negative sigma2");
  }
};

struct EstimatorSummary {
  EstimatorId id = EstimatorId::periodic_gauss;
  double mean_ase = 0.0;
  double sd_ase = 0.0;
  std::vector<double> ase;  // one entry per replication
};

struct PairedComparison {
  std::string pair;
  PairedTestResult test;
};

struct Table1Report {
  ExperimentConfig config;
  std::vector<double> design;
  std::vector<EstimatorSummary> estimators;
  std::vector<PairedComparison> tests;
};

namespace detail {

struct EstimatorPlan {
  EstimatorId id;
  FitVariant variant;
  // indices into the shared eigendecomposition pool, one per omega
  // candidate (a single entry for the spline).
  std::vector<std::size_t> eigen_indices;
};

// Selects the C_p-minimizing cell of an estimator's grid for one rotated
// observation vector and returns the averaged squared error there.
// Tie-breaking matches tune_fit: larger lambda first, then smaller omega.
inline double ase_of_selected_cell(
    const EstimatorPlan& plan, const std::vector<KernelEigen>& pool,
    const std::vector<Eigen::VectorXd>& y_spectral,
    const std::vector<Eigen::VectorXd>& truth_spectral,
    const std::vector<double>& lambda_grid, double sigma2) {
  double best_cp = std::numeric_limits<double>::infinity();
  double best_lambda = 0.0;
  double best_omega = 0.0;
  std::size_t best_eigen = 0;
  bool first = true;
  for (std::size_t e : plan.eigen_indices) {
    const double omega = pool[e].spec().omega;
    for (double lambda : lambda_grid) {
      const double cp =
          pool[e].cp_path(y_spectral[e], lambda, plan.variant, sigma2).cp;
      const bool wins = first || cp < best_cp ||
                        (cp == best_cp &&
                         (lambda > best_lambda ||
                          (lambda == best_lambda && omega < best_omega)));
      if (wins) {
        first = false;
        best_cp = cp;
        best_lambda = lambda;
        best_omega = omega;
        best_eigen = e;
      }
    }
  }
  return pool[best_eigen].ase_path(y_spectral[best_eigen],
                                   truth_spectral[best_eigen], best_lambda,
                                   plan.variant);
}

}  // namespace detail

// Shared engine for the replication studies: one design, fresh noise per
// replication, every estimator tuned by C_p on its grid, averaged squared
// error recorded at the selected cell.
inline Table1Report run_experiment(const ExperimentConfig& config) {
  config.validate();
  if (config.estimators.empty())
    throw std::invalid_argument("run_experiment: no estimators");

  Table1Report report;
  report.config = config;

  RngStream design_rng(config.master_seed, kDesignStream);
  report.design = make_design(config.design, config.n, design_rng);

  std::vector<double> truth(config.n);
  for (std::size_t j = 0; j < config.n; ++j)
    truth[j] = eval_test_function(config.function, report.design[j]);

  // Eigendecomposition pool, shared across estimators and replications.
  std::vector<KernelEigen> pool;
  std::vector<detail::EstimatorPlan> plans;
  std::vector<std::size_t> periodic_indices;  // per omega, shared by both
                                              // periodic Gaussian variants
  auto periodic_pool = [&]() -> const std::vector<std::size_t>& {
    if (periodic_indices.empty())
      for (double omega : config.omega_grid) {
        pool.emplace_back(report.design, KernelSpec::periodic_gaussian(omega));
        periodic_indices.push_back(pool.size() - 1);
      }
    return periodic_indices;
  };
  for (EstimatorId id : config.estimators) {
    detail::EstimatorPlan plan;
    plan.id = id;
    switch (id) {
      case EstimatorId::periodic_gauss:
        plan.variant = FitVariant::penalized;
        plan.eigen_indices = periodic_pool();
        break;
      case EstimatorId::periodic_gauss_unpenalized_const:
        plan.variant = FitVariant::unpenalized_constant;
        plan.eigen_indices = periodic_pool();
        break;
      case EstimatorId::periodic_spline:
        plan.variant = FitVariant::unpenalized_constant;
        pool.emplace_back(report.design, KernelSpec::periodic_spline());
        plan.eigen_indices = {pool.size() - 1};
        break;
      case EstimatorId::plain_gauss:
        plan.variant = FitVariant::penalized;
        for (double omega : config.omega_grid) {
          pool.emplace_back(report.design, KernelSpec::plain_gaussian(omega));
          plan.eigen_indices.push_back(pool.size() - 1);
        }
        break;
    }
    plans.push_back(std::move(plan));
  }

  const Eigen::VectorXd truth_vec = Eigen::Map<const Eigen::VectorXd>(
      truth.data(), static_cast<Eigen::Index>(truth.size()));
  std::vector<Eigen::VectorXd> truth_spectral(pool.size());
  for (std::size_t e = 0; e < pool.size(); ++e)
    truth_spectral[e] = pool[e].to_spectral(truth_vec);

  std::vector<std::vector<double>> ases(
      plans.size(), std::vector<double>(config.replications));
  const double noise_sd = std::sqrt(config.sigma2);
  std::vector<Eigen::VectorXd> y_spectral(pool.size());
  Eigen::VectorXd y(static_cast<Eigen::Index>(config.n));
  for (std::size_t r = 0; r < config.replications; ++r) {
    RngStream noise_rng(config.master_seed, kNoiseStreamBase + r);
    for (std::size_t j = 0; j < config.n; ++j)
      y[static_cast<Eigen::Index>(j)] = truth[j] + noise_sd * noise_rng.normal();
    for (std::size_t e = 0; e < pool.size(); ++e)
      y_spectral[e] = pool[e].to_spectral(y);
    for (std::size_t p = 0; p < plans.size(); ++p)
      ases[p][r] =
          detail::ase_of_selected_cell(plans[p], pool, y_spectral,
                                       truth_spectral, config.lambda_grid,
                                       config.sigma2);
  }

  for (std::size_t p = 0; p < plans.size(); ++p) {
    EstimatorSummary summary;
    summary.id = plans[p].id;
    summary.ase = ases[p];
    if (config.replications >= 2) {
      const auto [m, sd] = mean_sd(summary.ase);
      summary.mean_ase = m;
      summary.sd_ase = sd;
    } else {
      summary.mean_ase = summary.ase[0];
      summary.sd_ase = 0.0;
    }
    report.estimators.push_back(std::move(summary));
  }

  if (config.replications >= 2)
    for (std::size_t i = 0; i < plans.size(); ++i)
      for (std::size_t j = i + 1; j < plans.size(); ++j) {
        PairedComparison cmp;
        cmp.pair = estimator_name(plans[i].id) + "_vs_" +
                   estimator_name(plans[j].id);
        cmp.test = paired_t_test(ases[i], ases[j]);
        report.tests.push_back(std::move(cmp));
      }

  return report;
}

// Replication study comparing the periodic estimators (the spline baseline
// and both periodic Gaussian variants).
inline Table1Report run_table1(ExperimentConfig config) {
  if (config.estimators.empty())
    config.estimators = {EstimatorId::periodic_spline,
                         EstimatorId::periodic_gauss,
                         EstimatorId::periodic_gauss_unpenalized_const};
  return run_experiment(config);
}

// Same protocol with the nonperiodic Gaussian kernel against the periodic
// one.
inline Table1Report run_nonperiodic_comparison(ExperimentConfig config) {
  if (config.estimators.empty())
    config.estimators = {EstimatorId::plain_gauss,
                         EstimatorId::periodic_gauss};
  return run_experiment(config);
}

struct ContourGrid {
  TestFunctionId function = TestFunctionId::f1;
  DesignKind design_kind = DesignKind::equidistant;
  std::uint64_t master_seed = kDefaultMasterSeed;
  std::size_t n = 100;
  // ase[(k1 - 1) * 100 + (k2 - 1)] for k1, k2 = 1..100.
  std::vector<double> ase;
  double min_ase = 0.0;
  std::vector<double> levels;

  double at(int k1, int k2) const {
    return ase[static_cast<std::size_t>(k1 - 1) * 100 +
               static_cast<std::size_t>(k2 - 1)];
  }
};

// One dataset, averaged squared error of the penalized periodic Gaussian
// fit over the full 100 x 100 (omega, lambda) grid. One eigendecomposition
// per omega serves its whole lambda column.
inline ContourGrid run_contour(TestFunctionId function, DesignKind design_kind,
                               std::uint64_t master_seed,
                               std::size_t n = 100) {
  ContourGrid grid;
  grid.function = function;
  grid.design_kind = design_kind;
  grid.master_seed = master_seed;
  grid.n = n;
  grid.ase.resize(100 * 100);

  RngStream design_rng(master_seed, kDesignStream);
  const std::vector<double> design = make_design(design_kind, n, design_rng);

  Eigen::VectorXd truth(static_cast<Eigen::Index>(n));
  Eigen::VectorXd y(static_cast<Eigen::Index>(n));
  RngStream noise_rng(master_seed, kNoiseStreamBase);
  for (std::size_t j = 0; j < n; ++j) {
    truth[static_cast<Eigen::Index>(j)] =
        eval_test_function(function, design[j]);
    y[static_cast<Eigen::Index>(j)] =
        truth[static_cast<Eigen::Index>(j)] + noise_rng.normal();
  }

  double min_ase = std::numeric_limits<double>::infinity();
  for (int k1 = 1; k1 <= 100; ++k1) {
    const KernelEigen eigen(design,
                            KernelSpec::periodic_gaussian(contour_omega(k1)));
    const Eigen::VectorXd y_spectral = eigen.to_spectral(y);
    const Eigen::VectorXd truth_spectral = eigen.to_spectral(truth);
    for (int k2 = 1; k2 <= 100; ++k2) {
      const double ase =
          eigen.ase_path(y_spectral, truth_spectral, contour_lambda(k2),
                         FitVariant::penalized);
      grid.ase[static_cast<std::size_t>(k1 - 1) * 100 +
               static_cast<std::size_t>(k2 - 1)] = ase;
      min_ase = std::min(min_ase, ase);
    }
  }
  grid.min_ase = min_ase;
  for (double scale : {1.01, 1.05, 1.1, 1.2, 1.5, 2.0, 3.0, 4.0, 5.0, 6.0})
    grid.levels.push_back(scale * min_ase);
  return grid;
}

}  // namespace pgreg
