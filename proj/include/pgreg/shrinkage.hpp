#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "pgreg/sequence.hpp"
#include "pgreg/weights.hpp"

namespace pgreg {

// Diagonal shrinkage filter tau_l = 1 / (1 + lambda * beta_l) applied to
// sequence observations. The estimator is theta_hat_l = tau_l * y_l.
struct ShrinkageProfile {
  double lambda = 0.0;
  PenaltySpec penalty{PenaltyKind::periodic_gaussian, 1.0, true};
  std::vector<double> tau;

  std::size_t truncation() const { return tau.empty() ? 0 : tau.size() - 1; }
};

namespace detail {
// Adaptive truncation: smallest even index L with tau_L < 1e-16. All
// dropped terms are then below double rounding in every risk sum.
inline constexpr double kTauFloor = 1e-16;
inline constexpr std::size_t kMaxProfileLength = 1u << 25;
}  // namespace detail

inline ShrinkageProfile shrink_weights(double lambda,
                                       const PenaltySpec& penalty,
                                       std::size_t truncation) {
  if (lambda < 0.0) throw std::invalid_argument("shrink_weights: lambda < 0");
  ShrinkageProfile profile{lambda, penalty, {}};
  profile.tau.resize(truncation + 1);
  for (std::size_t l = 0; l <= truncation; ++l)
    profile.tau[l] = 1.0 / (1.0 + lambda * penalty_weight(penalty, l));
  return profile;
}

inline ShrinkageProfile shrink_weights(double lambda,
                                       const PenaltySpec& penalty) {
  if (lambda < 0.0) throw std::invalid_argument("shrink_weights: lambda < 0");
  if (lambda == 0.0)
    throw std::invalid_argument(
        "shrink_weights: lambda = 0 needs an explicit truncation");
  ShrinkageProfile profile{lambda, penalty, {}};
  for (std::size_t l = 0;; ++l) {
    if (l >= detail::kMaxProfileLength)
      throw std::length_error("shrink_weights: truncation did not converge");
    const double tau = 1.0 / (1.0 + lambda * penalty_weight(penalty, l));
    profile.tau.push_back(tau);
    if (l % 2 == 0 && l > 0 && tau < detail::kTauFloor) break;
  }
  return profile;
}

inline CoefficientVector apply(const ShrinkageProfile& profile,
                               const SequenceObservations& obs) {
  if (profile.tau.size() != obs.y.size())
    throw std::invalid_argument("apply: profile/observation length mismatch");
  CoefficientVector estimate(obs.y.size());
  for (std::size_t l = 0; l < obs.y.size(); ++l)
    estimate[l] = profile.tau[l] * obs.y[l];
  return estimate;
}

// Exact mean squared error of the filter at a given truth:
//   variance  (1/n) Sum tau_l^2
//   bias_sq   Sum (1 - tau_l)^2 theta_l^2
// Coefficients beyond either vector's length are treated as zero.
struct RiskBreakdown {
  double variance = 0.0;
  double bias_sq = 0.0;
  double total = 0.0;
};

inline RiskBreakdown exact_risk(const CoefficientVector& theta,
                                const ShrinkageProfile& profile, long n) {
  if (n < 1) throw std::invalid_argument("exact_risk: need n >= 1");
  RiskBreakdown risk;
  const std::size_t len = std::max(theta.size(), profile.tau.size());
  for (std::size_t l = 0; l < len; ++l) {
    const double tau = l < profile.tau.size() ? profile.tau[l] : 0.0;
    const double th = l < theta.size() ? theta[l] : 0.0;
    risk.variance += tau * tau;
    risk.bias_sq += (1.0 - tau) * (1.0 - tau) * th * th;
  }
  risk.variance /= static_cast<double>(n);
  risk.total = risk.variance + risk.bias_sq;
  return risk;
}

// Unbiased estimate of Sum E(theta_hat_l - theta_l)^2 - Sum theta_l^2:
//   Sum [ (tau_l^2 - 2 tau_l) y_l^2 + (2/n) tau_l ].
inline double unbiased_risk_estimate(const SequenceObservations& obs,
                                     const ShrinkageProfile& profile) {
  if (profile.tau.size() != obs.y.size())
    throw std::invalid_argument(
        "unbiased_risk_estimate: profile/observation length mismatch");
  const double two_over_n = 2.0 / static_cast<double>(obs.n);
  double acc = 0.0;
  for (std::size_t l = 0; l < obs.y.size(); ++l) {
    const double tau = profile.tau[l];
    acc += (tau * tau - 2.0 * tau) * obs.y[l] * obs.y[l] + two_over_n * tau;
  }
  return acc;
}

struct TuningGrid {
  std::vector<double> lambdas;
  std::vector<double> omegas;  // smoothness parameter values (omega or alpha)
};

// Default lambda grid: 50 points log-spaced on [1e-8, 1].
inline std::vector<double> default_lambda_grid() {
  std::vector<double> grid(50);
  const double lo = std::log(1e-8);
  for (std::size_t i = 0; i < grid.size(); ++i)
    grid[i] = std::exp(lo * (1.0 - static_cast<double>(i) / 49.0));
  return grid;
}

struct TuneResult {
  double lambda_star = 0.0;
  double omega_star = 0.0;
  double score = 0.0;
  CoefficientVector estimate;
};

enum class PenaltyFamily { periodic_gaussian, analytic };

// Exhaustive minimization of the unbiased risk estimate over the grid.
// Ties break toward larger lambda, then smaller omega.
inline TuneResult tune(const SequenceObservations& obs, const TuningGrid& grid,
                       PenaltyFamily family = PenaltyFamily::periodic_gaussian) {
  if (grid.lambdas.empty() || grid.omegas.empty())
    throw std::invalid_argument("tune: empty grid");
  if (obs.y.empty()) throw std::invalid_argument("tune: empty observations");
  const std::size_t truncation = obs.y.size() - 1;

  TuneResult best;
  double best_score = std::numeric_limits<double>::infinity();
  bool first = true;
  for (double omega : grid.omegas) {
    const PenaltySpec penalty =
        family == PenaltyFamily::periodic_gaussian
            ? PenaltySpec::periodic_gaussian(omega)
            : PenaltySpec::analytic(omega);
    for (double lambda : grid.lambdas) {
      const ShrinkageProfile profile =
          shrink_weights(lambda, penalty, truncation);
      const double score = unbiased_risk_estimate(obs, profile);
      const bool wins =
          first || score < best_score ||
          (score == best_score &&
           (lambda > best.lambda_star ||
            (lambda == best.lambda_star && omega < best.omega_star)));
      if (wins) {
        first = false;
        best_score = score;
        best.lambda_star = lambda;
        best.omega_star = omega;
        best.score = score;
        best.estimate = apply(profile, obs);
      }
    }
  }
  return best;
}

// Exact variance term of the periodic Gaussian filter, (1/n) Sum tau_l^2,
// summed until the terms fall below 1e-32.
inline double variance_sum(double lambda, double omega, long n) {
  if (lambda <= 0.0) throw std::domain_error("variance_sum: need lambda > 0");
  if (n < 1) throw std::invalid_argument("variance_sum: need n >= 1");
  const PenaltySpec penalty = PenaltySpec::periodic_gaussian(omega);
  double acc = 0.0;
  for (std::size_t l = 0;; ++l) {
    if (l >= detail::kMaxProfileLength)
      throw std::length_error("variance_sum: series did not converge");
    const double tau = 1.0 / (1.0 + lambda * penalty_weight(penalty, l));
    acc += tau * tau;
    if (l % 2 == 0 && l > 0 && tau * tau < 1e-32) break;
  }
  return acc / static_cast<double>(n);
}

// Leading-order form of the same variance sum as lambda -> 0:
//   2 sqrt(2) / (omega n) * sqrt(-log lambda).
inline double asymptotic_variance(double lambda, double omega, long n) {
  if (lambda <= 0.0 || lambda >= 1.0)
    throw std::domain_error("asymptotic_variance: need 0 < lambda < 1");
  if (omega <= 0.0)
    throw std::domain_error("asymptotic_variance: need omega > 0");
  if (n < 1) throw std::invalid_argument("asymptotic_variance: need n >= 1");
  return 2.0 * std::sqrt(2.0) / (omega * static_cast<double>(n)) *
         std::sqrt(-std::log(lambda));
}

}  // namespace pgreg
