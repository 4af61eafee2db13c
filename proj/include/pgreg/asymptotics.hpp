#pragma once

#include <cmath>
#include <stdexcept>

namespace pgreg {

// Closed-form leading-order risk expressions for the periodic Gaussian
// regularization estimator and the corresponding minimax baselines.

// Minimax risk over the infinite-order class H_omega^infinity:
//   2 sqrt(2) / (omega n) * sqrt(log n).
inline double asymptotic_minimax_Hinf(double omega, long n) {
  if (omega <= 0.0)
    throw std::domain_error("asymptotic_minimax_Hinf: need omega > 0");
  if (n < 2) throw std::domain_error("asymptotic_minimax_Hinf: need n >= 2");
  return 2.0 * std::sqrt(2.0) / (omega * static_cast<double>(n)) *
         std::sqrt(std::log(static_cast<double>(n)));
}

// Risk of the periodic Gaussian estimator over the Sobolev ellipsoid
// H^m(Q), at the optimal lambda:
//   (2m+1) m^{-2m/(2m+1)} Q^{1/(2m+1)} n^{-2m/(2m+1)}.
inline double gauss_risk_Hm(double m, double q, long n) {
  if (m < 1.0) throw std::domain_error("gauss_risk_Hm: need m >= 1");
  if (q <= 0.0) throw std::domain_error("gauss_risk_Hm: need Q > 0");
  if (n < 1) throw std::domain_error("gauss_risk_Hm: need n >= 1");
  const double r = 2.0 * m / (2.0 * m + 1.0);
  return (2.0 * m + 1.0) * std::pow(m, -r) * std::pow(q, 1.0 / (2.0 * m + 1.0)) *
         std::pow(static_cast<double>(n), -r);
}

// The lambda achieving it: log(1/lambda) = omega^2 (m n Q)^{2/(2m+1)} / 2.
inline double optimal_log_inv_lambda_Hm(double m, double q, long n,
                                        double omega) {
  if (m < 1.0) throw std::domain_error("optimal_log_inv_lambda_Hm: need m >= 1");
  if (q <= 0.0) throw std::domain_error("optimal_log_inv_lambda_Hm: need Q > 0");
  if (n < 1) throw std::domain_error("optimal_log_inv_lambda_Hm: need n >= 1");
  if (omega <= 0.0)
    throw std::domain_error("optimal_log_inv_lambda_Hm: need omega > 0");
  return 0.5 * omega * omega *
         std::pow(m * static_cast<double>(n) * q, 2.0 / (2.0 * m + 1.0));
}

// Minimax risk over H^m(Q):
//   [2m/(m+1)]^{2m/(2m+1)} (2m+1)^{1/(2m+1)} Q^{1/(2m+1)} n^{-2m/(2m+1)}.
inline double minimax_Hm(double m, double q, long n) {
  if (m < 1.0) throw std::domain_error("minimax_Hm: need m >= 1");
  if (q <= 0.0) throw std::domain_error("minimax_Hm: need Q > 0");
  if (n < 1) throw std::domain_error("minimax_Hm: need n >= 1");
  const double r = 2.0 * m / (2.0 * m + 1.0);
  return std::pow(2.0 * m / (m + 1.0), r) *
         std::pow(2.0 * m + 1.0, 1.0 / (2.0 * m + 1.0)) *
         std::pow(q, 1.0 / (2.0 * m + 1.0)) *
         std::pow(static_cast<double>(n), -r);
}

// Risk of the analytic-penalty estimator over the analytic class A_alpha:
//   2 log n / (alpha n), with log(1/lambda) = omega^2 (log n)^2 / (2 alpha^2).
inline double risk_analytic(double alpha, long n) {
  if (alpha <= 0.0) throw std::domain_error("risk_analytic: need alpha > 0");
  if (n < 2) throw std::domain_error("risk_analytic: need n >= 2");
  return 2.0 * std::log(static_cast<double>(n)) /
         (alpha * static_cast<double>(n));
}

inline double optimal_log_inv_lambda_analytic(double alpha, long n,
                                              double omega) {
  if (alpha <= 0.0)
    throw std::domain_error("optimal_log_inv_lambda_analytic: need alpha > 0");
  if (n < 2)
    throw std::domain_error("optimal_log_inv_lambda_analytic: need n >= 2");
  if (omega <= 0.0)
    throw std::domain_error("optimal_log_inv_lambda_analytic: need omega > 0");
  const double logn = std::log(static_cast<double>(n));
  return 0.5 * omega * omega * logn * logn / (alpha * alpha);
}

// Efficiency of the periodic Gaussian estimator relative to the minimax
// rule on H^m(Q). Both risks scale as C n^{-2m/(2m+1)}, so equal risk at
// constants C_minimax < C_gauss needs sample sizes in the ratio
// (C_gauss / C_minimax)^{(2m+1)/(2m)}; the sample efficiency is the
// reciprocal. Q cancels from the ratio.
struct Efficiency {
  double risk_ratio = 1.0;         // C_gauss / C_minimax, same n
  double sample_efficiency = 1.0;  // n_minimax / n_gauss at equal risk
};

inline Efficiency efficiency_Hm(double m) {
  if (m < 1.0) throw std::domain_error("efficiency_Hm: need m >= 1");
  const double ratio = gauss_risk_Hm(m, 1.0, 1) / minimax_Hm(m, 1.0, 1);
  return {ratio, std::pow(ratio, -(2.0 * m + 1.0) / (2.0 * m))};
}

}  // namespace pgreg
