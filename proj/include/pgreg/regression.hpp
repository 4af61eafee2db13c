#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "pgreg/kernels.hpp"

namespace pgreg {

struct RegressionData {
  std::vector<double> x;
  std::vector<double> y;

  std::size_t size() const { return x.size(); }
  void validate() const {
    if (x.size() != y.size())
      throw std::invalid_argument("RegressionData: x/y length mismatch");
    if (x.size() < 2) throw std::invalid_argument("RegressionData: need n >= 2");
    for (double v : x)
      if (!std::isfinite(v))
        throw std::invalid_argument("RegressionData: non-finite x");
    for (double v : y)
      if (!std::isfinite(v))
        throw std::invalid_argument("RegressionData: non-finite y");
  }
};

enum class FitVariant { penalized, unpenalized_constant };

struct FitResult {
  std::vector<double> design;
  std::vector<double> coefficients;
  double intercept = 0.0;
  std::vector<double> fitted;
  double smoother_trace = 0.0;
  double lambda = 0.0;
  KernelSpec spec;
  FitVariant variant = FitVariant::penalized;
  double cp = 0.0;  // score at sigma_sq = 1
};

// Eigendecomposition of a Gram matrix, shared across a whole lambda path.
// With K = V diag(d) V', the penalized solution is a diagonal filter
// d_i / (d_i + lambda) in the eigenbasis, so every smoothing quantity
// (fit, residual sum, trace) is O(n) per lambda once y is rotated.
//
// The constant-unpenalized variant solves
//   (K + lambda I) c + b 1 = y,   1'c = 0,
// whose eigenbasis form only involves w = V'1. On an equidistant design
// 1 is itself an eigenvector and this reduces to forcing that direction's
// filter entry to one.
class KernelEigen {
 public:
  KernelEigen(const std::vector<double>& design, const KernelSpec& spec)
      : design_(design), spec_(spec) {
    const Eigen::MatrixXd k = gram(design, spec);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(k);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("KernelEigen: eigendecomposition failed");
    vectors_ = solver.eigenvectors();
    values_ = solver.eigenvalues();
    ones_spectral_ = vectors_.transpose() * Eigen::VectorXd::Ones(values_.size());
  }

  const std::vector<double>& design() const { return design_; }
  const KernelSpec& spec() const { return spec_; }
  const Eigen::VectorXd& eigenvalues() const { return values_; }
  Eigen::Index size() const { return values_.size(); }

  Eigen::VectorXd to_spectral(const Eigen::VectorXd& v) const {
    return vectors_.transpose() * v;
  }
  Eigen::VectorXd from_spectral(const Eigen::VectorXd& v) const {
    return vectors_ * v;
  }

  // Fitted values in the eigenbasis plus the smoother trace and intercept.
  struct SpectralFit {
    Eigen::VectorXd fitted;
    Eigen::VectorXd coeffs;  // c in the eigenbasis
    double intercept = 0.0;
    double trace = 0.0;
  };

  SpectralFit solve_spectral(const Eigen::VectorXd& y_spectral, double lambda,
                             FitVariant variant) const {
    if (lambda <= 0.0) throw std::invalid_argument("solve: need lambda > 0");
    const Eigen::Index n = values_.size();
    SpectralFit fit;
    fit.fitted.resize(n);
    fit.coeffs.resize(n);
    if (variant == FitVariant::penalized) {
      double trace = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        const double denom = values_[i] + lambda;
        fit.coeffs[i] = y_spectral[i] / denom;
        fit.fitted[i] = values_[i] * fit.coeffs[i];
        trace += values_[i] / denom;
      }
      fit.trace = trace;
      return fit;
    }
    double a = 0.0;
    double wy = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double denom = values_[i] + lambda;
      a += ones_spectral_[i] * ones_spectral_[i] / denom;
      wy += ones_spectral_[i] * y_spectral[i] / denom;
    }
    if (!(a > 0.0))
      throw std::runtime_error("solve: singular constant direction");
    const double b = wy / a;
    double trace = 0.0;
    double w_sq = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double denom = values_[i] + lambda;
      fit.coeffs[i] = (y_spectral[i] - b * ones_spectral_[i]) / denom;
      fit.fitted[i] = values_[i] * fit.coeffs[i] + b * ones_spectral_[i];
      trace += values_[i] / denom;
      w_sq += ones_spectral_[i] * ones_spectral_[i] / (denom * denom);
    }
    fit.intercept = b;
    fit.trace = trace + lambda * w_sq / a;
    return fit;
  }

  struct PathScore {
    double rss = 0.0;
    double trace = 0.0;
    double cp = 0.0;
  };

  PathScore cp_path(const Eigen::VectorXd& y_spectral, double lambda,
                    FitVariant variant, double sigma_sq = 1.0) const {
    const SpectralFit fit = solve_spectral(y_spectral, lambda, variant);
    const double n = static_cast<double>(values_.size());
    PathScore score;
    score.rss = (y_spectral - fit.fitted).squaredNorm();
    score.trace = fit.trace;
    score.cp = score.rss / n + 2.0 * sigma_sq * score.trace / n;
    return score;
  }

  // Averaged squared error against a truth vector, both in the eigenbasis.
  double ase_path(const Eigen::VectorXd& y_spectral,
                  const Eigen::VectorXd& truth_spectral, double lambda,
                  FitVariant variant) const {
    const SpectralFit fit = solve_spectral(y_spectral, lambda, variant);
    return (fit.fitted - truth_spectral).squaredNorm() /
           static_cast<double>(values_.size());
  }

  FitResult fit(const RegressionData& data, double lambda, FitVariant variant,
                double sigma_sq = 1.0) const {
    const Eigen::Index n = values_.size();
    if (static_cast<Eigen::Index>(data.y.size()) != n)
      throw std::invalid_argument("fit: data size mismatch");
    const Eigen::VectorXd y =
        Eigen::Map<const Eigen::VectorXd>(data.y.data(), n);
    const Eigen::VectorXd y_spectral = to_spectral(y);
    const SpectralFit sf = solve_spectral(y_spectral, lambda, variant);

    FitResult result;
    result.design = design_;
    result.spec = spec_;
    result.lambda = lambda;
    result.variant = variant;
    result.intercept = sf.intercept;
    result.smoother_trace = sf.trace;
    const Eigen::VectorXd c = from_spectral(sf.coeffs);
    const Eigen::VectorXd fitted = from_spectral(sf.fitted);
    result.coefficients.assign(c.data(), c.data() + n);
    result.fitted.assign(fitted.data(), fitted.data() + n);
    const double rss = (y - fitted).squaredNorm();
    result.cp = rss / static_cast<double>(n) +
                2.0 * sigma_sq * sf.trace / static_cast<double>(n);
    return result;
  }

 private:
  std::vector<double> design_;
  KernelSpec spec_;
  Eigen::MatrixXd vectors_;
  Eigen::VectorXd values_;
  Eigen::VectorXd ones_spectral_;
};

inline FitResult fit_penalized(const RegressionData& data,
                               const KernelSpec& spec, double lambda) {
  data.validate();
  return KernelEigen(data.x, spec).fit(data, lambda, FitVariant::penalized);
}

inline FitResult fit_unpenalized_constant(const RegressionData& data,
                                          const KernelSpec& spec,
                                          double lambda) {
  data.validate();
  return KernelEigen(data.x, spec)
      .fit(data, lambda, FitVariant::unpenalized_constant);
}

inline double cp_score(const FitResult& fit, const RegressionData& data,
                       double sigma_sq = 1.0) {
  if (fit.fitted.size() != data.y.size())
    throw std::invalid_argument("cp_score: fit/data size mismatch");
  const double n = static_cast<double>(data.y.size());
  double rss = 0.0;
  for (std::size_t j = 0; j < data.y.size(); ++j) {
    const double r = data.y[j] - fit.fitted[j];
    rss += r * r;
  }
  return rss / n + 2.0 * sigma_sq * fit.smoother_trace / n;
}

inline double predict(const FitResult& fit, double x_new) {
  double acc = fit.intercept;
  for (std::size_t j = 0; j < fit.design.size(); ++j)
    acc += fit.coefficients[j] * kernel_eval(fit.spec, fit.design[j] - x_new);
  return acc;
}

inline double average_squared_error(const std::vector<double>& fitted,
                                    const std::vector<double>& truth) {
  if (fitted.size() != truth.size())
    throw std::invalid_argument("average_squared_error: length mismatch");
  double acc = 0.0;
  for (std::size_t j = 0; j < fitted.size(); ++j) {
    const double d = fitted[j] - truth[j];
    acc += d * d;
  }
  return acc / static_cast<double>(fitted.size());
}

inline double average_squared_error(const FitResult& fit,
                                    const std::vector<double>& truth) {
  return average_squared_error(fit.fitted, truth);
}

template <class F>
  requires std::invocable<F&, double>
double average_squared_error(const FitResult& fit, F&& truth) {
  std::vector<double> values(fit.design.size());
  for (std::size_t j = 0; j < fit.design.size(); ++j)
    values[j] = truth(fit.design[j]);
  return average_squared_error(fit.fitted, values);
}

struct TunedFit {
  FitResult fit;
  double lambda_star = 0.0;
  double omega_star = 0.0;  // 0 for the spline kernel
  double cp_star = 0.0;
};

// Exhaustive C_p minimization over (lambda, omega). One eigendecomposition
// per omega serves the whole lambda path. Ties break toward larger lambda,
// then smaller omega. The spline kernel has no omega; pass it an empty
// omega grid or ignore the grid contents.
inline TunedFit tune_fit(const RegressionData& data, KernelKind kind,
                         const std::vector<double>& lambda_grid,
                         const std::vector<double>& omega_grid,
                         FitVariant variant, double sigma_sq = 1.0) {
  data.validate();
  if (lambda_grid.empty()) throw std::invalid_argument("tune_fit: empty grid");
  if (kind != KernelKind::periodic_spline && omega_grid.empty())
    throw std::invalid_argument("tune_fit: empty omega grid");

  const Eigen::VectorXd y = Eigen::Map<const Eigen::VectorXd>(
      data.y.data(), static_cast<Eigen::Index>(data.y.size()));

  double best_cp = std::numeric_limits<double>::infinity();
  double best_lambda = 0.0;
  double best_omega = 0.0;
  bool first = true;
  const KernelEigen* best_eigen = nullptr;

  std::vector<KernelEigen> eigens;
  if (kind == KernelKind::periodic_spline) {
    eigens.emplace_back(data.x, KernelSpec::periodic_spline());
  } else {
    eigens.reserve(omega_grid.size());
    for (double omega : omega_grid)
      eigens.emplace_back(data.x, kind == KernelKind::periodic_gaussian
                                      ? KernelSpec::periodic_gaussian(omega)
                                      : KernelSpec::plain_gaussian(omega));
  }

  for (const KernelEigen& eigen : eigens) {
    const double omega = eigen.spec().omega;
    const Eigen::VectorXd y_spectral = eigen.to_spectral(y);
    for (double lambda : lambda_grid) {
      const double cp = eigen.cp_path(y_spectral, lambda, variant, sigma_sq).cp;
      const bool wins = first || cp < best_cp ||
                        (cp == best_cp &&
                         (lambda > best_lambda ||
                          (lambda == best_lambda && omega < best_omega)));
      if (wins) {
        first = false;
        best_cp = cp;
        best_lambda = lambda;
        best_omega = omega;
        best_eigen = &eigen;
      }
    }
  }

  TunedFit result;
  result.fit = best_eigen->fit(data, best_lambda, variant, sigma_sq);
  result.lambda_star = best_lambda;
  result.omega_star = best_omega;
  result.cp_star = best_cp;
  return result;
}

}  // namespace pgreg
